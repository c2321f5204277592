#include "garside/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace garside {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowWithoutBigInt("integer overflow in exact arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowWithoutBigInt("integer overflow in exact arithmetic");
  return r;
}

IntMatrix IntMatrix::identity(long long n) {
  IntMatrix m(n, n);
  for (long long i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols, rows);
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  IntMatrix m(rows, o.cols);
  for (long long i = 0; i < rows; ++i)
    for (long long k = 0; k < cols; ++k) {
      long long x = (*this)(i, k);
      if (x == 0) continue;
      for (long long j = 0; j < o.cols; ++j)
        m(i, j) = checked_add(m(i, j), checked_mul(x, o(k, j)));
    }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

namespace {

struct Worker {
  IntMatrix d;
  bool with;
  IntMatrix u, v;

  void swap_rows(long long i, long long j) {
    if (i == j) return;
    for (long long k = 0; k < d.cols; ++k) std::swap(d(i, k), d(j, k));
    if (with)
      for (long long k = 0; k < u.cols; ++k) std::swap(u(i, k), u(j, k));
  }
  void swap_cols(long long i, long long j) {
    if (i == j) return;
    for (long long k = 0; k < d.rows; ++k) std::swap(d(k, i), d(k, j));
    if (with)
      for (long long k = 0; k < v.rows; ++k) std::swap(v(k, i), v(k, j));
  }
  // row i += f * row j
  void add_row(long long i, long long j, long long f) {
    for (long long k = 0; k < d.cols; ++k)
      d(i, k) = checked_add(d(i, k), checked_mul(f, d(j, k)));
    if (with)
      for (long long k = 0; k < u.cols; ++k)
        u(i, k) = checked_add(u(i, k), checked_mul(f, u(j, k)));
  }
  void add_col(long long i, long long j, long long f) {
    for (long long k = 0; k < d.rows; ++k)
      d(k, i) = checked_add(d(k, i), checked_mul(f, d(k, j)));
    if (with)
      for (long long k = 0; k < v.rows; ++k)
        v(k, i) = checked_add(v(k, i), checked_mul(f, v(k, j)));
  }
  void negate_row(long long i) {
    for (long long k = 0; k < d.cols; ++k) d(i, k) = -d(i, k);
    if (with)
      for (long long k = 0; k < u.cols; ++k) u(i, k) = -u(i, k);
  }

  bool find_pivot(long long t, long long& pi, long long& pj) {
    long long best = 0;
    for (long long i = t; i < d.rows; ++i)
      for (long long j = t; j < d.cols; ++j) {
        long long x = std::llabs(d(i, j));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    return best != 0;
  }

  bool lone(long long t) {
    for (long long i = t + 1; i < d.rows; ++i)
      if (d(i, t) != 0) return false;
    for (long long j = t + 1; j < d.cols; ++j)
      if (d(t, j) != 0) return false;
    return true;
  }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m, bool with_transforms) {
  Worker w{std::move(m), with_transforms, {}, {}};
  if (with_transforms) {
    w.u = IntMatrix::identity(w.d.rows);
    w.v = IntMatrix::identity(w.d.cols);
  }

  long long nmin = std::min(w.d.rows, w.d.cols);
  for (long long t = 0; t < nmin; ++t) {
    long long pi, pj;
    if (!w.find_pivot(t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      // clear the pivot row and column
      bool reduced = true;
      for (long long i = t + 1; i < w.d.rows; ++i) {
        if (w.d(i, t) == 0) continue;
        w.add_row(i, t, -(w.d(i, t) / w.d(t, t)));
        if (w.d(i, t) != 0) reduced = false;
      }
      for (long long j = t + 1; j < w.d.cols; ++j) {
        if (w.d(t, j) == 0) continue;
        w.add_col(j, t, -(w.d(t, j) / w.d(t, t)));
        if (w.d(t, j) != 0) reduced = false;
      }
      if (!reduced || !w.lone(t)) {
        // remainders left; move a smaller entry into the pivot and repeat
        w.find_pivot(t, pi, pj);
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        continue;
      }
      // divisibility: the pivot must divide the rest of the block
      long long bi = -1;
      for (long long i = t + 1; i < w.d.rows && bi < 0; ++i)
        for (long long j = t + 1; j < w.d.cols; ++j)
          if (w.d(i, j) % w.d(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      w.add_row(t, bi, 1);
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }

  SmithResult result;
  for (long long t = 0; t < nmin; ++t)
    if (w.d(t, t) != 0) result.factors.push_back(w.d(t, t));
  if (with_transforms) {
    result.u = std::move(w.u);
    result.v = std::move(w.v);
  }
  return result;
}

}  // namespace garside
