#pragma once

#include <optional>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

// Dense integer matrix, row-major. All arithmetic on entries is
// overflow-checked 64-bit; exceeding the range throws OverflowWithoutBigInt.
struct IntMatrix {
  long long rows = 0;
  long long cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(long long r, long long c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

  long long& operator()(long long i, long long j) {
    return a[static_cast<size_t>(i) * cols + j];
  }
  long long operator()(long long i, long long j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static IntMatrix identity(long long n);
  IntMatrix transposed() const;
  IntMatrix mul(const IntMatrix& o) const;  // checked
  bool is_zero() const;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

struct SmithResult {
  // Nonzero invariant factors d_1 | d_2 | ..., all positive.
  std::vector<long long> factors;
  // Unimodular transforms with U * M * V = diag(factors), when requested.
  std::optional<IntMatrix> u, v;

  long long rank() const { return static_cast<long long>(factors.size()); }
};

SmithResult smith_normal_form(IntMatrix m, bool with_transforms = false);

}  // namespace garside
