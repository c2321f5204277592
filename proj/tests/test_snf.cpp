#include <doctest.h>

#include <random>

#include "garside/snf.hpp"

using namespace garside;

namespace {

IntMatrix from(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<long long>(rows.size()),
              rows.size() ? static_cast<long long>(rows.begin()->size()) : 0);
  long long i = 0;
  for (const auto& row : rows) {
    long long j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  CHECK(smith_normal_form(from({{2, 0}, {0, 3}})).factors ==
        std::vector<long long>{1, 6});
  CHECK(smith_normal_form(IntMatrix(3, 4)).factors.empty());
  CHECK(smith_normal_form(IntMatrix::identity(3)).factors ==
        std::vector<long long>{1, 1, 1});
  CHECK(smith_normal_form(from({{6}})).factors == std::vector<long long>{6});
  CHECK(smith_normal_form(from({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})).factors ==
        std::vector<long long>{2, 2, 156});
}

TEST_CASE("invariant factors form a divisibility chain") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 6);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix m(size(rng), size(rng));
    for (auto& x : m.a) x = entry(rng);
    SmithResult s = smith_normal_form(m);
    for (size_t i = 0; i + 1 < s.factors.size(); ++i) {
      CHECK(s.factors[i] > 0);
      CHECK(s.factors[i + 1] % s.factors[i] == 0);
    }
  }
}

TEST_CASE("transforms are unimodular and diagonalize") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> size(1, 5);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix m(size(rng), size(rng));
    for (auto& x : m.a) x = entry(rng);
    SmithResult s = smith_normal_form(m, true);
    REQUIRE(s.u);
    REQUIRE(s.v);

    IntMatrix d = s.u->mul(m).mul(*s.v);
    for (long long i = 0; i < d.rows; ++i)
      for (long long j = 0; j < d.cols; ++j) {
        long long expect =
            (i == j && i < static_cast<long long>(s.factors.size()))
                ? s.factors[i]
                : 0;
        CHECK(d(i, j) == expect);
      }

    // unimodular <=> all invariant factors are 1
    auto all_ones = [](const std::vector<long long>& f, long long n) {
      return static_cast<long long>(f.size()) == n &&
             std::all_of(f.begin(), f.end(), [](long long x) { return x == 1; });
    };
    CHECK(all_ones(smith_normal_form(*s.u).factors, s.u->rows));
    CHECK(all_ones(smith_normal_form(*s.v).factors, s.v->rows));
  }
}

TEST_CASE("transpose has the same invariant factors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix m(4, 6);
    for (auto& x : m.a) x = entry(rng);
    CHECK(smith_normal_form(m).factors ==
          smith_normal_form(m.transposed()).factors);
  }
}

TEST_CASE("checked arithmetic overflows loudly") {
  const long long big = 0x4000'0000'0000'0000LL;
  CHECK_THROWS_AS((void)checked_mul(big, 4), OverflowWithoutBigInt);
  CHECK_THROWS_AS((void)checked_add(big, big), OverflowWithoutBigInt);
  CHECK(checked_mul(1LL << 31, 2) == (1LL << 32));
}
