#include <doctest.h>

#include <random>

#include "support.hpp"
#include "unimod/errors.hpp"
#include "unimod/matrix.hpp"

using namespace unimod;

TEST_CASE("hermite normal form of a small matrix") {
  const IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const IntMatrix h = hermite_normal_form(a);
  CHECK(h == IntMatrix::from_rows({{2, 4, 4}, {0, 6, 0}, {0, 0, 12}}, 3));
}

TEST_CASE("hermite normal form drops dependent rows and keeps the row lattice") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = testing_support::random_nonsingular(rng, 4, -6, 6);
    IntMatrix stacked = a;
    std::vector<Int> sum(4);
    for (std::size_t j = 0; j < 4; ++j) sum[j] = a(0, j) + 3 * a(2, j);
    stacked.append_row(sum);
    const IntMatrix h = hermite_normal_form(stacked);
    REQUIRE(h.rows() == 4);
    CHECK(abs(determinant(h)) == abs(determinant(a)));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(h(i, i) > 0);
      for (std::size_t k = 0; k < i; ++k) CHECK(h(i, k) == 0);
      for (std::size_t k = 0; k < i; ++k) CHECK((h(k, i) >= 0 && h(k, i) < h(i, i)));
    }
    // Rows of a are integer combinations of rows of h.
    const RationalMatrix hinv = inverse(RationalMatrix(h));
    for (std::size_t i = 0; i < 4; ++i)
      for (const auto& c : apply_row(to_rational(a.row(i)), hinv)) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("determinant and inverse agree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix a = testing_support::random_nonsingular(rng, 5, -4, 4);
    const RationalMatrix r(a);
    CHECK(mpq_class(determinant(a)) == determinant(r));
    CHECK(r * inverse(r) == RationalMatrix::identity(5));
  }
  CHECK_THROWS_AS(inverse(RationalMatrix(IntMatrix(2, 2))), InvalidArgument);
}

TEST_CASE("integer product overflow is detected") {
  IntMatrix a(1, 2);
  a(0, 0) = a(0, 1) = std::int64_t{1} << 62;
  CHECK_THROWS_AS(a * a.transpose(), Overflow);
}

TEST_CASE("left kernel modulo 2") {
  const IntMatrix a = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
  const Mod2Kernel k = mod2_left_kernel(a);
  CHECK(k.rank == 2);
  REQUIRE(k.left_kernel.size() == 1);
  CHECK(k.left_kernel[0] == std::vector<std::uint8_t>{1, 1, 1});
}

TEST_CASE("row reduction finds pivots") {
  std::vector<std::vector<mpq_class>> m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto pivots = row_reduce(m, 2);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(m[0][2] == 1);
  CHECK(m[1][2] == 1);
  CHECK(m[2][2] == 0);
}
