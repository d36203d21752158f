#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace unimod {

using Int = std::int64_t;

/// Dense row-major matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Int> values);
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_integral() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

using RationalVector = std::vector<mpq_class>;

/// Row-style Hermite normal form of the row span of `a`: upper echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has rank(a) rows.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
mpz_class determinant(const IntMatrix& a);
mpq_class determinant(const RationalMatrix& a);

/// Inverse of a square rational matrix; throws InvalidArgument if singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Coordinates of `v` in the row basis `basis_inverse^-1`, i.e. v * basis_inverse.
RationalVector apply_row(std::span<const mpq_class> v, const RationalMatrix& m);
RationalVector to_rational(std::span<const Int> v);

/// Least common multiple of all denominators.
mpz_class common_denominator(std::span<const mpq_class> values);
mpz_class common_denominator(const RationalMatrix& m);

Int to_int(const mpz_class& value);
Int checked_dot(std::span<const Int> a, std::span<const Int> b);

/// Rank of an integer matrix reduced modulo 2, plus a basis of its left kernel
/// (rows y with y * a == 0 mod 2), all over the field with two elements.
struct Mod2Kernel {
  std::size_t rank = 0;
  std::vector<std::vector<std::uint8_t>> left_kernel;
};
Mod2Kernel mod2_left_kernel(const IntMatrix& a);

/// In-place reduced row echelon form over the first `vars` columns of the
/// rows of m (any further columns are carried along). Returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<mpq_class>>& m, std::size_t vars);

}  // namespace unimod
