#include "unimod/matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "unimod/errors.hpp"

namespace unimod {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(std::span<const Int> values) {
  if (values.size() != cols_) throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<__int128>(a(i, k)) * b(k, j);
      if (acc > std::numeric_limits<Int>::max() || acc < std::numeric_limits<Int>::min())
        throw Overflow("integer matrix product overflows 64 bits");
      c(i, j) = static_cast<Int>(acc);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (__builtin_add_overflow(a(i, j), b(i, j), &c(i, j))) throw Overflow("integer matrix sum overflows 64 bits");
  return c;
}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = mpq_class(static_cast<long>(m(i, j)));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

using MpzRow = std::vector<mpz_class>;

// floor(a / b) for b > 0
mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(MpzRow& dst, const mpz_class& q, const MpzRow& src, std::size_t from) {
  for (std::size_t j = from; j < dst.size(); ++j) dst[j] -= q * src[j];
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<MpzRow> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    MpzRow r(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = static_cast<long>(a(i, j));
      nonzero = nonzero || a(i, j) != 0;
    }
    if (nonzero) rows.push_back(std::move(r));
  }

  std::size_t pivot = 0;
  for (std::size_t col = 0; col < n && pivot < rows.size(); ++col) {
    // Euclid on the column below the pivot row.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        if (best == rows.size() || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot], rows[best]);
      bool done = true;
      for (std::size_t i = pivot + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
        axpy(rows[i], q, rows[pivot], col);
        if (sgn(rows[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[pivot][col]) == 0) continue;
    if (sgn(rows[pivot][col]) < 0)
      for (auto& v : rows[pivot]) v = -v;
    for (std::size_t i = 0; i < pivot; ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      axpy(rows[i], floor_div(rows[i][col], rows[pivot][col]), rows[pivot], col);
    }
    ++pivot;
  }

  IntMatrix h(0, n);
  std::vector<Int> buf(n);
  for (std::size_t i = 0; i < pivot; ++i) {
    for (std::size_t j = 0; j < n; ++j) buf[j] = to_int(rows[i][j]);
    h.append_row(buf);
  }
  return h;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<MpzRow> m(n, MpzRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      mpq_class f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) throw InvalidArgument("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    mpq_class piv = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(m(i, k)) == 0) continue;
      mpq_class f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RationalVector apply_row(std::span<const mpq_class> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw InvalidArgument("vector/matrix dimension mismatch");
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

RationalVector to_rational(std::span<const Int> v) {
  RationalVector out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

mpz_class common_denominator(std::span<const mpq_class> values) {
  mpz_class d = 1;
  for (const auto& q : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

mpz_class common_denominator(const RationalMatrix& m) {
  mpz_class d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
  return d;
}

Int to_int(const mpz_class& value) {
  if (!value.fits_slong_p()) throw Overflow("integer does not fit in 64 bits");
  return static_cast<Int>(value.get_si());
}

Int checked_dot(std::span<const Int> a, std::span<const Int> b) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  if (acc > std::numeric_limits<Int>::max() || acc < std::numeric_limits<Int>::min())
    throw Overflow("inner product overflows 64 bits");
  return static_cast<Int>(acc);
}

Mod2Kernel mod2_left_kernel(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  // Augment [a mod 2 | I_r] and eliminate on the left block.
  std::vector<std::vector<std::uint8_t>> m(r, std::vector<std::uint8_t>(c + r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m[i][j] = static_cast<std::uint8_t>(a(i, j) & 1);
    m[i][c + i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t p = rank;
    while (p < r && !m[p][col]) ++p;
    if (p == r) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = 0; i < r; ++i)
      if (i != rank && m[i][col])
        for (std::size_t j = 0; j < c + r; ++j) m[i][j] ^= m[rank][j];
    ++rank;
  }
  Mod2Kernel out;
  out.rank = rank;
  for (std::size_t i = rank; i < r; ++i) out.left_kernel.emplace_back(m[i].begin() + static_cast<std::ptrdiff_t>(c), m[i].end());
  return out;
}

std::vector<int> row_reduce(std::vector<std::vector<mpq_class>>& m, std::size_t vars) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < vars && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const mpq_class piv = m[r][c];
    for (auto& v : m[r]) v /= piv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace unimod
