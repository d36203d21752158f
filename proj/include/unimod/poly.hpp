#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unimod {

/// Polynomial in one variable with exact rational coefficients. Zero
/// coefficients are never stored.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  UnivariatePoly(std::initializer_list<std::pair<const int, mpq_class>> terms);
  static UnivariatePoly constant(const mpq_class& c);
  static UnivariatePoly monomial(int exponent, const mpq_class& c = 1);

  const std::map<int, mpq_class>& terms() const { return terms_; }
  mpq_class coefficient(int exponent) const;
  void set(int exponent, const mpq_class& c);
  void add(int exponent, const mpq_class& c);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  mpq_class coefficient_sum() const;
  mpq_class evaluate(const mpq_class& y) const;

  UnivariatePoly pow(unsigned e) const;

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const mpq_class& c, const UnivariatePoly& a);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.terms_ == b.terms_; }

  /// e.g. "1 + 63y^16 + 63y^20 + y^36"
  std::string to_string(const char* var = "y") const;

 private:
  std::map<int, mpq_class> terms_;
};

/// Homogeneous polynomial of fixed degree d in x, y, z, stored densely over
/// the (d+1)(d+2)/2 monomials x^i y^j z^(d-i-j).
class TrivariatePoly {
 public:
  explicit TrivariatePoly(int degree = 0);
  static TrivariatePoly monomial(int i, int j, int l, const mpq_class& c = 1);

  int degree() const { return degree_; }
  const mpq_class& coefficient(int i, int j, int l) const;
  void set(int i, int j, int l, const mpq_class& c);

  bool is_zero() const;
  std::size_t term_count() const;  // nonzero monomials
  bool has_nonnegative_integer_coefficients() const;
  mpq_class evaluate(const mpq_class& x, const mpq_class& y, const mpq_class& z) const;

  /// f(1, y, y) as a univariate polynomial.
  UnivariatePoly hamming_specialization() const;

  TrivariatePoly pow(unsigned e) const;

  template <typename F>
  void for_each_term(F&& f) const {
    for (int i = degree_; i >= 0; --i)
      for (int j = degree_ - i; j >= 0; --j) {
        const auto& c = coeffs_[index(i, j)];
        if (sgn(c) != 0) f(i, j, degree_ - i - j, c);
      }
  }

  friend TrivariatePoly operator+(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator-(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator*(const TrivariatePoly& a, const TrivariatePoly& b);
  friend TrivariatePoly operator*(const mpq_class& c, const TrivariatePoly& a);
  friend bool operator==(const TrivariatePoly& a, const TrivariatePoly& b);

  /// Monomials sorted by decreasing x exponent, then decreasing y exponent.
  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const;

  int degree_;
  std::vector<mpq_class> coeffs_;
};

/// "p/q" or "p" when integral.
std::string rational_to_string(const mpq_class& q);

}  // namespace unimod
