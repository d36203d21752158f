#include "unimod/poly.hpp"

#include <sstream>

#include "unimod/errors.hpp"

namespace unimod {

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

UnivariatePoly::UnivariatePoly(std::initializer_list<std::pair<const int, mpq_class>> terms) {
  for (const auto& [e, c] : terms) add(e, c);
}

UnivariatePoly UnivariatePoly::constant(const mpq_class& c) { return monomial(0, c); }

UnivariatePoly UnivariatePoly::monomial(int exponent, const mpq_class& c) {
  UnivariatePoly p;
  p.set(exponent, c);
  return p;
}

mpq_class UnivariatePoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void UnivariatePoly::set(int exponent, const mpq_class& c) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  if (sgn(c) == 0)
    terms_.erase(exponent);
  else {
    mpq_class& slot = terms_[exponent];
    slot = c;
    slot.canonicalize();
  }
}

void UnivariatePoly::add(int exponent, const mpq_class& c) { set(exponent, coefficient(exponent) + c); }

int UnivariatePoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

bool UnivariatePoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool UnivariatePoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (sgn(c) < 0) return false;
  return true;
}

mpq_class UnivariatePoly::coefficient_sum() const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

mpq_class UnivariatePoly::evaluate(const mpq_class& y) const {
  mpq_class acc = 0;
  int prev = degree();
  // Horner over the sparse exponents, highest first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= y;
    acc += it->second;
    prev = it->first;
  }
  for (int k = 0; k < prev; ++k) acc *= y;
  return acc;
}

UnivariatePoly UnivariatePoly::pow(unsigned e) const {
  UnivariatePoly result = constant(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, -c);
  return r;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::map<int, mpq_class> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  UnivariatePoly r;
  for (const auto& [e, c] : acc) r.set(e, c);
  return r;
}

UnivariatePoly operator*(const mpq_class& c, const UnivariatePoly& a) {
  UnivariatePoly r;
  for (const auto& [e, v] : a.terms_) r.set(e, c * v);
  return r;
}

std::string UnivariatePoly::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << rational_to_string(mag);
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

// --- TrivariatePoly -------------------------------------------------------

TrivariatePoly::TrivariatePoly(int degree) : degree_(degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  coeffs_.resize(static_cast<std::size_t>(degree + 1) * (degree + 2) / 2);
}

std::size_t TrivariatePoly::index(int i, int j) const {
  // rows by i; row i holds j = 0..d-i
  const int d = degree_;
  const std::size_t before = static_cast<std::size_t>(i) * (2 * d + 3 - i) / 2;
  return before + static_cast<std::size_t>(j);
}

TrivariatePoly TrivariatePoly::monomial(int i, int j, int l, const mpq_class& c) {
  TrivariatePoly p(i + j + l);
  p.set(i, j, l, c);
  return p;
}

const mpq_class& TrivariatePoly::coefficient(int i, int j, int l) const {
  static const mpq_class zero = 0;
  if (i < 0 || j < 0 || l < 0 || i + j + l != degree_) return zero;
  return coeffs_[index(i, j)];
}

void TrivariatePoly::set(int i, int j, int l, const mpq_class& c) {
  if (i < 0 || j < 0 || l < 0 || i + j + l != degree_) throw InvalidArgument("monomial degree mismatch");
  mpq_class& slot = coeffs_[index(i, j)];
  slot = c;
  slot.canonicalize();
}

bool TrivariatePoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

std::size_t TrivariatePoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += sgn(c) != 0;
  return n;
}

bool TrivariatePoly::has_nonnegative_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (sgn(c) < 0 || c.get_den() != 1) return false;
  return true;
}

mpq_class TrivariatePoly::evaluate(const mpq_class& x, const mpq_class& y, const mpq_class& z) const {
  auto power = [](const mpq_class& b, int e) {
    mpq_class r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  };
  mpq_class acc = 0;
  for_each_term([&](int i, int j, int l, const mpq_class& c) { acc += c * power(x, i) * power(y, j) * power(z, l); });
  return acc;
}

UnivariatePoly TrivariatePoly::hamming_specialization() const {
  UnivariatePoly p;
  for_each_term([&](int, int j, int l, const mpq_class& c) { p.add(j + l, c); });
  return p;
}

TrivariatePoly TrivariatePoly::pow(unsigned e) const {
  TrivariatePoly result = monomial(0, 0, 0, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

TrivariatePoly operator+(const TrivariatePoly& a, const TrivariatePoly& b) {
  if (a.degree_ != b.degree_) throw InvalidArgument("adding polynomials of different degree");
  TrivariatePoly r = a;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  return r;
}

TrivariatePoly operator-(const TrivariatePoly& a, const TrivariatePoly& b) {
  if (a.degree_ != b.degree_) throw InvalidArgument("subtracting polynomials of different degree");
  TrivariatePoly r = a;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] -= b.coeffs_[k];
  return r;
}

TrivariatePoly operator*(const TrivariatePoly& a, const TrivariatePoly& b) {
  TrivariatePoly r(a.degree_ + b.degree_);
  a.for_each_term([&](int i1, int j1, int, const mpq_class& c1) {
    b.for_each_term([&](int i2, int j2, int, const mpq_class& c2) {
      r.coeffs_[r.index(i1 + i2, j1 + j2)] += c1 * c2;
    });
  });
  return r;
}

TrivariatePoly operator*(const mpq_class& c, const TrivariatePoly& a) {
  TrivariatePoly r = a;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

bool operator==(const TrivariatePoly& a, const TrivariatePoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string TrivariatePoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for_each_term([&](int i, int j, int l, const mpq_class& c) {
    mpq_class mag = abs(c);
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool bare = i == 0 && j == 0 && l == 0;
    if (mag != 1 || bare) out << rational_to_string(mag);
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      out << name;
      if (e != 1) out << "^" << e;
    };
    var("x", i);
    var("y", j);
    var("z", l);
  });
  return first ? "0" : out.str();
}

}  // namespace unimod
