#include "unimod/invariant_ring.hpp"

#include <string>

#include "unimod/errors.hpp"

namespace unimod {

const RingGenerators& ring_generators() {
  static const RingGenerators g = [] {
    RingGenerators r;
    r.a = TrivariatePoly::monomial(3, 0, 0) + TrivariatePoly::monomial(0, 3, 0) + TrivariatePoly::monomial(0, 0, 3);
    r.p = TrivariatePoly::monomial(1, 1, 1, 3);
    r.b = TrivariatePoly::monomial(3, 3, 0) + TrivariatePoly::monomial(3, 0, 3) + TrivariatePoly::monomial(0, 3, 3);
    const TrivariatePoly a3 = r.a.pow(3);
    const TrivariatePoly p3 = r.p.pow(3);
    r.alpha12 = r.a * (a3 + mpq_class(8) * p3);
    r.beta6 = r.a * r.a - mpq_class(12) * r.b;
    r.gamma18 = a3 * a3 - mpq_class(20) * a3 * p3 - mpq_class(8) * p3 * p3;
    r.delta36 = p3 * (a3 - p3).pow(3);
    return r;
  }();
  return g;
}

CweFamily::CweFamily(std::array<TrivariatePoly, 7> terms, std::array<mpq_class, 6> constant,
                     std::array<mpq_class, 6> slope)
    : terms_(std::move(terms)), constant_(std::move(constant)), slope_(std::move(slope)) {}

std::pair<mpq_class, mpq_class> CweFamily::relation(int i) const {
  if (i < 2 || i > 7) throw InvalidArgument("relation index must be in 2..7");
  return {constant_[static_cast<std::size_t>(i - 2)], slope_[static_cast<std::size_t>(i - 2)]};
}

mpq_class CweFamily::a(int i, const mpq_class& a1) const {
  if (i == 1) return a1;
  const auto [c, s] = relation(i);
  return c + s * a1;
}

std::pair<mpq_class, mpq_class> CweFamily::coefficient(int i, int j, int l) const {
  mpq_class c = 0;
  mpq_class s = terms_[0].coefficient(i, j, l);
  for (std::size_t k = 1; k < 7; ++k) {
    const mpq_class& t = terms_[k].coefficient(i, j, l);
    c += constant_[k - 1] * t;
    s += slope_[k - 1] * t;
  }
  return {c, s};
}

TrivariatePoly CweFamily::evaluate(const mpq_class& a1) const {
  TrivariatePoly out = a1 * terms_[0];
  for (std::size_t k = 1; k < 7; ++k) out = out + a(static_cast<int>(k + 1), a1) * terms_[k];
  return out;
}

CweFamily extremal_cwe_family() {
  const RingGenerators& g = ring_generators();
  const TrivariatePoly b2 = g.beta6 * g.beta6;
  const TrivariatePoly bg = g.beta6 * g.gamma18;
  std::array<TrivariatePoly, 7> terms{g.delta36,         g.alpha12.pow(3), g.alpha12 * g.alpha12 * b2,
                                      g.alpha12 * b2 * b2, b2.pow(3),      bg * g.alpha12,
                                      bg * b2};
  // Columns a2..a7, then the constant right-hand side, then the coefficient of a1
  // moved to the right-hand side.
  std::vector<std::vector<mpq_class>> rows;
  auto add_row = [&](int i, int j, int l, const mpq_class& rhs) {
    std::vector<mpq_class> r(8);
    for (std::size_t k = 1; k < 7; ++k) r[k - 1] = terms[k].coefficient(i, j, l);
    r[6] = rhs;
    r[7] = -terms[0].coefficient(i, j, l);
    rows.push_back(std::move(r));
  };
  add_row(36, 0, 0, 1);
  for (int i = 25; i <= 35; ++i)
    for (int j = 0; j <= 36 - i; ++j) add_row(i, j, 36 - i - j, 0);
  const std::vector<int> pivots = row_reduce(rows, 6);
  if (pivots.size() != 6) throw SolveFailed("constraints leave " + std::to_string(6 - pivots.size()) + " free coefficients");
  for (std::size_t r = 6; r < rows.size(); ++r)
    if (sgn(rows[r][6]) != 0 || sgn(rows[r][7]) != 0) throw SolveFailed("constraints are inconsistent");
  std::array<mpq_class, 6> constant, slope;
  for (std::size_t r = 0; r < 6; ++r) {
    constant[static_cast<std::size_t>(pivots[r])] = rows[r][6];
    slope[static_cast<std::size_t>(pivots[r])] = rows[r][7];
  }
  return CweFamily(std::move(terms), constant, slope);
}

mpq_class admissible_a1() {
  const auto [c, s] = extremal_cwe_family().coefficient(0, 15, 21);
  if (sgn(s) == 0) throw SolveFailed("coefficient of y^15 z^21 does not depend on a1");
  return -c / s;
}

TrivariatePoly admissible_cwe() {
  const CweFamily f = extremal_cwe_family();
  const auto [c, s] = f.coefficient(0, 15, 21);
  if (sgn(s) == 0) throw SolveFailed("coefficient of y^15 z^21 does not depend on a1");
  return f.evaluate(-c / s);
}

std::vector<std::pair<int, int>> odd_ones_full_weight_terms(const TrivariatePoly& cwe) {
  std::vector<std::pair<int, int>> out;
  const int d = cwe.degree();
  for (int j = 1; j <= d; j += 2)
    if (sgn(cwe.coefficient(0, j, d - j)) != 0) out.emplace_back(j, d - j);
  return out;
}

UnivariatePoly gleason_ternary_we(int n, int min_weight, int max_weight) {
  if (n <= 0 || n % 4 != 0) throw InvalidArgument("length must be a positive multiple of 4");
  const UnivariatePoly g4{{0, 1}, {3, 8}};
  const UnivariatePoly g12{{0, 1}, {6, 264}, {9, 440}, {12, 24}};
  std::vector<UnivariatePoly> basis;
  for (int j = 0; 12 * j <= n; ++j)
    basis.push_back(g4.pow(static_cast<unsigned>((n - 12 * j) / 4)) * g12.pow(static_cast<unsigned>(j)));
  const std::size_t vars = basis.size();
  std::vector<std::vector<mpq_class>> rows;
  for (int w = 0; w <= n; ++w) {
    if (w != 0 && w >= min_weight && w <= max_weight) continue;
    std::vector<mpq_class> r(vars + 1);
    for (std::size_t k = 0; k < vars; ++k) r[k] = basis[k].coefficient(w);
    r[vars] = w == 0 ? 1 : 0;
    rows.push_back(std::move(r));
  }
  const std::vector<int> pivots = row_reduce(rows, vars);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (sgn(rows[r][vars]) != 0) throw NoSolution("no enumerator satisfies the weight constraints");
  if (pivots.size() < vars)
    throw NonUnique("weight constraints leave a family of enumerators", static_cast<int>(vars - pivots.size()));
  UnivariatePoly out;
  for (std::size_t r = 0; r < vars; ++r) out = out + rows[r][vars] * basis[static_cast<std::size_t>(pivots[r])];
  return out;
}

ThetaPair extremal_theta36(int alpha) {
  if (alpha < 0 || alpha > 16) throw AlphaOutOfRange("alpha must lie in [0, 16], got " + std::to_string(alpha));
  ThetaPair t{ThetaPrefix(5), ThetaPrefix(5)};
  t.theta.add(0, 1);
  t.theta.add(4, static_cast<std::uint64_t>(42840 + 4096 * alpha));
  t.theta.add(5, static_cast<std::uint64_t>(1916928 - 98304 * alpha));
  t.shadow.add(1, static_cast<std::uint64_t>(alpha));
  t.shadow.add(3, static_cast<std::uint64_t>(960 - 60 * alpha));
  t.shadow.add(5, static_cast<std::uint64_t>(3799296 + 1734 * alpha));
  return t;
}

ThetaPair min3_theta36(int alpha, int beta) {
  if (beta < 0 || 60 * beta > alpha || alpha >= 960)
    throw ConstraintViolated("need 0 <= beta <= alpha/60 < 16, got alpha=" + std::to_string(alpha) +
                             ", beta=" + std::to_string(beta));
  ThetaPair t{ThetaPrefix(5), ThetaPrefix(5)};
  t.theta.add(0, 1);
  t.theta.add(3, static_cast<std::uint64_t>(960 - alpha));
  t.theta.add(4, static_cast<std::uint64_t>(42840 + 4096 * beta));
  t.shadow.add(1, static_cast<std::uint64_t>(beta));
  t.shadow.add(3, static_cast<std::uint64_t>(alpha - 60 * beta));
  t.shadow.add(5, static_cast<std::uint64_t>(3833856 - 36 * alpha + 1734 * beta));
  return t;
}

int extremal_bound(int n) {
  if (n < 1) throw InvalidArgument("dimension must be positive");
  return n == 23 ? 3 : 2 * (n / 24) + 2;
}

}  // namespace unimod
