#include "unimod/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "enumeration.hpp"
#include "unimod/errors.hpp"
#include "unimod/poly.hpp"

namespace unimod {

Lattice::Lattice(IntMatrix basis, Int scale) : basis_(std::move(basis)), scale_(scale) {
  if (scale_ <= 0) throw InvalidArgument("lattice scale must be positive");
  if (basis_.rows() == 0 || basis_.rows() != basis_.cols()) throw InvalidArgument("lattice basis must be square");
  if (sgn(determinant(basis_)) == 0) throw InvalidArgument("lattice basis is singular");
}

Lattice Lattice::rescaled(Int factor) const {
  if (factor <= 0) throw InvalidArgument("rescale factor must be positive");
  IntMatrix b = basis_;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (auto& v : b.row(i)) v *= factor;
  return Lattice(std::move(b), scale_ * factor * factor);
}

Lattice Lattice::simplified() const {
  Int g = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (Int v : basis_.row(i)) g = std::gcd(g, v);
  Int f = g;
  while (f > 1 && scale_ % (f * f) != 0) --f;
  while (f > 1 && g % f != 0) --f;
  if (f <= 1) return *this;
  IntMatrix b = basis_;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (auto& v : b.row(i)) v /= f;
  return Lattice(std::move(b), scale_ / (f * f));
}

bool Lattice::contains(std::span<const mpq_class> v) const {
  if (v.size() != dimension()) return false;
  const RationalVector coords = apply_row(v, inverse(RationalMatrix(basis_)));
  return std::all_of(coords.begin(), coords.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

bool Lattice::contains(std::span<const Int> v) const {
  const RationalVector q = to_rational(v);
  return contains(std::span<const mpq_class>(q));
}

IntMatrix gram_numerator(const Lattice& lattice) { return lattice.basis() * lattice.basis().transpose(); }

RationalMatrix gram(const Lattice& lattice) {
  RationalMatrix g(gram_numerator(lattice));
  const mpq_class s(static_cast<long>(lattice.scale()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) /= s;
  return g;
}

mpq_class gram_determinant(const Lattice& lattice) {
  const mpz_class d = determinant(lattice.basis());
  mpz_class s;
  mpz_pow_ui(s.get_mpz_t(), mpz_class(static_cast<long>(lattice.scale())).get_mpz_t(),
             static_cast<unsigned long>(lattice.dimension()));
  mpq_class out(d * d, s);
  out.canonicalize();
  return out;
}

Lattice dual(const Lattice& lattice) {
  RationalMatrix d = inverse(RationalMatrix(lattice.basis())).transpose();
  const mpz_class den = common_denominator(d);
  const mpz_class factor = den * lattice.scale();
  const std::size_t n = lattice.dimension();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = d(i, j) * mpq_class(factor);
      b(i, j) = to_int(v.get_num());
    }
  const Int den_i = to_int(den);
  return Lattice(hermite_normal_form(b), to_int(mpz_class(lattice.scale()) * den_i * den_i)).simplified();
}

bool is_integral(const Lattice& lattice) {
  const IntMatrix g = gram_numerator(lattice);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (Int v : g.row(i))
      if (v % lattice.scale() != 0) return false;
  return true;
}

bool is_unimodular(const Lattice& lattice) { return is_integral(lattice) && gram_determinant(lattice) == 1; }

ReducedLattice reduce(const Lattice& lattice) {
  using Real = long double;
  constexpr Real delta = 0.99L;
  const std::size_t n = lattice.dimension();
  IntMatrix b = lattice.basis();
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix g = gram_numerator(lattice);
  std::vector<Real> mu(n * n, 0), r(n, 0);

  auto gso_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      Real s = static_cast<Real>(g(k, j));
      for (std::size_t i = 0; i < j; ++i) s -= mu[j * n + i] * mu[k * n + i] * r[i];
      mu[k * n + j] = s / r[j];
    }
    Real s = static_cast<Real>(g(k, k));
    for (std::size_t j = 0; j < k; ++j) s -= mu[k * n + j] * mu[k * n + j] * r[j];
    r[k] = s;
  };
  auto refresh_gram_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < n; ++j) g(k, j) = g(j, k) = checked_dot(b.row(k), b.row(j));
  };
  auto swap_rows = [&](std::size_t a, std::size_t c) {
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(b(a, j), b(c, j));
      std::swap(u(a, j), u(c, j));
    }
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(c, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(g(j, a), g(j, c));
  };

  gso_row(0);
  std::size_t k = 1;
  while (k < n) {
    gso_row(k);
    for (int pass = 0; pass < 64; ++pass) {
      bool changed = false;
      for (std::size_t jj = k; jj-- > 0;) {
        if (std::fabs(mu[k * n + jj]) <= 0.51L) continue;
        const Int q = static_cast<Int>(std::llround(mu[k * n + jj]));
        for (std::size_t c = 0; c < n; ++c) {
          b(k, c) -= q * b(jj, c);
          u(k, c) -= q * u(jj, c);
        }
        for (std::size_t i = 0; i < jj; ++i) mu[k * n + i] -= static_cast<Real>(q) * mu[jj * n + i];
        mu[k * n + jj] -= static_cast<Real>(q);
        changed = true;
      }
      if (!changed) break;
      refresh_gram_row(k);
      gso_row(k);
    }
    const Real m = mu[k * n + k - 1];
    if (r[k] < (delta - m * m) * r[k - 1]) {
      swap_rows(k, k - 1);
      gso_row(k - 1);
      k = std::max<std::size_t>(k - 1, 1);
      if (k == 1) gso_row(0);
    } else {
      ++k;
    }
  }
  return {Lattice(std::move(b), lattice.scale()), std::move(u)};
}

// --- ThetaPrefix ----------------------------------------------------------

std::uint64_t ThetaPrefix::count(const mpq_class& norm) const {
  auto it = counts_.find(norm);
  return it == counts_.end() ? 0 : it->second;
}

void ThetaPrefix::add(const mpq_class& norm, std::uint64_t n) {
  if (n == 0) return;
  counts_[norm] += n;
}

std::optional<mpq_class> ThetaPrefix::min_norm() const {
  for (const auto& [norm, c] : counts_)
    if (sgn(norm) > 0 && c > 0) return norm;
  return std::nullopt;
}

std::uint64_t ThetaPrefix::kissing() const {
  auto m = min_norm();
  return m ? count(*m) : 0;
}

std::uint64_t ThetaPrefix::total() const {
  std::uint64_t t = 0;
  for (const auto& [norm, c] : counts_) t += c;
  return t;
}

// --- enumeration front-ends ------------------------------------------------

namespace {

struct Prepared {
  detail::EnumerationProblem problem;
  IntMatrix reduced_basis;
};

Prepared prepare(const Lattice& lattice, std::span<const mpq_class> t) {
  const ReducedLattice red = reduce(lattice);
  Prepared out;
  out.reduced_basis = red.lattice.basis();
  out.problem.gram = gram_numerator(red.lattice);
  out.problem.scale = lattice.scale();
  const std::size_t n = lattice.dimension();
  out.problem.offset_num.assign(n, 0);
  if (!t.empty()) {
    if (t.size() != n) throw InvalidArgument("coset vector has the wrong dimension");
    RationalVector c = apply_row(t, inverse(RationalMatrix(red.lattice.basis())));
    const Int den = to_int(common_denominator(c));
    out.problem.denominator = den;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class num = c[i].get_num() * (den / c[i].get_den());
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), mpz_class(den).get_mpz_t());
      out.problem.offset_num[i] = to_int(r);
    }
  }
  return out;
}

// Largest numerator over norm_denominator() that is <= bound.
Int bound_numerator(const detail::EnumerationProblem& p, const mpq_class& bound) {
  mpq_class scaled = bound * mpq_class(static_cast<long>(p.norm_denominator()));
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return to_int(f);
}

ThetaPrefix to_prefix(const std::map<Int, std::uint64_t>& counts, const detail::EnumerationProblem& p,
                      const mpq_class& bound) {
  ThetaPrefix out(bound);
  for (const auto& [num, c] : counts) {
    mpq_class norm(static_cast<long>(num), static_cast<long>(p.norm_denominator()));
    norm.canonicalize();
    out.add(norm, c);
  }
  return out;
}

void report(const EnumerationOptions& options, const std::string& what, const ThetaPrefix& prefix) {
  if (!options.progress) return;
  std::ostringstream line;
  if (!options.label.empty()) line << "[" << options.label << "] ";
  line << what << " up to norm " << rational_to_string(prefix.bound()) << ":";
  for (const auto& [norm, c] : prefix.counts()) line << " " << rational_to_string(norm) << "->" << c;
  options.progress(line.str());
}

}  // namespace

ThetaPrefix theta_prefix(const Lattice& lattice, const mpq_class& bound, const EnumerationOptions& options) {
  if (sgn(bound) < 0) throw InvalidArgument("theta bound must be nonnegative");
  const Prepared prep = prepare(lattice, {});
  ThetaPrefix out = to_prefix(detail::count_points(prep.problem, bound_numerator(prep.problem, bound), options),
                              prep.problem, bound);
  report(options, "theta", out);
  return out;
}

ThetaPrefix short_vectors_in_coset(const Lattice& lattice, std::span<const mpq_class> t, const mpq_class& bound,
                                   const EnumerationOptions& options) {
  if (sgn(bound) < 0) throw InvalidArgument("coset bound must be nonnegative");
  const Prepared prep = prepare(lattice, t);
  ThetaPrefix out = to_prefix(detail::count_points(prep.problem, bound_numerator(prep.problem, bound), options),
                              prep.problem, bound);
  report(options, "coset", out);
  return out;
}

std::optional<mpq_class> coset_minimum(const Lattice& lattice, std::span<const mpq_class> t, const mpq_class& limit,
                                       const EnumerationOptions& options) {
  const Prepared prep = prepare(lattice, t);
  if (sgn(limit) < 0) return std::nullopt;
  if (!prep.problem.has_offset()) return mpq_class(0);  // t lies in the lattice
  auto m = detail::minimum_norm(prep.problem, bound_numerator(prep.problem, limit), options);
  if (!m) return std::nullopt;
  mpq_class norm(static_cast<long>(*m), static_cast<long>(prep.problem.norm_denominator()));
  norm.canonicalize();
  return norm;
}

IntMatrix vectors_of_norm(const Lattice& lattice, const mpq_class& norm, const EnumerationOptions& options) {
  const Prepared prep = prepare(lattice, {});
  const Int den = prep.problem.norm_denominator();
  mpq_class scaled = norm * mpq_class(static_cast<long>(den));
  const std::size_t n = lattice.dimension();
  IntMatrix out(0, n);
  if (scaled.get_den() != 1) return out;
  auto coords = detail::points_of_norm(prep.problem, to_int(scaled.get_num()), options);
  std::vector<std::vector<Int>> ambient;
  ambient.reserve(coords.size());
  for (const auto& x : coords) {
    std::vector<Int> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += x[i] * prep.reduced_basis(i, j);
    }
    ambient.push_back(std::move(v));
  }
  std::sort(ambient.begin(), ambient.end());
  for (const auto& v : ambient) out.append_row(v);
  return out;
}

}  // namespace unimod
