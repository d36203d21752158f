#include "unimod/glue.hpp"

#include <numeric>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

// s = squarefree * root^2
std::pair<Int, Int> split_square(Int s) {
  Int root = 1;
  for (Int p = 2; p * p <= s; ++p)
    while (s % (p * p) == 0) {
      s /= p * p;
      root *= p;
    }
  return {s, root};
}

Int common_scale(Int a, Int b) {
  const auto [fa, ra] = split_square(a);
  const auto [fb, rb] = split_square(b);
  if (fa != fb) throw InvalidArgument("lattices have incommensurable scales");
  const Int r = std::lcm(ra, rb);
  return fa * r * r;
}

Lattice at_scale(const Lattice& lattice, Int scale) {
  if (scale % lattice.scale() != 0) throw InvalidArgument("scale is not a multiple");
  const Int q = scale / lattice.scale();
  Int f = 1;
  while (f * f < q) ++f;
  if (f * f != q) throw InvalidArgument("scale ratio is not a square");
  return f == 1 ? lattice : lattice.rescaled(f);
}

class Membership {
 public:
  explicit Membership(const Lattice& lattice) : inverse_(inverse(RationalMatrix(lattice.basis()))) {}
  bool operator()(std::span<const mpq_class> v) const {
    for (const auto& c : apply_row(v, inverse_))
      if (c.get_den() != 1) return false;
    return true;
  }

 private:
  RationalMatrix inverse_;
};

RationalVector difference(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Closest-ish representative of t + L via Babai rounding in a reduced basis.
RationalVector babai_reduce(const RationalVector& t, const IntMatrix& reduced, const RationalMatrix& reduced_inverse) {
  const RationalVector c = apply_row(t, reduced_inverse);
  RationalVector out = t;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpq_class h = c[i] + mpq_class(1, 2);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    if (r == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= r * reduced(i, j);
  }
  return out;
}

Lattice overlattice(const ShadowDecomposition& d, int index) {
  const RationalVector& t = d.coset_reps[static_cast<std::size_t>(index)];
  IntMatrix stacked = d.even_part.basis();
  std::vector<Int> row;
  for (const auto& v : t) {
    if (v.get_den() != 1) throw InvalidArgument("coset representative is not integral at the common scale");
    row.push_back(to_int(v.get_num()));
  }
  stacked.append_row(row);
  Lattice n(hermite_normal_form(stacked), d.even_part.scale());
  n = n.simplified();
  if (!is_unimodular(n)) throw Error("neighbor construction did not give a unimodular lattice");
  return n;
}

void require_neighbors(const Lattice& lattice) {
  if (lattice.dimension() % 4 != 0) throw DimensionNotDivisibleBy4("neighbors need dimension divisible by 4");
}

}  // namespace

std::array<int, 2> ShadowDecomposition::shadow_indices() const {
  std::array<int, 2> out{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != in_lattice_index) out[static_cast<std::size_t>(k++)] = i;
  return out;
}

Lattice even_sublattice(const Lattice& lattice) {
  if (!is_integral(lattice)) throw InvalidArgument("even sublattice needs an integral lattice");
  const IntMatrix g = gram_numerator(lattice);
  const Int s = lattice.scale();
  const std::size_t n = lattice.dimension();
  std::vector<bool> odd(n);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    odd[i] = (g(i, i) / s) % 2 != 0;
    if (odd[i] && pivot == n) pivot = i;
  }
  if (pivot == n) throw NotOdd("lattice is even");
  const IntMatrix& b = lattice.basis();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == pivot) out(i, j) = 2 * b(i, j);
      else if (odd[i]) out(i, j) = b(i, j) + b(pivot, j);
      else out(i, j) = b(i, j);
    }
  return Lattice(hermite_normal_form(out), s);
}

ShadowDecomposition shadow(const Lattice& lattice) {
  if (!is_unimodular(lattice)) throw InvalidArgument("shadow needs a unimodular lattice");
  const Lattice even = even_sublattice(lattice);
  const Lattice even_dual = dual(even);
  const Int s = common_scale(even.scale(), even_dual.scale());
  const Lattice l0 = at_scale(even, s);
  const Lattice l0_dual = at_scale(even_dual, s);
  const Lattice l = at_scale(lattice, s);

  const Membership in_l0(l0);
  std::vector<RationalVector> reps{RationalVector(lattice.dimension(), 0)};
  for (std::size_t head = 0; head < reps.size() && reps.size() < 4; ++head) {
    for (std::size_t i = 0; i < l0_dual.dimension() && reps.size() < 4; ++i) {
      RationalVector w = reps[head];
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += l0_dual.basis()(i, j);
      bool known = false;
      for (const auto& r : reps)
        if (in_l0(difference(w, r))) {
          known = true;
          break;
        }
      if (!known) reps.push_back(std::move(w));
    }
  }
  if (reps.size() != 4) throw Error("discriminant group of the even sublattice does not have order 4");

  const ReducedLattice red = reduce(l0);
  const RationalMatrix red_inverse = inverse(RationalMatrix(red.lattice.basis()));
  const Membership in_l(l);
  ShadowDecomposition d{l, l0, {}, -1};
  for (int i = 0; i < 3; ++i) {
    RationalVector t = babai_reduce(reps[static_cast<std::size_t>(i + 1)], red.lattice.basis(), red_inverse);
    if (in_l(t)) {
      if (d.in_lattice_index >= 0) throw Error("two cosets of the even sublattice lie in the lattice");
      d.in_lattice_index = i;
    }
    d.coset_reps[static_cast<std::size_t>(i)] = std::move(t);
  }
  if (d.in_lattice_index < 0) throw Error("no coset of the even sublattice lies in the lattice");
  return d;
}

ThetaPrefix shadow_prefix(const ShadowDecomposition& d, const mpq_class& bound, const EnumerationOptions& options) {
  const auto& t = d.coset_reps[static_cast<std::size_t>(d.shadow_indices()[0])];
  return short_vectors_in_coset(d.lattice, t, bound, options);
}

std::optional<mpq_class> shadow_minimum(const ShadowDecomposition& d, const mpq_class& limit,
                                        const EnumerationOptions& options) {
  const auto& t = d.coset_reps[static_cast<std::size_t>(d.shadow_indices()[0])];
  return coset_minimum(d.lattice, t, limit, options);
}

std::pair<Lattice, Lattice> neighbors(const Lattice& lattice) {
  require_neighbors(lattice);
  const ShadowDecomposition d = shadow(lattice);
  const auto idx = d.shadow_indices();
  return {overlattice(d, idx[0]), overlattice(d, idx[1])};
}

std::pair<std::uint64_t, std::uint64_t> n_counts(const Lattice& lattice, const EnumerationOptions& options) {
  require_neighbors(lattice);
  const ShadowDecomposition d = shadow(lattice);
  // L_0 is even, so norm-3 vectors of a neighbor lie in its shadow coset.
  std::array<std::uint64_t, 2> c{};
  for (int k = 0; k < 2; ++k) {
    const auto& t = d.coset_reps[static_cast<std::size_t>(d.shadow_indices()[static_cast<std::size_t>(k)])];
    c[static_cast<std::size_t>(k)] = short_vectors_in_coset(d.even_part, t, 3, options).count(3);
  }
  if (c[0] > c[1]) std::swap(c[0], c[1]);
  return {c[0], c[1]};
}

std::optional<Lattice> long_shadow_extract(const Lattice& lattice, const EnumerationOptions& options) {
  if (lattice.dimension() != 36 || !is_unimodular(lattice)) return std::nullopt;
  if (theta_prefix(lattice, 3, options).total() != 1) return std::nullopt;
  const ShadowDecomposition d = shadow(lattice);
  std::array<std::uint64_t, 2> c{};
  for (int k = 0; k < 2; ++k) {
    const auto& t = d.coset_reps[static_cast<std::size_t>(d.shadow_indices()[static_cast<std::size_t>(k)])];
    c[static_cast<std::size_t>(k)] = short_vectors_in_coset(d.even_part, t, 3, options).count(3);
  }
  int pick = -1;
  if (c[0] == 0 && c[1] == 960) pick = d.shadow_indices()[1];
  if (c[1] == 0 && c[0] == 960) pick = d.shadow_indices()[0];
  if (pick < 0) return std::nullopt;
  Lattice n = overlattice(d, pick);
  const ThetaPrefix theta = theta_prefix(n, 3, options);
  if (theta.min_norm() != mpq_class(3) || theta.kissing() != 960) return std::nullopt;
  const ShadowDecomposition nd = shadow(n);
  if (shadow_prefix(nd, 3, options).total() != 0) return std::nullopt;
  if (shadow_minimum(nd, 5, options) != mpq_class(5)) return std::nullopt;
  return n;
}

}  // namespace unimod
