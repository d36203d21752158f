#include "unimod/code.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

Int mod(Int a, Int k) {
  Int r = a % k;
  return r < 0 ? r + k : r;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// K_j(w) for the binary Hamming scheme of length n.
mpz_class krawtchouk(int n, int j, int w) {
  mpz_class s = 0;
  for (int i = 0; i <= j; ++i) {
    mpz_class t = binomial(w, i) * binomial(n - w, j - i);
    if (i & 1)
      s -= t;
    else
      s += t;
  }
  return s;
}

int saturating_times4(int d) { return d == kInfiniteDistance ? kInfiniteDistance : 4 * d; }

}  // namespace

ZkCode::ZkCode(int modulus, int length, const IntMatrix& generators) : modulus_(modulus), length_(length) {
  if (modulus < 2) throw InvalidArgument("code modulus must be at least 2");
  if (length < 1) throw InvalidArgument("code length must be positive");
  if (generators.rows() > 0 && generators.cols() != static_cast<std::size_t>(length))
    throw InvalidArgument("generator rows must have length " + std::to_string(length));

  const auto n = static_cast<std::size_t>(length);
  IntMatrix stacked(0, n);
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    std::vector<Int> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = mod(generators(i, j), modulus);
    stacked.append_row(r);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> r(n, 0);
    r[i] = modulus;
    stacked.append_row(r);
  }
  lattice_basis_ = hermite_normal_form(stacked);

  generators_ = IntMatrix(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int pivot = lattice_basis_(i, i);
    if (pivot == modulus) continue;
    std::vector<Int> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = mod(lattice_basis_(i, j), modulus);
    generators_.append_row(r);
    orders_.push_back(static_cast<int>(modulus / pivot));
  }
}

mpz_class ZkCode::cardinality() const {
  mpz_class c = 1;
  for (int o : orders_) c *= o;
  return c;
}

bool ZkCode::contains(std::span<const Int> word) const {
  if (word.size() != static_cast<std::size_t>(length_)) return false;
  const auto n = static_cast<std::size_t>(length_);
  std::vector<Int> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = mod(word[j], modulus_);
  for (std::size_t i = 0; i < n; ++i) {
    const Int pivot = lattice_basis_(i, i);
    if (v[i] % pivot != 0) return false;
    const Int q = v[i] / pivot;
    if (q == 0) continue;
    for (std::size_t j = i; j < n; ++j) v[j] -= q * lattice_basis_(i, j);
  }
  return true;
}

void ZkCode::for_each_codeword(const std::function<void(std::span<const Int>)>& f, std::uint64_t limit) const {
  if (cardinality() > mpz_class(std::to_string(limit)))
    throw CardinalityTooLarge("code has " + cardinality().get_str() + " words, enumeration limit is " +
                              std::to_string(limit));
  const auto n = static_cast<std::size_t>(length_);
  const std::size_t r = generators_.rows();
  std::vector<Int> word(n, 0);
  std::vector<int> digit(r, 0);
  while (true) {
    f(word);
    std::size_t i = 0;
    for (; i < r; ++i) {
      if (digit[i] + 1 < orders_[i]) {
        ++digit[i];
        for (std::size_t j = 0; j < n; ++j) word[j] = mod(word[j] + generators_(i, j), modulus_);
        break;
      }
      // wrap: remove (order-1) copies of this row
      const Int back = digit[i];
      digit[i] = 0;
      for (std::size_t j = 0; j < n; ++j) word[j] = mod(word[j] - back * generators_(i, j), modulus_);
    }
    if (i == r) break;
  }
}

ZkCode dual_code(const ZkCode& code) {
  const auto n = static_cast<std::size_t>(code.length());
  // The Construction A lattice of the dual code is k times the dual Z-lattice.
  RationalMatrix inv_t = inverse(RationalMatrix(code.lattice_basis())).transpose();
  IntMatrix gens(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = inv_t(i, j) * code.modulus();
      if (v.get_den() != 1) throw SolveFailed("dual lattice basis is not integral");
      gens(i, j) = to_int(v.get_num());
    }
  return ZkCode(code.modulus(), code.length(), gens);
}

bool is_self_dual(const ZkCode& code) {
  const auto& g = code.generators();
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = a; b < g.rows(); ++b)
      if (mod(checked_dot(g.row(a), g.row(b)), code.modulus()) != 0) return false;
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(code.modulus()), static_cast<unsigned long>(code.length()));
  return code.cardinality() * code.cardinality() == total;
}

int hamming_weight(std::span<const Int> word) {
  return static_cast<int>(std::count_if(word.begin(), word.end(), [](Int v) { return v != 0; }));
}

UnivariatePoly hamming_we(const ZkCode& code, std::uint64_t limit) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.length()) + 1, 0);
  code.for_each_codeword([&](std::span<const Int> w) { ++counts[static_cast<std::size_t>(hamming_weight(w))]; }, limit);
  UnivariatePoly p;
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w]) p.set(static_cast<int>(w), mpq_class(std::to_string(counts[w])));
  return p;
}

int minimum_distance(const UnivariatePoly& weight_enumerator) {
  for (const auto& [e, c] : weight_enumerator.terms())
    if (e > 0 && sgn(c) != 0) return e;
  return kInfiniteDistance;
}

UnivariatePoly macwilliams_dual_we(const UnivariatePoly& w, int n, const mpz_class& cardinality, int q) {
  if (q != 2 && q != 3) throw InvalidArgument("MacWilliams transform supports q = 2 or 3");
  if (w.degree() > n) throw InvalidArgument("weight enumerator degree exceeds length");
  if (sgn(cardinality) <= 0) throw InvalidArgument("cardinality must be positive");
  const UnivariatePoly minus = {{0, 1}, {1, -1}};
  const UnivariatePoly plus = {{0, 1}, {1, q - 1}};
  std::vector<UnivariatePoly> minus_pow(static_cast<std::size_t>(n) + 1), plus_pow(static_cast<std::size_t>(n) + 1);
  minus_pow[0] = plus_pow[0] = UnivariatePoly::constant(1);
  for (int e = 1; e <= n; ++e) {
    minus_pow[static_cast<std::size_t>(e)] = minus_pow[static_cast<std::size_t>(e - 1)] * minus;
    plus_pow[static_cast<std::size_t>(e)] = plus_pow[static_cast<std::size_t>(e - 1)] * plus;
  }
  UnivariatePoly out;
  for (const auto& [e, c] : w.terms())
    out = out + c * (minus_pow[static_cast<std::size_t>(e)] * plus_pow[static_cast<std::size_t>(n - e)]);
  out = mpq_class(1, 1) / mpq_class(cardinality) * out;
  if (!out.has_integer_coefficients())
    throw NonIntegerResult("MacWilliams transform has a non-integer coefficient: " + out.to_string());
  return out;
}

BinaryCodePair residue_torsion(const ZkCode& code) {
  if (code.modulus() != 4) throw InvalidArgument("residue/torsion codes are defined for Z_4 codes");
  const auto n = static_cast<std::size_t>(code.length());
  const IntMatrix& h = code.lattice_basis();

  IntMatrix residue_rows(0, n);
  for (std::size_t i = 0; i < code.generators().rows(); ++i) {
    std::vector<Int> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = code.generators()(i, j) & 1;
    residue_rows.append_row(r);
  }

  // Lattice vectors with all-even coordinates: kernel combinations of the
  // Hermite rows mod 2, plus twice every row. Halving them gives the torsion.
  IntMatrix torsion_rows(0, n);
  for (const auto& kappa : mod2_left_kernel(h).left_kernel) {
    std::vector<Int> v(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (kappa[i])
        for (std::size_t j = 0; j < n; ++j) v[j] += h(i, j);
    for (auto& x : v) x = (x / 2) & 1;
    torsion_rows.append_row(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = h(i, j) & 1;
    torsion_rows.append_row(r);
  }

  BinaryCodePair pair{ZkCode(2, code.length(), residue_rows), ZkCode(2, code.length(), torsion_rows)};
  if (is_self_dual(code) && !(pair.torsion == dual_code(pair.residue)))
    throw TorsionMismatch("torsion code of a self-dual Z_4 code differs from the dual of its residue");
  return pair;
}

int euclidean_weight(std::span<const Int> word) {
  int w = 0;
  for (Int v : word) {
    switch (mod(v, 4)) {
      case 1:
      case 3: w += 1; break;
      case 2: w += 4; break;
      default: break;
    }
  }
  return w;
}

EuclideanBounds min_euclidean_bounds(const ZkCode& code) {
  const BinaryCodePair pair = residue_torsion(code);
  const UnivariatePoly residue_we = hamming_we(pair.residue);
  const int d1 = minimum_distance(residue_we);
  int d2;
  if (is_self_dual(code))
    d2 = minimum_distance(macwilliams_dual_we(residue_we, code.length(), pair.residue.cardinality(), 2));
  else
    d2 = minimum_distance(hamming_we(pair.torsion));
  const int upper = saturating_times4(d2);
  return {std::min(d1, upper), upper};
}

// --- constrained weight enumerators ----------------------------------------

namespace {

// Solutions of one all-one case; empty when infeasible.
std::vector<UnivariatePoly> solve_case(const WeightConstraints& wc, const std::vector<int>& weights, AllOne mode) {
  const std::size_t vars = weights.size();
  const mpz_class total = (mpz_class(1) << wc.dimension) - 1;
  std::vector<std::vector<mpq_class>> m;
  auto new_row = [&] { return std::vector<mpq_class>(vars + 1); };

  auto sum_row = new_row();
  for (std::size_t t = 0; t < vars; ++t) sum_row[t] = 1;
  sum_row[vars] = total;
  m.push_back(sum_row);

  for (int j = 1; j < wc.dual_min_weight; ++j) {
    auto row = new_row();
    for (std::size_t t = 0; t < vars; ++t) row[t] = krawtchouk(wc.length, j, weights[t]);
    row[vars] = -binomial(wc.length, j);
    m.push_back(row);
  }

  auto index_of = [&](int w) -> std::ptrdiff_t {
    auto it = std::find(weights.begin(), weights.end(), w);
    return it == weights.end() ? -1 : it - weights.begin();
  };
  const std::ptrdiff_t all_one = index_of(wc.length);
  if (mode == AllOne::No) {
    if (all_one >= 0) {
      auto row = new_row();
      row[static_cast<std::size_t>(all_one)] = 1;
      m.push_back(row);
    }
  } else if (mode == AllOne::Yes) {
    if (all_one < 0) return {};
    auto row = new_row();
    row[static_cast<std::size_t>(all_one)] = 1;
    row[vars] = 1;
    m.push_back(row);
    // Adding the all-one word is a weight-preserving bijection w <-> n-w.
    for (std::size_t t = 0; t < vars; ++t) {
      const int w = weights[t];
      if (w == wc.length) continue;
      auto sym = new_row();
      sym[t] = 1;
      const std::ptrdiff_t partner = index_of(wc.length - w);
      if (partner >= 0) sym[static_cast<std::size_t>(partner)] -= 1;
      m.push_back(sym);
    }
  }

  const std::vector<int> pivots = row_reduce(m, vars);
  for (std::size_t i = pivots.size(); i < m.size(); ++i)
    if (sgn(m[i][vars]) != 0) return {};  // inconsistent

  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0; c < vars; ++c)
    if (std::find(pivots.begin(), pivots.end(), static_cast<int>(c)) == pivots.end()) free_vars.push_back(c);

  const mpz_class span = total + 1;
  mpz_class space = 1;
  for (std::size_t k = 0; k < free_vars.size(); ++k) space *= span;
  if (space > 100'000'000) throw InvalidArgument("constrained enumerator search space too large: " + space.get_str());

  std::vector<UnivariatePoly> out;
  std::vector<mpz_class> assign(free_vars.size(), 0);
  while (true) {
    std::vector<mpq_class> value(vars);
    for (std::size_t k = 0; k < free_vars.size(); ++k) value[free_vars[k]] = assign[k];
    bool ok = true;
    for (std::size_t i = 0; i < pivots.size() && ok; ++i) {
      mpq_class v = m[i][vars];
      for (std::size_t k = 0; k < free_vars.size(); ++k) v -= m[i][free_vars[k]] * value[free_vars[k]];
      if (v.get_den() != 1 || sgn(v) < 0 || v > total) ok = false;
      value[static_cast<std::size_t>(pivots[i])] = v;
    }
    if (ok) {
      UnivariatePoly p = UnivariatePoly::constant(1);
      for (std::size_t t = 0; t < vars; ++t) p.add(weights[t], value[t]);
      out.push_back(p);
    }
    std::size_t k = 0;
    for (; k < assign.size(); ++k) {
      if (assign[k] < total) {
        ++assign[k];
        break;
      }
      assign[k] = 0;
    }
    if (k == assign.size()) break;
  }
  return out;
}

}  // namespace

std::vector<UnivariatePoly> solve_constrained_we(const WeightConstraints& wc) {
  if (wc.length < 1 || wc.length > 64) throw InvalidArgument("length must be in [1, 64]");
  if (wc.dimension < 0 || wc.dimension > wc.length) throw InvalidArgument("dimension out of range");
  if (wc.divisor < 1 || wc.min_weight < 1) throw InvalidArgument("divisor and minimum weight must be positive");

  std::vector<int> weights;
  for (int w = wc.min_weight; w <= wc.length; ++w)
    if (w % wc.divisor == 0) weights.push_back(w);

  std::vector<UnivariatePoly> out;
  auto append = [&](AllOne mode) {
    for (auto& p : solve_case(wc, weights, mode))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  if (wc.contains_all_one == AllOne::Unknown) {
    append(AllOne::No);
    append(AllOne::Yes);
  } else {
    append(wc.contains_all_one);
  }
  if (out.empty()) throw NoSolution("no weight enumerator satisfies the constraints");
  return out;
}

bool satisfies_constraints(const UnivariatePoly& w, const WeightConstraints& wc) {
  if (w.coefficient(0) != 1) return false;
  if (!w.has_integer_coefficients() || !w.has_nonnegative_coefficients()) return false;
  if (w.coefficient_sum() != mpq_class(mpz_class(1) << wc.dimension)) return false;
  for (const auto& [e, c] : w.terms()) {
    if (e == 0) continue;
    if (e > wc.length || e % wc.divisor != 0 || e < wc.min_weight) return false;
  }
  if (wc.contains_all_one == AllOne::Yes && w.coefficient(wc.length) != 1) return false;
  if (wc.contains_all_one == AllOne::No && w.coefficient(wc.length) != 0) return false;
  // Dual coefficients via Krawtchouk sums (no integrality requirement here).
  for (int j = 1; j < wc.dual_min_weight; ++j) {
    mpq_class b = 0;
    for (const auto& [e, c] : w.terms()) b += c * mpq_class(krawtchouk(wc.length, j, e));
    if (sgn(b) != 0) return false;
  }
  return true;
}

Design weight_words_design(const ZkCode& code, int weight) {
  if (code.modulus() != 2) throw InvalidArgument("designs are extracted from binary codes");
  Design d;
  d.point_count = code.length();
  code.for_each_codeword([&](std::span<const Int> w) {
    if (hamming_weight(w) != weight || weight == 0) return;
    std::vector<int> block;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j]) block.push_back(static_cast<int>(j));
    d.blocks.push_back(std::move(block));
  });
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

std::optional<std::int64_t> is_2_design(const Design& design) {
  if (design.blocks.empty() || design.point_count < 2) return std::nullopt;
  const auto v = static_cast<std::size_t>(design.point_count);
  std::vector<std::int64_t> pair(v * v, 0);
  for (const auto& b : design.blocks)
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y) ++pair[static_cast<std::size_t>(b[x]) * v + static_cast<std::size_t>(b[y])];
  const std::int64_t lambda = pair[1];
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y)
      if (pair[x * v + y] != lambda) return std::nullopt;
  return lambda;
}

}  // namespace unimod
