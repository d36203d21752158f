#pragma once

// Naive reference implementations used as oracles by the tests.

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "unimod/code.hpp"
#include "unimod/lattice.hpp"

namespace testing_support {

using unimod::Int;
using unimod::IntMatrix;
using unimod::Lattice;

inline IntMatrix identity_basis(std::size_t n) { return IntMatrix::identity(n); }

inline unimod::ZkCode tetracode() { return unimod::ZkCode(3, 4, IntMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}}, 4)); }

inline unimod::ZkCode hamming84() {
  return unimod::ZkCode(2, 8,
                        IntMatrix::from_rows({{1, 0, 0, 0, 0, 1, 1, 1},
                                              {0, 1, 0, 0, 1, 0, 1, 1},
                                              {0, 0, 1, 0, 1, 1, 0, 1},
                                              {0, 0, 0, 1, 1, 1, 1, 0}},
                                             8));
}

// Every codeword, from all coefficient vectors over Z_k.
inline std::set<std::vector<Int>> naive_codewords(int k, int n, const IntMatrix& gens) {
  std::set<std::vector<Int>> out;
  const std::size_t r = gens.rows();
  std::vector<Int> coef(r, 0);
  while (true) {
    std::vector<Int> w(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) w[j] = (w[j] + coef[i] * gens(i, j)) % k;
    out.insert(w);
    std::size_t p = 0;
    while (p < r && ++coef[p] == k) coef[p++] = 0;
    if (p == r) break;
  }
  return out;
}

// All of Z_k^n orthogonal to the generators.
inline std::set<std::vector<Int>> naive_dual(int k, int n, const IntMatrix& gens) {
  std::set<std::vector<Int>> out;
  std::vector<Int> x(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < gens.rows() && ok; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * gens(i, j);
      ok = s % k == 0;
    }
    if (ok) out.insert(x);
    std::size_t p = 0;
    while (p < x.size() && ++x[p] == k) x[p++] = 0;
    if (p == x.size()) break;
  }
  return out;
}

// Number of coefficient vectors naive_theta visits for a plain lattice.
inline double naive_box_size(const Lattice& l, const mpq_class& bound) {
  const unimod::RationalMatrix ginv = unimod::inverse(unimod::gram(l));
  double size = 1;
  for (std::size_t i = 0; i < l.dimension(); ++i) size *= 2 * (std::sqrt(bound.get_d() * ginv(i, i).get_d()) + 1.0) + 2;
  return size;
}

// Counts of x*B/sqrt(s) + t/sqrt(s) by norm, over a box that provably
// contains every vector of norm <= bound.
inline std::map<mpq_class, std::uint64_t> naive_theta(const Lattice& l, const mpq_class& bound,
                                                      std::vector<mpq_class> t = {}) {
  const std::size_t n = l.dimension();
  if (t.empty()) t.assign(n, 0);
  const unimod::RationalMatrix binv = unimod::inverse(unimod::RationalMatrix(l.basis()));
  const unimod::RationalVector c = unimod::apply_row(t, binv);
  const unimod::RationalMatrix ginv = unimod::inverse(unimod::gram(l));
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::sqrt(bound.get_d() * ginv(i, i).get_d()) + 1.0;
    lo[i] = static_cast<Int>(std::floor(-c[i].get_d() - r));
    hi[i] = static_cast<Int>(std::ceil(-c[i].get_d() + r));
  }
  std::map<mpq_class, std::uint64_t> out;
  std::vector<Int> x = lo;
  while (true) {
    mpq_class norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = t[j];
      for (std::size_t i = 0; i < n; ++i) v += x[i] * l.basis()(i, j);
      norm += v * v;
    }
    norm /= l.scale();
    if (norm <= bound) ++out[norm];
    std::size_t p = 0;
    while (p < n && ++x[p] > hi[p]) {
      x[p] = lo[p];
      ++p;
    }
    if (p == n) break;
  }
  return out;
}

inline IntMatrix random_nonsingular(std::mt19937& rng, std::size_t n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  while (true) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (sgn(unimod::determinant(m)) != 0) return m;
  }
}

// A random product of elementary integer row operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<Int> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const Int m = mult(rng);
    for (std::size_t j = 0; j < n; ++j) u(a, j) += m * u(b, j);
  }
  return u;
}

}  // namespace testing_support
