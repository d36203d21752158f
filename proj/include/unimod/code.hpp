#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "unimod/matrix.hpp"
#include "unimod/poly.hpp"

namespace unimod {

/// A Z_k-submodule of Z_k^n. Generators are kept in a canonical form: the
/// nonzero rows of the Hermite normal form of the lifted generators stacked
/// on k*I, reduced modulo k. Equal codes have equal generator matrices.
class ZkCode {
 public:
  ZkCode(int modulus, int length, const IntMatrix& generators);

  int modulus() const { return modulus_; }
  int length() const { return length_; }
  const IntMatrix& generators() const { return generators_; }

  /// Additive order of each canonical row; |C| is their product.
  const std::vector<int>& row_orders() const { return orders_; }
  mpz_class cardinality() const;

  bool contains(std::span<const Int> word) const;

  /// Calls f(word) for every codeword (entries in [0, k)). Throws
  /// CardinalityTooLarge when |C| exceeds `limit`.
  void for_each_codeword(const std::function<void(std::span<const Int>)>& f,
                         std::uint64_t limit = std::uint64_t{1} << 26) const;

  /// Hermite basis of the Construction A lattice {x in Z^n : x mod k in C}.
  const IntMatrix& lattice_basis() const { return lattice_basis_; }

  friend bool operator==(const ZkCode& a, const ZkCode& b) {
    return a.modulus_ == b.modulus_ && a.length_ == b.length_ && a.generators_ == b.generators_;
  }

 private:
  int modulus_;
  int length_;
  IntMatrix lattice_basis_;
  IntMatrix generators_;
  std::vector<int> orders_;
};

inline constexpr int kInfiniteDistance = INT_MAX;

ZkCode dual_code(const ZkCode& code);
bool is_self_dual(const ZkCode& code);

/// Number of nonzero coordinates.
int hamming_weight(std::span<const Int> word);

/// Sum over codewords of y^wt(c).
UnivariatePoly hamming_we(const ZkCode& code, std::uint64_t limit = std::uint64_t{1} << 26);

/// Minimum nonzero Hamming weight, kInfiniteDistance for the zero code.
int minimum_distance(const UnivariatePoly& weight_enumerator);

/// (1/|C|) (1+(q-1)y)^n W((1-y)/(1+(q-1)y)). Throws NonIntegerResult when a
/// coefficient of the transform is not an integer.
UnivariatePoly macwilliams_dual_we(const UnivariatePoly& w, int n, const mpz_class& cardinality, int q);

struct BinaryCodePair {
  ZkCode residue;
  ZkCode torsion;
};

/// Residue and torsion codes of a Z_4 code. When the code is self-dual the
/// torsion code must be the dual of the residue; TorsionMismatch otherwise.
BinaryCodePair residue_torsion(const ZkCode& code);

/// m_1 + 4 m_2 + m_3 for a word over Z_4.
int euclidean_weight(std::span<const Int> word);

struct EuclideanBounds {
  int lower;
  int upper;
};
/// min{d(C1), 4 d(C2)} <= d_E(C) <= 4 d(C2) for a self-dual Z_4 code. d(C2) comes from the
/// MacWilliams transform of the residue enumerator.
EuclideanBounds min_euclidean_bounds(const ZkCode& code);

enum class AllOne { No, Yes, Unknown };

struct WeightConstraints {
  int length;
  int dimension;
  int divisor;          // every nonzero weight is a multiple of this
  int min_weight;       // smallest nonzero weight
  int dual_min_weight;  // B_1 .. B_{d'-1} of the dual vanish
  AllOne contains_all_one = AllOne::Unknown;
};

/// Every binary weight enumerator compatible with the constraints. Throws NoSolution
/// when there is none.
std::vector<UnivariatePoly> solve_constrained_we(const WeightConstraints& constraints);

/// The checker used by solve_constrained_we; exposed for tests.
bool satisfies_constraints(const UnivariatePoly& w, const WeightConstraints& constraints);

struct Design {
  int point_count = 0;
  std::vector<std::vector<int>> blocks;
};

/// Supports of the weight-w codewords of a binary code.
Design weight_words_design(const ZkCode& code, int weight);

/// lambda when every pair of points lies in exactly lambda blocks, absent for
/// the empty design or when the pair counts differ.
std::optional<std::int64_t> is_2_design(const Design& design);

}  // namespace unimod
