#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "unimod/matrix.hpp"

namespace unimod {

/// Full-rank lattice in R^m spanned by the rows of an integer basis divided
/// by sqrt(scale). Construction A over Z_k has scale k; shadows and neighbors
/// live at scale 4k.
class Lattice {
 public:
  Lattice(IntMatrix basis, Int scale);

  std::size_t dimension() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  Int scale() const { return scale_; }

  /// Same lattice with basis multiplied by f and scale by f^2.
  Lattice rescaled(Int factor) const;

  /// Divides out the largest f with f | basis and f^2 | scale.
  Lattice simplified() const;

  /// Whether the vector v / sqrt(scale()) (v in the basis' ambient units) lies in the lattice.
  bool contains(std::span<const mpq_class> v) const;
  bool contains(std::span<const Int> v) const;

 private:
  IntMatrix basis_;
  Int scale_;
};

/// basis * basis^T (numerator of the Gram matrix).
IntMatrix gram_numerator(const Lattice& lattice);
/// (basis * basis^T) / scale, exact.
RationalMatrix gram(const Lattice& lattice);
mpq_class gram_determinant(const Lattice& lattice);

Lattice dual(const Lattice& lattice);
bool is_integral(const Lattice& lattice);
bool is_unimodular(const Lattice& lattice);

/// The same lattice with an LLL-reduced basis (delta = 0.99). The transform
/// satisfies transform * original.basis() == lattice.basis().
struct ReducedLattice {
  Lattice lattice;
  IntMatrix transform;
};
ReducedLattice reduce(const Lattice& lattice);

/// Vector counts by exact norm up to a bound. A theta series prefix when
/// enumerating a lattice, or the analogous counts of a coset.
class ThetaPrefix {
 public:
  ThetaPrefix() = default;
  explicit ThetaPrefix(mpq_class bound) : bound_(std::move(bound)) {}

  const mpq_class& bound() const { return bound_; }
  const std::map<mpq_class, std::uint64_t>& counts() const { return counts_; }

  std::uint64_t count(const mpq_class& norm) const;
  void add(const mpq_class& norm, std::uint64_t n);

  /// Smallest positive norm with a nonzero count, if any lies within the bound.
  std::optional<mpq_class> min_norm() const;
  /// Count at min_norm(), zero if there is none.
  std::uint64_t kissing() const;
  std::uint64_t total() const;

  friend bool operator==(const ThetaPrefix&, const ThetaPrefix&) = default;

 private:
  mpq_class bound_ = 0;
  std::map<mpq_class, std::uint64_t> counts_;
};

struct EnumerationOptions {
  /// Tree-node budget; BudgetExceeded is thrown beyond it.
  std::uint64_t node_budget = 10'000'000'000ULL;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
  /// Receives one line per completed enumeration stratum.
  std::function<void(const std::string&)> progress;
  /// Label used in progress lines.
  std::string label;
};

ThetaPrefix theta_prefix(const Lattice& lattice, const mpq_class& bound, const EnumerationOptions& options = {});

/// Counts of v in L + t with (v, v) <= bound; t is given in the basis'
/// ambient units (the actual vector is t / sqrt(scale)).
ThetaPrefix short_vectors_in_coset(const Lattice& lattice, std::span<const mpq_class> t, const mpq_class& bound,
                                   const EnumerationOptions& options = {});

/// Minimum norm of the coset L + t, if it is at most `limit`.
std::optional<mpq_class> coset_minimum(const Lattice& lattice, std::span<const mpq_class> t, const mpq_class& limit,
                                       const EnumerationOptions& options = {});

/// All lattice vectors of exactly the given norm, as integer rows in the
/// basis' ambient units (both signs), in deterministic order.
IntMatrix vectors_of_norm(const Lattice& lattice, const mpq_class& norm, const EnumerationOptions& options = {});

}  // namespace unimod
