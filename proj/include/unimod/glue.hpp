#pragma once

#include <array>
#include <optional>
#include <utility>

#include "unimod/lattice.hpp"

namespace unimod {

/// L_0^* = L_0 u (L_0 + t_1) u (L_0 + t_2) u (L_0 + t_3) for an odd unimodular L.
/// All lattices and representatives share one scale, so the representatives
/// are integer vectors in the ambient units of `even_part`.
struct ShadowDecomposition {
  Lattice lattice;    // L, rescaled to the common scale
  Lattice even_part;  // L_0
  std::array<RationalVector, 3> coset_reps;
  int in_lattice_index = 0;

  /// Indices of the two representatives whose cosets form the shadow.
  std::array<int, 2> shadow_indices() const;
};

/// Vectors of even norm. Throws NotOdd when L is even.
Lattice even_sublattice(const Lattice& lattice);

ShadowDecomposition shadow(const Lattice& lattice);

/// Counts of shadow vectors of norm <= bound.
ThetaPrefix shadow_prefix(const ShadowDecomposition& d, const mpq_class& bound, const EnumerationOptions& options = {});
std::optional<mpq_class> shadow_minimum(const ShadowDecomposition& d, const mpq_class& limit,
                                        const EnumerationOptions& options = {});

/// The two unimodular overlattices L_0 u (L_0 + t) other than L. Throws
/// DimensionNotDivisibleBy4.
std::pair<Lattice, Lattice> neighbors(const Lattice& lattice);

/// Norm-3 counts of the two neighbors, ascending.
std::pair<std::uint64_t, std::uint64_t> n_counts(const Lattice& lattice, const EnumerationOptions& options = {});

/// The min-norm-3 neighbor of an extremal 36-dimensional lattice whose
/// neighbors have norm-3 counts {0, 960}, after checking kissing number 960
/// and shadow minimum 5. Absent when any condition fails.
std::optional<Lattice> long_shadow_extract(const Lattice& lattice, const EnumerationOptions& options = {});

}  // namespace unimod
