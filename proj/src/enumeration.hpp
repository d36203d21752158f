#pragma once

// Internal: short-vector enumeration over an integer Gram matrix.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "unimod/lattice.hpp"
#include "unimod/matrix.hpp"

namespace unimod::detail {

/// Points y = x + offset_num / denominator (x integral) with exact norm
/// (D y)^T gram (D y) / (scale D^2). Norms are handled as integer numerators
/// over norm_denominator() = scale * D^2.
struct EnumerationProblem {
  IntMatrix gram;                // basis coordinates, integer numerators
  Int scale = 1;
  Int denominator = 1;           // D
  std::vector<Int> offset_num;   // in [0, D); all zero for a plain lattice

  Int norm_denominator() const { return scale * denominator * denominator; }
  bool has_offset() const;
};

/// Norm numerator -> count, for all points with numerator <= bound_num.
/// The zero vector is included when the offset is zero.
std::map<Int, std::uint64_t> count_points(const EnumerationProblem& problem, Int bound_num,
                                          const EnumerationOptions& options);

/// Smallest norm numerator <= limit_num, if any.
std::optional<Int> minimum_norm(const EnumerationProblem& problem, Int limit_num, const EnumerationOptions& options);

/// Integer coordinate vectors x (offset must be zero) with norm numerator exactly target_num.
std::vector<std::vector<Int>> points_of_norm(const EnumerationProblem& problem, Int target_num,
                                             const EnumerationOptions& options);

}  // namespace unimod::detail
