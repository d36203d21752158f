#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "unimod/code.hpp"
#include "unimod/lattice.hpp"

namespace unimod {

/// (1/sqrt(k)) {x in Z^n : x mod k in C}. Throws NotSelfDual.
Lattice construction_a(const ZkCode& code);

/// Square matrix whose row i+1 is row i shifted right, the wrapped entry
/// negated modulo k.
IntMatrix negacirculant(std::span<const Int> first_row, Int modulus);

struct NegacirculantSpec {
  int modulus = 0;
  std::array<Int, 9> first_row_a{};
  std::array<Int, 9> first_row_b{};
};

/// The [36,18] code generated by (I_18 | [[A, B], [-B^T, A^T]]). Throws
/// NotSelfDual unless A A^T + B B^T = -I_9 modulo k.
ZkCode build_double_negacirculant(const NegacirculantSpec& spec);

/// Z_4 seed rows M, an r x (n - r) matrix; the code is generated by (I_r | M)
/// together with twice a basis of the dual of its binary residue.
struct Z4Seed {
  IntMatrix rows;
};

/// Throws NotDoublyEven when the residue of (I_r | M) is not doubly even and
/// CompletionFailed when the completed code is not self-dual.
ZkCode build_z4(const Z4Seed& seed);

/// C36_1 .. C36_10, D36_1 .. D36_9, E36_1, E36_2. Throws UnknownName.
ZkCode dataset(const std::string& name);
const std::vector<std::string>& dataset_names();
NegacirculantSpec negacirculant_spec(const std::string& name);
Z4Seed z4_seed(const std::string& name);

/// FNV-1a over the embedded data files (name and content, in name order).
std::uint64_t dataset_checksum();

}  // namespace unimod
