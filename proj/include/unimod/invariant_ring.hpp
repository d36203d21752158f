#pragma once

#include <array>
#include <utility>
#include <vector>

#include "unimod/lattice.hpp"
#include "unimod/poly.hpp"

namespace unimod {

struct RingGenerators {
  TrivariatePoly a;        // x^3 + y^3 + z^3
  TrivariatePoly p;        // 3xyz
  TrivariatePoly b;        // x^3y^3 + x^3z^3 + y^3z^3
  TrivariatePoly alpha12;  // a(a^3 + 8p^3)
  TrivariatePoly beta6;    // a^2 - 12b
  TrivariatePoly gamma18;  // a^6 - 20a^3p^3 - 8p^6
  TrivariatePoly delta36;  // p^3(a^3 - p^3)^3
};
const RingGenerators& ring_generators();

/// a1 d36 + a2 A^3 + a3 A^2 B^2 + a4 A B^4 + a5 B^6 + a6 B G A + a7 B G B^2
/// (A = alpha12, B = beta6, G = gamma18) with a2..a7 solved as affine
/// functions of a1 from: coefficient of x^36 is 1 and every monomial of
/// weight 1..11 vanishes (the weight of x^i y^j z^l is 36 - i).
class CweFamily {
 public:
  CweFamily(std::array<TrivariatePoly, 7> terms, std::array<mpq_class, 6> constant, std::array<mpq_class, 6> slope);

  /// a_i = constant + slope * a1 for i = 2..7.
  std::pair<mpq_class, mpq_class> relation(int i) const;
  mpq_class a(int i, const mpq_class& a1) const;

  /// Coefficient of x^i y^j z^l as constant + slope * a1.
  std::pair<mpq_class, mpq_class> coefficient(int i, int j, int l) const;

  TrivariatePoly evaluate(const mpq_class& a1) const;

 private:
  std::array<TrivariatePoly, 7> terms_;
  std::array<mpq_class, 6> constant_;
  std::array<mpq_class, 6> slope_;
};

/// Throws SolveFailed when the constraints do not fix a2..a7.
CweFamily extremal_cwe_family();

/// The a1 making the coefficient of y^15 z^21 vanish.
mpq_class admissible_a1();
TrivariatePoly admissible_cwe();

/// Weight-36 monomials x^0 y^j z^l with odd j and nonzero coefficient.
std::vector<std::pair<int, int>> odd_ones_full_weight_terms(const TrivariatePoly& cwe);

/// Combination of g4^((n-12j)/4) g12^j (g4 = 1 + 8y^3, g12 = 1 + 264y^6 +
/// 440y^9 + 24y^12) with constant term 1 and no weights in (0, min_weight)
/// or above max_weight. Throws NoSolution or NonUnique.
UnivariatePoly gleason_ternary_we(int n, int min_weight, int max_weight);

struct ThetaPair {
  ThetaPrefix theta;
  ThetaPrefix shadow;
};

/// Leading terms of theta and shadow series of an extremal odd unimodular
/// lattice in dimension 36 with alpha norm-1 shadow vectors. Throws
/// AlphaOutOfRange unless 0 <= alpha <= 16.
ThetaPair extremal_theta36(int alpha);

/// The same for minimum norm 3 with 960 - alpha norm-3 vectors and beta
/// norm-1 shadow vectors. Throws ConstraintViolated unless
/// 0 <= beta <= alpha/60 < 16.
ThetaPair min3_theta36(int alpha, int beta);

/// 2 floor(n/24) + 2, or 3 for n = 23.
int extremal_bound(int n);

}  // namespace unimod
