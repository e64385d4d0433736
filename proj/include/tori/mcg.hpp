// Mapping-class calculus for the marked torus: 2x2 integer matrices of
// determinant +-1 acting on the (meridian, longitude) basis, their entrywise
// parity classes, and decomposition over the even-shear/sign generators.
//
// The parity map tau sends a matrix to its entries mod 2; the invertible
// parity classes form a group of six, and the preimage of {identity,
// antidiagonal} is exactly the set of classes reachable from the inclusion
// marking by the moves this library models.  The quadruple-point parity of a
// pair of markings depends only on tau of their quotient: identity parity
// gives 0, antidiagonal parity gives 1, anything else is not comparable.
//
// All arithmetic is exact; products are range-checked through 128-bit
// intermediates.  Entry magnitudes are capped at 10^9 on construction so
// every intermediate of the decomposition verifier provably fits in 64 bits.
#pragma once

#include <cstdint>
#include <vector>

#include "tori/errors.hpp"

namespace tori::mcg {

inline constexpr long long kEntryBound = 1000000000;  // 10^9

// Row-major [a b; c d], det = +-1, orientation of the marking basis.
struct MappingClass {
  long long a = 1, b = 0, c = 0, d = 1;

  // Validates determinant +-1 (NotUnimodular) and the entry cap.
  static MappingClass make(long long a, long long b, long long c, long long d);

  long long det() const;
  bool operator==(const MappingClass&) const = default;
};

MappingClass multiply(const MappingClass& f, const MappingClass& g);
// Exact integer inverse via the adjugate divided by det (+-1).
MappingClass inverse(const MappingClass& f);

// Entrywise parities of a determinant-+-1 matrix (always invertible mod 2).
struct ParityClass {
  bool a = true, b = false, c = false, d = true;

  static ParityClass identity() { return {true, false, false, true}; }
  static ParityClass antidiagonal() { return {false, true, true, false}; }

  bool operator==(const ParityClass&) const = default;
};

ParityClass tau(const MappingClass& f);
ParityClass multiply(const ParityClass& f, const ParityClass& g);
ParityClass inverse(const ParityClass& f);

// tau in {identity, antidiagonal}: the marking is reachable from the
// inclusion marking by a regular homotopy of the embedded torus.
bool reg_homotopic_to_inclusion(const MappingClass& f);

// Quadruple-point parity between two markings: 0 when tau(g f^-1) is the
// identity, 1 when it is the antidiagonal; NotRegularlyHomotopic otherwise.
int q_parity(const MappingClass& f, const MappingClass& g);

// Generators of the preimage of the identity parity class:
//   MeridianShear   [1 2; 0 1]   double shear along the meridian
//   LongitudeShear  [1 0; 2 1]   double shear along the longitude
//   Negation        [-1 0; 0 -1]
//   Reflection      [-1 0; 0 1]
enum class Generator : int {
  MeridianShear = 0,
  LongitudeShear = 1,
  Negation = 2,
  Reflection = 3,
};

struct GenToken {
  Generator gen = Generator::MeridianShear;
  bool inverse = false;

  bool operator==(const GenToken&) const = default;
};

MappingClass generator_matrix(Generator g);

// Product of the word's generator matrices, left to right.
MappingClass apply_word(const std::vector<GenToken>& word);

// Exact word over the four generators multiplying out to f.  Requires
// tau(f) = identity (NotInTauU otherwise).  Strategy: Euclidean reduction
// of the first column by even-quotient shears (remainders strictly shrink
// because a stays odd while c stays even, so nearest-multiple ties cannot
// happen), then one shear run clears b, then a sign fix; the recorded
// left-multiplications, inverted in order, are the word.  The result is
// re-multiplied and compared to f before returning.
std::vector<GenToken> decompose_tau_u(const MappingClass& f);

}  // namespace tori::mcg
