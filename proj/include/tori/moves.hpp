// Move calculus for deformations of an embedded torus: sequences of
// elementary moves with a mod-2 invariant q.
//
// Tokens:
//   A        a quadruple-point birth move
//   AInv     the reverse of A
//   B        a quadruple-point pass move
//   Iso      an ambient isotopy step (no quadruple points)
//   RigidRot a rigid rotation of all of space (no quadruple points)
//
// q of a sequence is the parity of the number of A, AInv, and B tokens; Iso
// and RigidRot never contribute.  q is additive under concatenation and
// invariant under time reversal, which swaps A with AInv and reverses order.
//
// The builders return canonical sequences for standard deformations together
// with their q values; word_to_moves compiles a mapping-class generator word
// (see tori/mcg.hpp) into moves, optionally preceded by the marking-swap
// sequence, so the parity of a marking change can be read off q.
#pragma once

#include <string>
#include <vector>

#include "tori/errors.hpp"
#include "tori/mcg.hpp"

namespace tori::moves {

enum class MoveToken : int {
  A = 0,
  AInv = 1,
  B = 2,
  Iso = 3,
  RigidRot = 4,
};

// Stable display name: "A", "A_INV", "B", "ISO", "ROT".
const char* token_name(MoveToken token);

struct Move {
  MoveToken kind = MoveToken::Iso;
  std::string note;  // optional free-form annotation

  bool operator==(const Move&) const = default;
};

using MoveSequence = std::vector<Move>;

// Parity of the number of A / AInv / B tokens.
int q_of(const MoveSequence& seq);

MoveSequence concat(const MoveSequence& first, const MoveSequence& second);

// Time reversal: reverse order; A and AInv swap, the rest are self-inverse.
MoveSequence reversed(const MoveSequence& seq);

// Double shear along the meridian, performed as a birth, a pass, and an
// un-birth: q = 0.
MoveSequence double_meridian_twist();
// Double shear along the longitude, same shape: q = 0.
MoveSequence double_longitude_twist();
// Rigid half-turn of space: q = 0.
MoveSequence rotate_pi();
// Reflection realized by a birth/un-birth pair and an isotopy: q = 0.
MoveSequence reflect_xy();
// Exchange of meridian and longitude: one birth plus isotopies, q = 1.
MoveSequence swap_ml();

// Counts of the singular slices of a sweep of a closed surface, together
// with the surface's Euler characteristic.  Valid data satisfies
// n_min - n_saddle + n_max = chi - 1 with all counts nonnegative.
struct MorseData {
  long long n_min = 0;
  long long n_saddle = 0;
  long long n_max = 0;
  long long chi = 2;

  // Validates the count identity (InconsistentMorseData otherwise).
  static MorseData make(long long n_min, long long n_saddle, long long n_max,
                        long long chi);
};

// Sweep sequence: one initial birth, then one A per minimum, one B per
// saddle, one AInv per maximum; q = chi mod 2.
MoveSequence morse_sweep(const MorseData& data);

// Compile a generator word into moves.  An inverse generator contributes the
// time reversal of its sequence.  With swap_prefix, the swap_ml sequence is
// prepended, which flips q.
MoveSequence word_to_moves(const std::vector<mcg::GenToken>& word,
                           bool swap_prefix);

}  // namespace tori::moves
