#include "tori/moves.hpp"

#include <string>

namespace tori::moves {

namespace {

Move mv(MoveToken kind, const char* note) { return Move{kind, note}; }

}  // namespace

const char* token_name(MoveToken token) {
  switch (token) {
    case MoveToken::A: return "A";
    case MoveToken::AInv: return "A_INV";
    case MoveToken::B: return "B";
    case MoveToken::Iso: return "ISO";
    case MoveToken::RigidRot: return "ROT";
  }
  throw InternalError("move token out of range");
}

int q_of(const MoveSequence& seq) {
  int parity = 0;
  for (const Move& move : seq) {
    if (move.kind == MoveToken::A || move.kind == MoveToken::AInv ||
        move.kind == MoveToken::B) {
      parity ^= 1;
    }
  }
  return parity;
}

MoveSequence concat(const MoveSequence& first, const MoveSequence& second) {
  MoveSequence out = first;
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

MoveSequence reversed(const MoveSequence& seq) {
  MoveSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    Move move = *it;
    if (move.kind == MoveToken::A) {
      move.kind = MoveToken::AInv;
    } else if (move.kind == MoveToken::AInv) {
      move.kind = MoveToken::A;
    }
    out.push_back(move);
  }
  return out;
}

MoveSequence double_meridian_twist() {
  return {mv(MoveToken::A, "birth"), mv(MoveToken::A, "second birth"),
          mv(MoveToken::B, "pass"), mv(MoveToken::AInv, "un-birth")};
}

MoveSequence double_longitude_twist() {
  return {mv(MoveToken::A, "birth"), mv(MoveToken::A, "second birth"),
          mv(MoveToken::B, "pass"), mv(MoveToken::AInv, "un-birth")};
}

MoveSequence rotate_pi() { return {mv(MoveToken::RigidRot, "half-turn")}; }

MoveSequence reflect_xy() {
  return {mv(MoveToken::A, "birth"), mv(MoveToken::A, "second birth"),
          mv(MoveToken::Iso, "slide")};
}

MoveSequence swap_ml() {
  return {mv(MoveToken::A, "birth"), mv(MoveToken::Iso, "slide"),
          mv(MoveToken::Iso, "slide back")};
}

MorseData MorseData::make(long long n_min, long long n_saddle, long long n_max,
                          long long chi) {
  if (n_min < 0 || n_saddle < 0 || n_max < 0) {
    throw InconsistentMorseData("singularity counts must be nonnegative");
  }
  if (n_min - n_saddle + n_max != chi - 1) {
    throw InconsistentMorseData(
        "counts (" + std::to_string(n_min) + ", " + std::to_string(n_saddle) +
        ", " + std::to_string(n_max) + ") do not satisfy min - saddle + max = " +
        std::to_string(chi) + " - 1");
  }
  return MorseData{n_min, n_saddle, n_max, chi};
}

MoveSequence morse_sweep(const MorseData& data) {
  MoveSequence out;
  out.reserve(static_cast<size_t>(1 + data.n_min + data.n_saddle + data.n_max));
  out.push_back(mv(MoveToken::A, "sweep start"));
  for (long long i = 0; i < data.n_min; ++i) {
    out.push_back(mv(MoveToken::A, "minimum"));
  }
  for (long long i = 0; i < data.n_saddle; ++i) {
    out.push_back(mv(MoveToken::B, "saddle"));
  }
  for (long long i = 0; i < data.n_max; ++i) {
    out.push_back(mv(MoveToken::AInv, "maximum"));
  }
  return out;
}

MoveSequence word_to_moves(const std::vector<mcg::GenToken>& word,
                           bool swap_prefix) {
  MoveSequence out;
  if (swap_prefix) out = swap_ml();
  for (const mcg::GenToken& token : word) {
    MoveSequence part;
    switch (token.gen) {
      case mcg::Generator::MeridianShear:
        part = double_meridian_twist();
        break;
      case mcg::Generator::LongitudeShear:
        part = double_longitude_twist();
        break;
      case mcg::Generator::Negation:
        part = rotate_pi();
        break;
      case mcg::Generator::Reflection:
        part = reflect_xy();
        break;
      default:
        throw UnknownGenerator("generator index " +
                               std::to_string(static_cast<int>(token.gen)) +
                               " has no move sequence");
    }
    if (token.inverse) part = reversed(part);
    out = concat(out, part);
  }
  return out;
}

}  // namespace tori::moves
