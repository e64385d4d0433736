#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tori/errors.hpp"
#include "tori/mcg.hpp"
#include "tori/moves.hpp"

namespace {

using tori::InconsistentMorseData;
using tori::UnknownGenerator;
namespace mcg = tori::mcg;
namespace moves = tori::moves;

std::vector<moves::MoveToken> kinds_of(const moves::MoveSequence& seq) {
  std::vector<moves::MoveToken> out;
  out.reserve(seq.size());
  for (const moves::Move& move : seq) out.push_back(move.kind);
  return out;
}

// Same generator-word sampler as the mcg tests: bounded product of the four
// even generators and their inverses.
mcg::MappingClass random_even(std::mt19937_64& rng, long long bound) {
  mcg::MappingClass acc = mcg::MappingClass::make(1, 0, 0, 1);
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> len(0, 8);
  const int steps = len(rng);
  for (int i = 0; i < steps; ++i) {
    const int choice = pick(rng);
    mcg::MappingClass factor =
        mcg::generator_matrix(static_cast<mcg::Generator>(choice % 4));
    if (choice >= 4) factor = mcg::inverse(factor);
    const mcg::MappingClass next = mcg::multiply(acc, factor);
    if (std::max({std::llabs(next.a), std::llabs(next.b), std::llabs(next.c),
                  std::llabs(next.d)}) > bound) {
      break;
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("move token names are stable") {
  CHECK(std::string(moves::token_name(moves::MoveToken::A)) == "A");
  CHECK(std::string(moves::token_name(moves::MoveToken::AInv)) == "A_INV");
  CHECK(std::string(moves::token_name(moves::MoveToken::B)) == "B");
  CHECK(std::string(moves::token_name(moves::MoveToken::Iso)) == "ISO");
  CHECK(std::string(moves::token_name(moves::MoveToken::RigidRot)) == "ROT");
}

TEST_CASE("q counts only the quadruple point moves") {
  CHECK(moves::q_of({}) == 0);
  CHECK(moves::q_of({{moves::MoveToken::Iso, ""},
                     {moves::MoveToken::RigidRot, ""}}) == 0);
  CHECK(moves::q_of({{moves::MoveToken::A, ""}}) == 1);
  CHECK(moves::q_of({{moves::MoveToken::AInv, ""}}) == 1);
  CHECK(moves::q_of({{moves::MoveToken::B, ""}}) == 1);
  CHECK(moves::q_of({{moves::MoveToken::A, ""},
                     {moves::MoveToken::B, ""},
                     {moves::MoveToken::Iso, ""}}) == 0);
}

TEST_CASE("builder sequences have the pinned parities") {
  CHECK(moves::q_of(moves::double_meridian_twist()) == 0);
  CHECK(moves::q_of(moves::double_longitude_twist()) == 0);
  CHECK(moves::q_of(moves::rotate_pi()) == 0);
  CHECK(moves::q_of(moves::reflect_xy()) == 0);
  CHECK(moves::q_of(moves::swap_ml()) == 1);

  CHECK(kinds_of(moves::double_meridian_twist()) ==
        std::vector<moves::MoveToken>{moves::MoveToken::A, moves::MoveToken::A,
                                      moves::MoveToken::B,
                                      moves::MoveToken::AInv});
  CHECK(kinds_of(moves::swap_ml()) ==
        std::vector<moves::MoveToken>{moves::MoveToken::A, moves::MoveToken::Iso,
                                      moves::MoveToken::Iso});
}

TEST_CASE("concatenation adds parities and reversal preserves them") {
  const moves::MoveSequence dmt = moves::double_meridian_twist();
  const moves::MoveSequence swap = moves::swap_ml();
  CHECK(moves::q_of(moves::concat(dmt, swap)) == 1);
  CHECK(moves::q_of(moves::concat(swap, swap)) == 0);
  CHECK(moves::concat(dmt, {}).size() == dmt.size());

  const moves::MoveSequence rev = moves::reversed(dmt);
  CHECK(kinds_of(rev) ==
        std::vector<moves::MoveToken>{moves::MoveToken::A, moves::MoveToken::B,
                                      moves::MoveToken::AInv,
                                      moves::MoveToken::AInv});
  CHECK(moves::q_of(rev) == moves::q_of(dmt));
  CHECK(moves::reversed(rev) == dmt);
  CHECK(moves::q_of(moves::reversed(swap)) == 1);
}

TEST_CASE("morse data validation") {
  CHECK_NOTHROW(moves::MorseData::make(1, 0, 0, 2));
  CHECK_NOTHROW(moves::MorseData::make(0, 1, 0, 0));
  CHECK_NOTHROW(moves::MorseData::make(0, 0, 0, 1));
  CHECK_NOTHROW(moves::MorseData::make(0, 3, 0, -2));
  CHECK_THROWS_AS(moves::MorseData::make(-1, 0, 0, 0), InconsistentMorseData);
  CHECK_NOTHROW(moves::MorseData::make(1, 1, 1, 2));
  CHECK_THROWS_AS(moves::MorseData::make(1, 1, 1, 0), InconsistentMorseData);
  CHECK_THROWS_AS(moves::MorseData::make(0, 0, 0, 2), InconsistentMorseData);
  CHECK_THROWS_AS(moves::MorseData::make(2, 0, 0, 0), InconsistentMorseData);
}

TEST_CASE("morse sweep parity equals the euler characteristic mod 2") {
  const struct {
    long long n_min, n_saddle, n_max, chi;
  } cases[] = {
      {1, 0, 0, 2},  {0, 0, 1, 2},  {2, 1, 0, 2},   // chi 2
      {0, 0, 0, 1},  {1, 1, 0, 1},  {1, 2, 1, 1},   // chi 1
      {0, 1, 0, 0},  {1, 2, 0, 0},  {0, 2, 1, 0},   // chi 0
      {2, 3, 0, 0},  {0, 3, 2, 0},  {1, 3, 1, 0},   // chi 0
      {0, 3, 0, -2}, {1, 4, 0, -2}, {0, 4, 1, -2},  // chi -2
  };
  for (const auto& c : cases) {
    const moves::MorseData data =
        moves::MorseData::make(c.n_min, c.n_saddle, c.n_max, c.chi);
    const moves::MoveSequence seq = moves::morse_sweep(data);
    CHECK(seq.size() ==
          static_cast<size_t>(1 + c.n_min + c.n_saddle + c.n_max));
    CHECK(moves::q_of(seq) == ((c.chi % 2) + 2) % 2);
  }

  CHECK(kinds_of(moves::morse_sweep(moves::MorseData::make(1, 1, 0, 1))) ==
        std::vector<moves::MoveToken>{moves::MoveToken::A, moves::MoveToken::A,
                                      moves::MoveToken::B});
}

TEST_CASE("generator words compile to move sequences") {
  CHECK(moves::word_to_moves({}, false).empty());
  CHECK(moves::q_of(moves::word_to_moves({}, true)) == 1);
  CHECK(kinds_of(moves::word_to_moves({}, true)) ==
        kinds_of(moves::swap_ml()));

  CHECK(moves::word_to_moves({{mcg::Generator::MeridianShear, false}}, false) ==
        moves::double_meridian_twist());
  CHECK(moves::word_to_moves({{mcg::Generator::MeridianShear, true}}, false) ==
        moves::reversed(moves::double_meridian_twist()));
  CHECK(moves::word_to_moves({{mcg::Generator::Negation, false}}, false) ==
        moves::rotate_pi());
  CHECK(moves::word_to_moves({{mcg::Generator::Reflection, true}}, false) ==
        moves::reversed(moves::reflect_xy()));

  const moves::MoveSequence two =
      moves::word_to_moves({{mcg::Generator::MeridianShear, false},
                            {mcg::Generator::LongitudeShear, false}},
                           false);
  CHECK(two.size() == 8);
  CHECK(moves::q_of(two) == 0);

  CHECK_THROWS_AS(
      moves::word_to_moves({{static_cast<mcg::Generator>(7), false}}, false),
      UnknownGenerator);
}

TEST_CASE("compiled decompositions satisfy the parity law") {
  const mcg::MappingClass swap = mcg::MappingClass::make(0, 1, 1, 0);
  std::mt19937_64 rng(0x6d6f7665735f71ull);
  for (int trial = 0; trial < 100; ++trial) {
    const mcg::MappingClass even = random_even(rng, 1000000);
    const std::vector<mcg::GenToken> word = mcg::decompose_tau_u(even);
    CHECK(moves::q_of(moves::word_to_moves(word, false)) == 0);
    CHECK(moves::q_of(moves::word_to_moves(word, true)) == 1);

    // A matrix in the antidiagonal parity class factors as (even word) after
    // an initial swap; its compiled parity matches q_parity.
    const mcg::MappingClass odd = mcg::multiply(even, swap);
    const std::vector<mcg::GenToken> odd_word =
        mcg::decompose_tau_u(mcg::multiply(odd, mcg::inverse(swap)));
    const moves::MoveSequence compiled = moves::word_to_moves(odd_word, true);
    CHECK(moves::q_of(compiled) ==
          mcg::q_parity(mcg::MappingClass::make(1, 0, 0, 1), odd));
  }
}
