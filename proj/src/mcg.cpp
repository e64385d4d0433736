#include "tori/mcg.hpp"

#include <cstdlib>
#include <string>

namespace tori::mcg {

namespace {

long long checked_entry(__int128 value, const char* context) {
  const __int128 bound = static_cast<__int128>(1) << 62;
  if (value >= bound || value <= -bound) {
    throw InternalError(std::string("matrix entry overflow in ") + context);
  }
  return static_cast<long long>(value);
}

// Quotient of n by d rounded to the nearest integer.  Callers guarantee the
// two nearest multiples are never equidistant from n.
long long round_div(long long n, long long d) {
  long long best = n / d;
  for (long long cand : {best - 1, best + 1}) {
    __int128 r_best = static_cast<__int128>(n) - static_cast<__int128>(best) * d;
    __int128 r_cand = static_cast<__int128>(n) - static_cast<__int128>(cand) * d;
    if (r_best < 0) r_best = -r_best;
    if (r_cand < 0) r_cand = -r_cand;
    if (r_cand < r_best) best = cand;
  }
  return best;
}

}  // namespace

MappingClass MappingClass::make(long long a, long long b, long long c, long long d) {
  for (long long entry : {a, b, c, d}) {
    if (entry > kEntryBound || entry < -kEntryBound) {
      throw MatrixEntryTooLarge("matrix entries must have magnitude at most " +
                                std::to_string(kEntryBound));
    }
  }
  const __int128 det =
      static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1 && det != -1) {
    throw NotUnimodular("matrix [" + std::to_string(a) + " " + std::to_string(b) +
                        "; " + std::to_string(c) + " " + std::to_string(d) +
                        "] has determinant " +
                        std::to_string(static_cast<long long>(det)) +
                        ", expected +1 or -1");
  }
  return MappingClass{a, b, c, d};
}

long long MappingClass::det() const {
  return checked_entry(
      static_cast<__int128>(a) * d - static_cast<__int128>(b) * c, "det");
}

MappingClass multiply(const MappingClass& f, const MappingClass& g) {
  MappingClass out;
  out.a = checked_entry(
      static_cast<__int128>(f.a) * g.a + static_cast<__int128>(f.b) * g.c,
      "multiply");
  out.b = checked_entry(
      static_cast<__int128>(f.a) * g.b + static_cast<__int128>(f.b) * g.d,
      "multiply");
  out.c = checked_entry(
      static_cast<__int128>(f.c) * g.a + static_cast<__int128>(f.d) * g.c,
      "multiply");
  out.d = checked_entry(
      static_cast<__int128>(f.c) * g.b + static_cast<__int128>(f.d) * g.d,
      "multiply");
  return out;
}

MappingClass inverse(const MappingClass& f) {
  const long long det = f.det();
  if (det == 1) {
    return MappingClass{f.d, -f.b, -f.c, f.a};
  }
  return MappingClass{-f.d, f.b, f.c, -f.a};
}

ParityClass tau(const MappingClass& f) {
  ParityClass out;
  out.a = (f.a % 2) != 0;
  out.b = (f.b % 2) != 0;
  out.c = (f.c % 2) != 0;
  out.d = (f.d % 2) != 0;
  return out;
}

ParityClass multiply(const ParityClass& f, const ParityClass& g) {
  ParityClass out;
  out.a = (f.a && g.a) != (f.b && g.c);
  out.b = (f.a && g.b) != (f.b && g.d);
  out.c = (f.c && g.a) != (f.d && g.c);
  out.d = (f.c && g.b) != (f.d && g.d);
  return out;
}

ParityClass inverse(const ParityClass& f) {
  // det mod 2 is 1 for every invertible parity class, so the inverse is the
  // adjugate with entries mod 2 (signs vanish).
  ParityClass out;
  out.a = f.d;
  out.b = f.b;
  out.c = f.c;
  out.d = f.a;
  return out;
}

bool reg_homotopic_to_inclusion(const MappingClass& f) {
  const ParityClass p = tau(f);
  return p == ParityClass::identity() || p == ParityClass::antidiagonal();
}

int q_parity(const MappingClass& f, const MappingClass& g) {
  const ParityClass p = tau(multiply(g, inverse(f)));
  if (p == ParityClass::identity()) return 0;
  if (p == ParityClass::antidiagonal()) return 1;
  throw NotRegularlyHomotopic(
      "the two markings differ by a parity class that is neither the "
      "identity nor the antidiagonal");
}

MappingClass generator_matrix(Generator g) {
  switch (g) {
    case Generator::MeridianShear:
      return MappingClass{1, 2, 0, 1};
    case Generator::LongitudeShear:
      return MappingClass{1, 0, 2, 1};
    case Generator::Negation:
      return MappingClass{-1, 0, 0, -1};
    case Generator::Reflection:
      return MappingClass{-1, 0, 0, 1};
  }
  throw UnknownGenerator("generator index " +
                         std::to_string(static_cast<int>(g)) +
                         " is out of range");
}

MappingClass apply_word(const std::vector<GenToken>& word) {
  MappingClass acc;  // identity
  for (const GenToken& token : word) {
    MappingClass m = generator_matrix(token.gen);
    if (token.inverse) m = inverse(m);
    acc = multiply(acc, m);
  }
  return acc;
}

std::vector<GenToken> decompose_tau_u(const MappingClass& f) {
  if (tau(f) != ParityClass::identity()) {
    throw NotInTauU(
        "matrix parities are not the identity class; no word over the even "
        "generators can produce it");
  }

  long long a = f.a, b = f.b, c = f.c, d = f.d;
  // Left-multiplications applied so far, as unit generator tokens.
  std::vector<GenToken> ops;

  // The word lists one token per unit shear, so extreme entries could ask
  // for hundreds of millions of tokens; refuse far before memory pressure.
  constexpr long long kMaxWordTokens = 2000000;
  const auto append_shear = [&](Generator gen, long long k) {
    if (ops.size() + static_cast<unsigned long long>(std::llabs(k)) >
        static_cast<unsigned long long>(kMaxWordTokens)) {
      throw DecompositionTooLong("decomposition word would exceed " +
                                 std::to_string(kMaxWordTokens) + " tokens");
    }
    for (long long i = 0; i < std::llabs(k); ++i) {
      ops.push_back(GenToken{gen, k < 0});
    }
  };
  // Left-multiply by MeridianShear^k: row1 += 2k * row2.
  const auto row1_shear = [&](long long k) {
    if (k == 0) return;
    a = checked_entry(a + 2 * static_cast<__int128>(k) * c, "row1_shear");
    b = checked_entry(b + 2 * static_cast<__int128>(k) * d, "row1_shear");
    append_shear(Generator::MeridianShear, k);
  };
  // Left-multiply by LongitudeShear^k: row2 += 2k * row1.
  const auto row2_shear = [&](long long k) {
    if (k == 0) return;
    c = checked_entry(c + 2 * static_cast<__int128>(k) * a, "row2_shear");
    d = checked_entry(d + 2 * static_cast<__int128>(k) * b, "row2_shear");
    append_shear(Generator::LongitudeShear, k);
  };

  // Euclidean reduction of the first column: a is odd and c is even
  // throughout, so the nearest even multiple is unique and each step leaves
  // the reduced entry strictly smaller in magnitude than the other.
  while (c != 0) {
    row2_shear(-round_div(c, 2 * a));  // now |c| < |a|, or c == 0
    if (c == 0) break;
    row1_shear(-round_div(a, 2 * c));  // now |a| < |c|
  }
  // First column is (a, 0) with a = +-1; b is even because d = +-a and the
  // parity class is the identity.  Clear b with row1 += 2k * row2.
  row1_shear(-b * d / 2);
  // Fix signs on the diagonal.
  if (a < 0 && d < 0) {
    ops.push_back(GenToken{Generator::Negation, false});
  } else if (a < 0 && d > 0) {
    ops.push_back(GenToken{Generator::Reflection, false});
  } else if (a > 0 && d < 0) {
    ops.push_back(GenToken{Generator::Negation, false});
    ops.push_back(GenToken{Generator::Reflection, false});
  }

  // ops applied left-to-right reduce f to the identity, so f is the product
  // of their inverses in the same order.  Negation and Reflection are
  // self-inverse; the shears flip their inverse flag.
  std::vector<GenToken> word;
  word.reserve(ops.size());
  for (const GenToken& op : ops) {
    GenToken token = op;
    if (token.gen == Generator::MeridianShear ||
        token.gen == Generator::LongitudeShear) {
      token.inverse = !token.inverse;
    }
    word.push_back(token);
  }

  if (!(apply_word(word) == f)) {
    throw InternalError("decomposition verification failed");
  }
  return word;
}

}  // namespace tori::mcg
