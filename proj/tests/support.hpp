#pragma once

// Seeded generators and brute-force oracles shared by the unit tests and the
// acceptance gate. The oracles work on explicit generator lists and never call
// the bitmask product they are checking.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cliff/binor.hpp"
#include "cliff/expression.hpp"
#include "cliff/multivector.hpp"

namespace cliff::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20261016;

inline int uniform_int(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Signature random_signature(Rng &rng, std::size_t k) {
  Signature sig;
  for (std::size_t i = 0; i < k; ++i)
    sig.push_back(uniform_int(rng, 0, 1) ? 1 : -1);
  return sig;
}

template <CoefficientRing R> R random_coefficient(Rng &rng);

template <> inline GF2 random_coefficient<GF2>(Rng &rng) {
  return GF2{uniform_int(rng, 0, 1) == 1};
}

template <> inline Rational random_coefficient<Rational>(Rng &rng) {
  const int num = uniform_int(rng, -9, 9);
  const int den = uniform_int(rng, 1, 6);
  return Rational(num, den);
}

template <> inline double random_coefficient<double>(Rng &rng) {
  // Wide exponent range so printing has to round-trip non-trivial values.
  const double m = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  return std::ldexp(m, uniform_int(rng, -40, 40));
}

template <CoefficientRing R>
Multivector<R> random_multivector(Rng &rng, const Signature &sig,
                                  int max_terms = 6) {
  Multivector<R> x(sig);
  const std::uint32_t span = std::uint32_t{1} << sig.size();
  const int terms = uniform_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    const auto bits = static_cast<std::uint32_t>(
        std::uniform_int_distribution<std::uint32_t>(0, span - 1)(rng));
    x.add_term(Blade{bits}, random_coefficient<R>(rng));
  }
  return x;
}

// Product of two ascending generator lists: concatenate, bubble sort counting
// transpositions, then cancel equal neighbours using their squares.
struct OracleProduct {
  int sign = 1;
  std::vector<int> members;
};

inline OracleProduct oracle_product(const std::vector<int> &a,
                                    const std::vector<int> &b,
                                    const std::vector<int> &squares) {
  std::vector<int> w = a;
  w.insert(w.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
      }
  OracleProduct out;
  for (std::size_t i = 0; i < w.size();) {
    if (i + 1 < w.size() && w[i] == w[i + 1]) {
      sign *= squares[static_cast<std::size_t>(w[i])];
      i += 2;
    } else {
      out.members.push_back(w[i]);
      ++i;
    }
  }
  out.sign = sign;
  return out;
}

inline std::vector<int> list_of(std::uint32_t bits) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (bits & (std::uint32_t{1} << i))
      out.push_back(i);
  return out;
}

inline Blade blade_of(const std::vector<int> &members) {
  std::uint32_t bits = 0;
  for (int i : members)
    bits |= std::uint32_t{1} << i;
  return Blade{bits};
}

inline std::vector<int> squares_of(const Signature &sig) {
  std::vector<int> s;
  for (std::size_t i = 0; i < sig.size(); ++i)
    s.push_back(sig.square(i));
  return s;
}

// Sign picked up by reversing the order of a blade's generators, counted by
// sorting the reversed list.
inline int oracle_reversal_sign(const std::vector<int> &members) {
  std::vector<int> w(members.rbegin(), members.rend());
  int sign = 1;
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
      }
  return sign;
}

// Sign of the blade under I, T, C, H computed from first principles:
// T reverses, C negates each vector, H does both.
inline int oracle_four_group_sign(const std::vector<int> &members, FourGroup g) {
  const int neg = (members.size() % 2 == 0) ? 1 : -1;
  switch (g) {
  case FourGroup::I:
    return 1;
  case FourGroup::T:
    return oracle_reversal_sign(members);
  case FourGroup::C:
    return neg;
  case FourGroup::H:
    return oracle_reversal_sign(members) * neg;
  }
  return 1;
}

// One randomized instance of the exact algebra laws; returns the number of
// laws that failed.
struct LawFailures {
  int associativity = 0, distributivity = 0, anticommutation = 0,
      clifford_law = 0, involutions = 0, trace_symmetry = 0;
  int total() const {
    return associativity + distributivity + anticommutation + clifford_law +
           involutions + trace_symmetry;
  }
};

inline void check_laws_once(Rng &rng, LawFailures &f) {
  using MV = Multivector<Rational>;
  const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, 8));
  const Signature sig = random_signature(rng, k);
  const MV x = random_multivector<Rational>(rng, sig, 5);
  const MV y = random_multivector<Rational>(rng, sig, 5);
  const MV z = random_multivector<Rational>(rng, sig, 5);

  if (!((x * y) * z == x * (y * z)))
    ++f.associativity;
  if (!(x * (y + z) == x * y + x * z) || !((x + y) * z == x * z + y * z))
    ++f.distributivity;

  const auto i = static_cast<std::size_t>(uniform_int(rng, 0, int(k) - 1));
  const auto j = static_cast<std::size_t>(uniform_int(rng, 0, int(k) - 1));
  const MV ei = MV::generator(sig, i), ej = MV::generator(sig, j);
  if (i != j && !(ei * ej == -(ej * ei)))
    ++f.anticommutation;

  // A random vector squares to sum c_i^2 s_i.
  MV v(sig);
  Rational expected = 0;
  for (std::size_t g = 0; g < k; ++g) {
    const Rational c = random_coefficient<Rational>(rng);
    v.add_term(Blade::generator(g), c);
    expected += c * c * sig.square(g);
  }
  if (!(v * v == MV::scalar(sig, expected)))
    ++f.clifford_law;

  for (FourGroup g : kFourGroup) {
    const MV lhs = involution(x * y, g);
    const MV rhs = is_anti_automorphism(g) ? involution(y, g) * involution(x, g)
                                           : involution(x, g) * involution(y, g);
    bool ok = lhs == rhs && involution(involution(x, g), g) == x;
    for (FourGroup h : kFourGroup)
      ok = ok && involution(involution(x, g), h) == involution(x, compose(g, h));
    // Blade signs against the first-principles oracle.
    for (const auto &[b, c] : x.terms()) {
      const MV one = MV::blade(sig, b);
      const int s = oracle_four_group_sign(list_of(b.bits), g);
      ok = ok && involution(one, g) == (s > 0 ? one : -one);
    }
    if (!ok)
      ++f.involutions;
  }

  if (scalar_part(x * y) != scalar_part(y * x))
    ++f.trace_symmetry;
}

// The exact binor identities on one random signature of k generators and a
// random binor pair; returns the number that failed.
inline int binor_identity_failures(Rng &rng, std::size_t k) {
  using namespace cliff::binor;
  const Signature sig = random_signature(rng, k);
  const int span = k == 0 ? 1 : (1 << std::min<std::size_t>(k, 12));
  const Binor a = random_multivector<GF2>(rng, sig, std::min(span, 40));
  const Binor b = random_multivector<GF2>(rng, sig, std::min(span, 40));
  const Binor e = one(sig), z = zero(sig);
  int failures = 0;
  auto expect = [&failures](bool ok) { failures += ok ? 0 : 1; };
  for (std::size_t s = 0; s < k; ++s)
    expect(binor_xor(iota_unit(s, sig), iota_unit(s, sig)) == e);
  expect(binor_xor(e, e) == e);
  expect(binor_sum(e, e) == z);
  expect(binor_sum(z, a) == a);
  expect(binor_sum(a, a) == z);
  expect(binor_xand(a, b) == gp(top<GF2>(sig), binor_xor(a, b)));
  expect(complement_top(complement_top(a)) == a);
  return failures;
}

// parse(print(x)) == x for `count` random multivectors; returns failures.
template <CoefficientRing R> int round_trip_failures(Rng &rng, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const Signature sig =
        random_signature(rng, static_cast<std::size_t>(uniform_int(rng, 0, 10)));
    const auto x = random_multivector<R>(rng, sig, 8);
    const std::string text = print_expression(x);
    try {
      if (!(parse_expression<R>(text, sig) == x))
        ++failures;
    } catch (const cliff::error &) {
      ++failures;
    }
  }
  return failures;
}

// Malformed and mutated expressions. Each input must either parse or raise a
// cliff::error; anything else (another exception type) counts as a failure.
struct FuzzTally {
  int parsed = 0, rejected = 0, failures = 0;
};

inline std::string fuzz_input(Rng &rng) {
  static const std::vector<std::string> pieces = {
      "e1", "e2", "e3", "e0", "e99", "a", "b", "z", "1", "0", "3/4", "1/0",
      "2.5", "1e3", "1e99999", ".", "e", "+", "-", "*", "/", "(", ")", ",",
      "T(", "C(", "H(", "I(", "Re(", "grade(", "top(", " ", "\n", "#", "$",
      "\x01", "\xff", "1..2", "99999999999999999999999999", "e1e2", "Top"};
  std::string s;
  const int mode = uniform_int(rng, 0, 2);
  if (mode == 0) {
    const int n = uniform_int(rng, 1, 12);
    for (int i = 0; i < n; ++i)
      s += pieces[static_cast<std::size_t>(uniform_int(rng, 0, int(pieces.size()) - 1))];
  } else if (mode == 1) {
    const int n = uniform_int(rng, 0, 30);
    for (int i = 0; i < n; ++i)
      s += static_cast<char>(uniform_int(rng, 0, 255));
  } else {
    // Mutate a well-formed expression.
    s = "3/4*e1*e2 - T(e2 + 2*e3) + grade(e1*e3, 2)";
    const int edits = uniform_int(rng, 1, 4);
    for (int i = 0; i < edits && !s.empty(); ++i) {
      const auto pos = static_cast<std::size_t>(uniform_int(rng, 0, int(s.size()) - 1));
      switch (uniform_int(rng, 0, 2)) {
      case 0:
        s.erase(pos, 1);
        break;
      case 1:
        s.insert(pos, 1, "()+-*/,.e1"[uniform_int(rng, 0, 9)]);
        break;
      default:
        s[pos] = static_cast<char>(uniform_int(rng, 32, 126));
      }
    }
  }
  if (uniform_int(rng, 0, 50) == 0)
    s = std::string(static_cast<std::size_t>(uniform_int(rng, 200, 400)), '(');
  return s;
}

template <CoefficientRing R>
void fuzz_once(const std::string &text, const Signature &sig, bool letters,
               FuzzTally &t) {
  try {
    ParseOptions opts;
    opts.letters = letters;
    (void)parse_expression<R>(text, sig, opts);
    ++t.parsed;
  } catch (const cliff::error &) {
    ++t.rejected;
  } catch (...) {
    ++t.failures;
  }
}

inline FuzzTally fuzz_parser(Rng &rng, int count) {
  FuzzTally t;
  const Signature sig = Signature::pq(2, 1);
  for (int i = 0; i < count; ++i) {
    const std::string text = fuzz_input(rng);
    switch (i % 3) {
    case 0:
      fuzz_once<GF2>(text, sig, true, t);
      break;
    case 1:
      fuzz_once<Rational>(text, sig, false, t);
      break;
    default:
      fuzz_once<double>(text, sig, false, t);
    }
  }
  return t;
}

} // namespace cliff::testing
