#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliff/multivector.hpp"

// The iterated Cliff functor C_{n+1} = Cliff C_n, where each algebra is made a
// quadratic space by one of its four natural norms Re(x^g x).
namespace cliff::hierarchy {

// Sign convention for the generator created from a basis element z:
// it squares to +||z|| (Q) or -||z|| (MinusQ).
enum class SquareRule { Q, MinusQ };

// Whether "Cliff(a, b)" lists the +1 squares first or the -1 squares first.
enum class NotationOrder { PlusFirst, MinusFirst };

struct ConventionConfig {
  FourGroup form_variant = FourGroup::I;
  SquareRule square_rule = SquareRule::Q;
  NotationOrder notation_order = NotationOrder::PlusFirst;

  friend bool operator==(const ConventionConfig &,
                         const ConventionConfig &) = default;
};

inline std::string_view square_rule_name(SquareRule r) {
  return r == SquareRule::Q ? "Q" : "MinusQ";
}
inline std::string_view notation_order_name(NotationOrder o) {
  return o == NotationOrder::PlusFirst ? "PlusFirst" : "MinusFirst";
}
inline SquareRule parse_square_rule(std::string_view s) {
  if (s == "Q" || s == "q" || s == "plus")
    return SquareRule::Q;
  if (s == "MinusQ" || s == "minusq" || s == "-Q" || s == "minus")
    return SquareRule::MinusQ;
  throw config_error("unknown square rule '" + std::string(s) + "'");
}
inline NotationOrder parse_notation_order(std::string_view s) {
  if (s == "PlusFirst" || s == "plus-first")
    return NotationOrder::PlusFirst;
  if (s == "MinusFirst" || s == "minus-first")
    return NotationOrder::MinusFirst;
  throw config_error("unknown notation order '" + std::string(s) + "'");
}

inline std::string to_string(const ConventionConfig &cfg) {
  return std::string(four_group_name(cfg.form_variant)) + "/" +
         std::string(square_rule_name(cfg.square_rule)) + "/" +
         std::string(notation_order_name(cfg.notation_order));
}

// All 16 conventions, form-major in {I,T,C,H} x {Q,MinusQ} x {Plus,Minus}.
inline std::vector<ConventionConfig> all_conventions() {
  std::vector<ConventionConfig> out;
  for (auto g : kFourGroup)
    for (auto r : {SquareRule::Q, SquareRule::MinusQ})
      for (auto o : {NotationOrder::PlusFirst, NotationOrder::MinusFirst})
        out.push_back({g, r, o});
  return out;
}

struct QuadraticSignature {
  std::uint64_t n_plus = 0;
  std::uint64_t n_minus = 0;

  std::uint64_t total() const noexcept { return n_plus + n_minus; }
  std::int64_t difference() const noexcept {
    return static_cast<std::int64_t>(n_plus) - static_cast<std::int64_t>(n_minus);
  }
  friend bool operator==(const QuadraticSignature &,
                         const QuadraticSignature &) = default;
};

inline constexpr std::size_t kInducedBound = 24;
inline constexpr int kMaxChainLevel = 6;

// Value of Re(b^g b) in {+1, -1} for the basis blade b.
inline int blade_norm(Blade b, const Signature &sig, FourGroup g) {
  return four_group_sign(g, b.grade()) * blade_square(b, sig);
}

// Counts the basis blades by the sign of Re(b^g b).
inline QuadraticSignature induced_signature(const Signature &sig, FourGroup g) {
  if (sig.size() > kInducedBound)
    throw bound_error("induced signature enumerates 2^" +
                      std::to_string(sig.size()) + " blades; bound is 2^" +
                      std::to_string(kInducedBound));
  QuadraticSignature q;
  const std::uint64_t count = std::uint64_t{1} << sig.size();
  for (std::uint64_t b = 0; b < count; ++b) {
    if (blade_norm(Blade{static_cast<std::uint32_t>(b)}, sig, g) > 0)
      ++q.n_plus;
    else
      ++q.n_minus;
  }
  return q;
}

inline QuadraticSignature induced_signature(const Signature &sig,
                                            const ConventionConfig &cfg) {
  return induced_signature(sig, cfg.form_variant);
}

inline int apply_square_rule(int norm, SquareRule rule) {
  return rule == SquareRule::Q ? norm : -norm;
}

// Generator signature of Cliff(C) for the algebra C = Cliff(sig): generator j
// is the vector image of basis blade j (blade bitmask order).
inline Signature next_level_signature(const Signature &sig,
                                      const ConventionConfig &cfg) {
  if (sig.size() > kInducedBound)
    throw bound_error("next level would need 2^" + std::to_string(sig.size()) +
                      " generators");
  std::vector<int> squares;
  const std::uint64_t count = std::uint64_t{1} << sig.size();
  squares.reserve(count);
  for (std::uint64_t b = 0; b < count; ++b)
    squares.push_back(apply_square_rule(
        blade_norm(Blade{static_cast<std::uint32_t>(b)}, sig, cfg.form_variant),
        cfg.square_rule));
  return Signature(squares);
}

// C_n: generated by the quadratic space C_{n-1}. `generators` is (n_plus,
// n_minus) of the generator squares, the pair the "Cliff(p, q)" notation names.
struct HierarchyLevel {
  int n = 0;
  std::uint64_t generator_count = 0;
  QuadraticSignature generators;
  // Algebra dimension 2^generator_count, when it fits in 64 bits.
  std::uint64_t dim = 0;
  // Sign counts of the norm form on C_n itself; only computed while C_n is
  // small enough to enumerate.
  bool induced_known = false;
  QuadraticSignature induced;
};

inline std::pair<std::uint64_t, std::uint64_t>
notation_pair(const QuadraticSignature &g, NotationOrder order) {
  return order == NotationOrder::PlusFirst ? std::pair{g.n_plus, g.n_minus}
                                           : std::pair{g.n_minus, g.n_plus};
}

// Builds C_1 .. C_{n_max}, starting from the empty quadratic space (C_0 is the
// null set, so C_1 = Cliff of nothing = the reals).
inline std::vector<HierarchyLevel> hierarchy_chain(int n_max,
                                                   const ConventionConfig &cfg) {
  if (n_max < 1 || n_max > kMaxChainLevel)
    throw bound_error("hierarchy levels run from 1 to " +
                      std::to_string(kMaxChainLevel) + ", got " +
                      std::to_string(n_max));
  std::vector<HierarchyLevel> chain;
  Signature sig; // generators of the current level
  for (int n = 1; n <= n_max; ++n) {
    HierarchyLevel lvl;
    lvl.n = n;
    lvl.generator_count = sig.size();
    lvl.generators = {sig.n_plus(), sig.n_minus()};
    lvl.dim = sig.size() < 64 ? (std::uint64_t{1} << sig.size()) : 0;
    if (sig.size() <= kInducedBound) {
      lvl.induced_known = true;
      lvl.induced = induced_signature(sig, cfg.form_variant);
    }
    chain.push_back(lvl);
    if (n < n_max)
      sig = next_level_signature(sig, cfg);
  }
  return chain;
}

// The chain as printed for C_1 .. C_6, in "Cliff(p, q)" notation.
inline constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 6>
    kPublishedChain = {{{0, 0}, {1, 0}, {2, 0}, {3, 1}, {10, 6}, {32832, 32704}}};

struct LevelMatch {
  int n = 0;
  std::pair<std::uint64_t, std::uint64_t> computed;
  std::pair<std::uint64_t, std::uint64_t> published;
  bool equal = false;
};

struct MatchReport {
  ConventionConfig cfg;
  std::vector<LevelMatch> levels;
  int matches = 0;
  // First level (1-based) that disagrees, 0 if all agree.
  int first_mismatch = 0;
};

inline MatchReport match_published_chain(const ConventionConfig &cfg) {
  MatchReport rep;
  rep.cfg = cfg;
  const auto chain = hierarchy_chain(kMaxChainLevel, cfg);
  for (const auto &lvl : chain) {
    LevelMatch m;
    m.n = lvl.n;
    m.computed = notation_pair(lvl.generators, cfg.notation_order);
    m.published = kPublishedChain[static_cast<std::size_t>(lvl.n - 1)];
    m.equal = m.computed == m.published;
    if (m.equal)
      ++rep.matches;
    else if (rep.first_mismatch == 0)
      rep.first_mismatch = lvl.n;
    rep.levels.push_back(m);
  }
  return rep;
}

// Every convention, ranked by number of reproduced levels; ties keep the
// all_conventions() order.
inline std::vector<MatchReport> search_convention() {
  std::vector<MatchReport> out;
  for (const auto &cfg : all_conventions())
    out.push_back(match_published_chain(cfg));
  std::stable_sort(out.begin(), out.end(),
                   [](const MatchReport &a, const MatchReport &b) {
                     return a.matches > b.matches;
                   });
  return out;
}

// Constructed levels C_1 .. C_top with their generator signatures, so that
// cliffors can be moved up the hierarchy by iota.
class Hierarchy {
public:
  // Multivectors are limited to 32 generators, so C_5 (16 generators) is the
  // highest level that can hold explicit cliffors.
  static constexpr int kMaxConstructed = 5;

  Hierarchy(int top, ConventionConfig cfg) : cfg_(cfg) {
    if (top < 1 || top > kMaxConstructed)
      throw bound_error("levels 1.." + std::to_string(kMaxConstructed) +
                        " can be constructed, got " + std::to_string(top));
    Signature sig;
    for (int n = 1; n <= top; ++n) {
      sigs_.push_back(sig);
      if (n < top)
        sig = next_level_signature(sig, cfg_);
    }
  }

  int top() const noexcept { return static_cast<int>(sigs_.size()); }
  const ConventionConfig &convention() const noexcept { return cfg_; }

  const Signature &level(int n) const {
    if (n < 1 || n > top())
      throw config_error("level " + std::to_string(n) + " not constructed");
    return sigs_[static_cast<std::size_t>(n - 1)];
  }

  // Vector image in C_{n+1} of a cliffor of C_n: blade b becomes generator b.
  template <CoefficientRing R>
  Multivector<R> iota_embed(const Multivector<R> &x, int n) const {
    const Signature &src = level(n);
    const Signature &dst = level(n + 1);
    if (!(x.signature() == src))
      throw config_error("cliffor does not belong to level " + std::to_string(n));
    Multivector<R> out(dst);
    for (const auto &[b, c] : x.terms())
      out.add_term(Blade::generator(b.bits), c);
    return out;
  }

private:
  ConventionConfig cfg_;
  std::vector<Signature> sigs_;
};

} // namespace cliff::hierarchy
