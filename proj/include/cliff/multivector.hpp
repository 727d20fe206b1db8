#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cliff/blade.hpp"
#include "cliff/errors.hpp"
#include "cliff/ring.hpp"
#include "cliff/signature.hpp"

namespace cliff {

// The four-group {I, T, C, H}: identity, transposition (reversal), Clifford
// conjugation (grade involution), and their composite H = TC.
enum class FourGroup { I, T, C, H };

inline constexpr FourGroup kFourGroup[] = {FourGroup::I, FourGroup::T,
                                           FourGroup::C, FourGroup::H};

constexpr FourGroup compose(FourGroup a, FourGroup b) noexcept {
  // Klein four-group: encode T = 01, C = 10, H = 11 and XOR.
  return static_cast<FourGroup>(static_cast<int>(a) ^ static_cast<int>(b));
}

constexpr int four_group_sign(FourGroup g, int grade) noexcept {
  switch (g) {
  case FourGroup::I:
    return 1;
  case FourGroup::T:
    return reversion_sign(grade);
  case FourGroup::C:
    return grade_involution_sign(grade);
  case FourGroup::H:
    return conjugation_sign(grade);
  }
  return 1;
}

constexpr bool is_anti_automorphism(FourGroup g) noexcept {
  return g == FourGroup::T || g == FourGroup::H;
}

inline std::string_view four_group_name(FourGroup g) {
  constexpr const char *names[] = {"I", "T", "C", "H"};
  return names[static_cast<int>(g)];
}

inline FourGroup parse_four_group(std::string_view s) {
  for (auto g : kFourGroup)
    if (s == four_group_name(g))
      return g;
  throw config_error("unknown four-group element '" + std::string(s) + "'");
}

// Hard ceiling on the number of stored terms in a single product.
inline constexpr std::size_t kMaxTerms = std::size_t{1} << 21;

template <CoefficientRing R> class Multivector {
public:
  using coefficient_type = R;
  using traits = ring_traits<R>;
  using term_map = std::map<Blade, R>;

  Multivector() = default;

  explicit Multivector(Signature sig) : sig_(std::move(sig)) { check_width(); }

  static Multivector scalar(const Signature &sig, const R &c) {
    Multivector m(sig);
    m.add_term(Blade{}, c);
    return m;
  }

  static Multivector blade(const Signature &sig, Blade b,
                           const R &c = traits::one()) {
    Multivector m(sig);
    m.check_blade(b);
    m.add_term(b, c);
    return m;
  }

  static Multivector generator(const Signature &sig, std::size_t i,
                               const R &c = traits::one()) {
    if (i >= sig.size())
      throw config_error("generator index " + std::to_string(i) +
                         " out of range for signature of size " +
                         std::to_string(sig.size()));
    return blade(sig, Blade::generator(i), c);
  }

  const Signature &signature() const noexcept { return sig_; }
  const term_map &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  R coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? traits::zero() : it->second;
  }

  // Adds c to the coefficient of b, dropping the entry if it cancels.
  void add_term(Blade b, const R &c) {
    if (traits::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (traits::is_zero(it->second))
        terms_.erase(it);
    }
  }

  void check_compatible(const Multivector &o) const {
    if (!(sig_ == o.sig_))
      throw ring_error("signature mismatch: " + sig_.str() + " vs " +
                       o.sig_.str());
  }

  Multivector &operator+=(const Multivector &o) {
    check_compatible(o);
    for (const auto &[b, c] : o.terms_)
      add_term(b, c);
    return *this;
  }

  Multivector &operator-=(const Multivector &o) {
    check_compatible(o);
    for (const auto &[b, c] : o.terms_)
      add_term(b, -c);
    return *this;
  }

  Multivector operator-() const {
    Multivector out(sig_);
    for (const auto &[b, c] : terms_)
      out.terms_.emplace(b, -c);
    return out;
  }

  friend Multivector operator+(Multivector a, const Multivector &b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector &b) {
    return a -= b;
  }

  friend Multivector operator*(const R &s, const Multivector &x) {
    Multivector out(x.sig_);
    if (traits::is_zero(s))
      return out;
    for (const auto &[b, c] : x.terms_) {
      R v = s * c;
      if (!traits::is_zero(v))
        out.terms_.emplace(b, std::move(v));
    }
    return out;
  }
  friend Multivector operator*(const Multivector &x, const R &s) { return s * x; }

  friend bool operator==(const Multivector &a, const Multivector &b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  void check_blade(Blade b) const {
    if (b.bits != 0 && std::bit_width(b.bits) > sig_.size())
      throw config_error("blade outside signature of size " +
                         std::to_string(sig_.size()));
  }

private:
  void check_width() const {
    if (sig_.size() > kMaxBladeGenerators)
      throw bound_error("multivectors support at most " +
                        std::to_string(kMaxBladeGenerators) + " generators");
  }

  Signature sig_;
  term_map terms_;
};

// Geometric (Clifford) product, the bilinear extension of blade_mul.
template <CoefficientRing R>
Multivector<R> gp(const Multivector<R> &x, const Multivector<R> &y) {
  x.check_compatible(y);
  const Signature &sig = x.signature();
  Multivector<R> out(sig);
  for (const auto &[a, ca] : x.terms()) {
    for (const auto &[b, cb] : y.terms()) {
      auto [sign, blade] = blade_mul(a, b, sig);
      out.add_term(blade, apply_sign<R>(ca * cb, sign));
    }
    if (out.size() > kMaxTerms)
      throw bound_error("product exceeds " + std::to_string(kMaxTerms) +
                        " terms");
  }
  return out;
}

template <CoefficientRing R>
Multivector<R> operator*(const Multivector<R> &x, const Multivector<R> &y) {
  return gp(x, y);
}

template <CoefficientRing R>
Multivector<R>
linear_combine(const std::vector<std::pair<R, Multivector<R>>> &pairs) {
  if (pairs.empty())
    return Multivector<R>{};
  Multivector<R> out(pairs.front().second.signature());
  for (const auto &[s, x] : pairs) {
    out.check_compatible(x);
    for (const auto &[b, c] : x.terms())
      out.add_term(b, s * c);
  }
  return out;
}

template <CoefficientRing R>
Multivector<R> involution(const Multivector<R> &x, FourGroup g) {
  Multivector<R> out(x.signature());
  for (const auto &[b, c] : x.terms())
    out.add_term(b, apply_sign<R>(c, four_group_sign(g, b.grade())));
  return out;
}

template <CoefficientRing R> R scalar_part(const Multivector<R> &x) {
  return x.coefficient(Blade{});
}

// Re(x^g x), one of the four natural quadratic forms.
template <CoefficientRing R> R norm_form(const Multivector<R> &x, FourGroup g) {
  if constexpr (!ring_traits<R>::is_signed) {
    throw domain_error("quadratic forms are not evaluated over GF2");
  } else {
    // Only blade pairs b*b contribute to the scalar part.
    R acc = ring_traits<R>::zero();
    const Signature &sig = x.signature();
    for (const auto &[b, c] : x.terms()) {
      const int s = four_group_sign(g, b.grade()) * blade_square(b, sig);
      acc += apply_sign<R>(c * c, s);
    }
    return acc;
  }
}

template <CoefficientRing R>
Multivector<R> grade_project(const Multivector<R> &x, int g) {
  if (g < 0)
    throw domain_error("grade must be non-negative");
  Multivector<R> out(x.signature());
  for (const auto &[b, c] : x.terms())
    if (b.grade() == g)
      out.add_term(b, c);
  return out;
}

// Product of all generators.
template <CoefficientRing R> Multivector<R> top(const Signature &sig) {
  if (sig.size() == 0)
    return Multivector<R>::scalar(sig, ring_traits<R>::one());
  const std::uint32_t all =
      sig.size() == 32 ? ~std::uint32_t{0}
                       : (std::uint32_t{1} << sig.size()) - 1;
  return Multivector<R>::blade(sig, Blade{all});
}

// Converts coefficients between rings (GF2 -> signed keeps 0/1 values).
template <CoefficientRing To, CoefficientRing From>
Multivector<To> ring_cast(const Multivector<From> &x) {
  Multivector<To> out(x.signature());
  for (const auto &[b, c] : x.terms()) {
    if constexpr (std::is_same_v<To, double>)
      out.add_term(b, ring_traits<From>::to_double(c));
    else if constexpr (std::is_same_v<To, GF2> && std::is_same_v<From, Rational>) {
      if (denominator(c) % 2 == 0)
        throw ring_error("coefficient " + c.str() + " has no GF2 image");
      out.add_term(b, GF2{numerator(c) % 2 != 0});
    } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, GF2>)
      out.add_term(b, Rational(c.bit ? 1 : 0));
    else if constexpr (std::is_same_v<To, From>)
      out.add_term(b, c);
    else
      static_assert(sizeof(To) == 0, "unsupported ring conversion");
  }
  return out;
}

} // namespace cliff
