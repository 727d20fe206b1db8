#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliff/multivector.hpp"

// Second-order classical logic over the binary field. A binor is a GF2
// multivector; its monomials are sets of unit sets, the product is XOR with
// identity 1 (the empty set) and the sum is addition mod 2 with identity 0.
namespace cliff::binor {

using Binor = Multivector<GF2>;

inline constexpr std::size_t kDefaultFullStateBound = 20;

inline Binor zero(const Signature &sig) { return Binor(sig); }
inline Binor one(const Signature &sig) { return Binor::scalar(sig, GF2{true}); }

// The grade-1 unit set gamma_s. Its square is 1 whatever the metric says,
// since every sign collapses over GF2.
inline Binor iota_unit(std::size_t s, const Signature &sig) {
  return Binor::generator(sig, s);
}

inline Binor binor_xor(const Binor &a, const Binor &b) { return gp(a, b); }

inline Binor binor_sum(const Binor &a, const Binor &b) { return a + b; }

// Terms present in either.
inline Binor binor_sup(const Binor &a, const Binor &b) {
  a.check_compatible(b);
  Binor out = a;
  for (const auto &[blade, c] : b.terms())
    if (out.coefficient(blade) == GF2{false})
      out.add_term(blade, c);
  return out;
}

// Terms present in both.
inline Binor binor_inf(const Binor &a, const Binor &b) {
  a.check_compatible(b);
  Binor out(a.signature());
  for (const auto &[blade, c] : a.terms())
    if (b.coefficient(blade).bit)
      out.add_term(blade, c);
  return out;
}

inline Binor complement_top(const Binor &a) {
  return gp(top<GF2>(a.signature()), a);
}

inline Binor binor_xand(const Binor &a, const Binor &b) {
  return complement_top(binor_xor(a, b));
}

// The formal sum of all 2^N monomials, i.e. the product of (1 + gamma_s).
inline Binor full_algebra_state(const Signature &sig,
                                std::size_t bound = kDefaultFullStateBound) {
  if (sig.size() > bound)
    throw bound_error("full algebra state needs " + std::to_string(sig.size()) +
                      " generators, bound is " + std::to_string(bound));
  Binor out(sig);
  const std::uint64_t count = std::uint64_t{1} << sig.size();
  for (std::uint64_t b = 0; b < count; ++b)
    out.add_term(Blade{static_cast<std::uint32_t>(b)}, GF2{true});
  return out;
}

inline bool is_monomial(const Binor &a) { return a.size() == 1; }

inline int monomial_grade(const Binor &a) {
  if (!is_monomial(a))
    throw domain_error("grade is defined for monomials only; binor has " +
                       std::to_string(a.size()) + " terms");
  return a.terms().begin()->first.grade();
}

// A truth-valued function on a finite sample space, one bit per point.
class BoolFn {
public:
  BoolFn() = default;
  explicit BoolFn(std::vector<bool> values) : values_(std::move(values)) {}

  static BoolFn constant(std::size_t n, bool v) {
    return BoolFn(std::vector<bool>(n, v));
  }

  // "0110" -> {0,1,1,0}.
  static BoolFn parse(std::string_view bits) {
    std::vector<bool> v;
    v.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1')
        throw config_error("truth table must be a string of 0/1, got '" +
                           std::string(bits) + "'");
      v.push_back(c == '1');
    }
    return BoolFn(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](std::size_t i) const { return values_[i]; }
  const std::vector<bool> &values() const noexcept { return values_; }

  bool identically(bool v) const {
    for (bool b : values_)
      if (b != v)
        return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (bool b : values_)
      s += b ? '1' : '0';
    return s;
  }

  friend bool operator==(const BoolFn &, const BoolFn &) = default;

private:
  std::vector<bool> values_;
};

enum class BoolOp { OR, AND, XOR, XAND, POR, PAND };

inline BoolOp parse_bool_op(std::string_view s) {
  if (s == "or" || s == "OR")
    return BoolOp::OR;
  if (s == "and" || s == "AND")
    return BoolOp::AND;
  if (s == "xor" || s == "XOR")
    return BoolOp::XOR;
  if (s == "xand" || s == "XAND")
    return BoolOp::XAND;
  if (s == "por" || s == "POR")
    return BoolOp::POR;
  if (s == "pand" || s == "PAND")
    return BoolOp::PAND;
  throw config_error("unknown Boolean operation '" + std::string(s) + "'");
}

// Boolean reference operations, arithmetic mod 2. POR and PAND are partial:
// their guards (AB == 0, A + B == 1) must hold identically on the sample
// space, otherwise the result is the constant-0 default.
inline BoolFn bool_eval(BoolOp op, const BoolFn &a, const BoolFn &b) {
  if (a.size() != b.size())
    throw config_error("Boolean operands live on different sample spaces");
  const std::size_t n = a.size();
  std::vector<bool> sum(n), prod(n);
  for (std::size_t i = 0; i < n; ++i) {
    sum[i] = a[i] != b[i];
    prod[i] = a[i] && b[i];
  }
  std::vector<bool> out(n);
  switch (op) {
  case BoolOp::OR:
    for (std::size_t i = 0; i < n; ++i)
      out[i] = a[i] || b[i];
    break;
  case BoolOp::AND:
    out = prod;
    break;
  case BoolOp::XOR:
    out = sum;
    break;
  case BoolOp::XAND:
    for (std::size_t i = 0; i < n; ++i)
      out[i] = !sum[i];
    break;
  case BoolOp::POR:
    if (BoolFn(prod).identically(false))
      out = sum;
    break;
  case BoolOp::PAND:
    if (BoolFn(sum).identically(true))
      for (std::size_t i = 0; i < n; ++i)
        out[i] = !sum[i];
    break;
  }
  return BoolFn(std::move(out));
}

} // namespace cliff::binor
