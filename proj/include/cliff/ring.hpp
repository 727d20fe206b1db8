#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "cliff/errors.hpp"

namespace cliff {

enum class RingTag { GF2, ExactRational, Float64 };

inline std::string_view ring_name(RingTag tag) {
  switch (tag) {
  case RingTag::GF2:
    return "gf2";
  case RingTag::ExactRational:
    return "rational";
  case RingTag::Float64:
    return "float";
  }
  return "?";
}

inline RingTag parse_ring(std::string_view name) {
  if (name == "gf2" || name == "GF2" || name == "binary")
    return RingTag::GF2;
  if (name == "rational" || name == "q" || name == "exact")
    return RingTag::ExactRational;
  if (name == "float" || name == "float64" || name == "real")
    return RingTag::Float64;
  throw config_error("unknown ring '" + std::string(name) + "'");
}

// The binary field {0, 1}. Negation is the identity, so every sign collapses.
struct GF2 {
  bool bit = false;

  constexpr GF2() = default;
  constexpr explicit GF2(bool b) : bit(b) {}

  friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2{a.bit != b.bit}; }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return a + b; }
  friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2{a.bit && b.bit}; }
  friend constexpr GF2 operator-(GF2 a) { return a; }
  GF2 &operator+=(GF2 o) { return *this = *this + o; }
  GF2 &operator*=(GF2 o) { return *this = *this * o; }
  friend constexpr bool operator==(GF2, GF2) = default;
};

using Rational = boost::multiprecision::cpp_rational;

template <class R> struct ring_traits;

template <> struct ring_traits<GF2> {
  static constexpr RingTag tag = RingTag::GF2;
  static constexpr bool is_signed = false;
  static GF2 zero() { return GF2{false}; }
  static GF2 one() { return GF2{true}; }
  static bool is_zero(GF2 x) { return !x.bit; }
  static GF2 from_int(long long v) { return GF2{(v % 2) != 0}; }
  static std::string to_string(GF2 x) { return x.bit ? "1" : "0"; }
  static double to_double(GF2 x) { return x.bit ? 1.0 : 0.0; }
};

template <> struct ring_traits<Rational> {
  static constexpr RingTag tag = RingTag::ExactRational;
  static constexpr bool is_signed = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational &x) { return x == 0; }
  static Rational from_int(long long v) { return Rational(v); }
  static std::string to_string(const Rational &x) { return x.str(); }
  static double to_double(const Rational &x) {
    return x.template convert_to<double>();
  }
};

template <> struct ring_traits<double> {
  static constexpr RingTag tag = RingTag::Float64;
  static constexpr bool is_signed = true;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static double from_int(long long v) { return static_cast<double>(v); }
  // Shortest representation that reads back to the same double.
  static std::string to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
  }
  static double to_double(double x) { return x; }
};

template <class R>
concept CoefficientRing = requires { ring_traits<R>::tag; };

template <class R> R apply_sign(const R &c, int sign) {
  return sign < 0 ? R(-c) : c;
}

} // namespace cliff
