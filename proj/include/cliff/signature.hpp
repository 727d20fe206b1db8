#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cliff/errors.hpp"

namespace cliff {

// Diagonal generator metric: squares[i] is e_i * e_i, either +1 or -1.
class Signature {
public:
  Signature() = default;

  Signature(std::initializer_list<int> squares) {
    for (int s : squares)
      push_back(s);
  }

  explicit Signature(const std::vector<int> &squares) {
    squares_.reserve(squares.size());
    for (int s : squares)
      push_back(s);
  }

  // p generators squaring to +1 followed by q squaring to -1.
  static Signature pq(std::size_t p, std::size_t q) {
    Signature sig;
    sig.squares_.assign(p, 1);
    sig.squares_.insert(sig.squares_.end(), q, -1);
    return sig;
  }

  static Signature euclidean(std::size_t k) { return pq(k, 0); }

  void push_back(int square) {
    if (square != 1 && square != -1)
      throw config_error("generator square must be +1 or -1, got " +
                         std::to_string(square));
    squares_.push_back(static_cast<std::int8_t>(square));
  }

  std::size_t size() const noexcept { return squares_.size(); }
  bool empty() const noexcept { return squares_.empty(); }

  int square(std::size_t i) const {
    if (i >= squares_.size())
      throw config_error("generator index " + std::to_string(i) +
                         " out of range for signature of size " +
                         std::to_string(squares_.size()));
    return squares_[i];
  }

  std::size_t n_plus() const noexcept {
    std::size_t n = 0;
    for (auto s : squares_)
      n += s > 0;
    return n;
  }
  std::size_t n_minus() const noexcept { return size() - n_plus(); }

  std::vector<int> squares() const {
    return std::vector<int>(squares_.begin(), squares_.end());
  }

  // Bitmask of generators with square -1 (first 32 generators only).
  std::uint32_t negative_mask() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < squares_.size() && i < 32; ++i)
      if (squares_[i] < 0)
        m |= std::uint32_t{1} << i;
    return m;
  }

  // "++-" style rendering.
  std::string str() const {
    std::string s;
    for (auto q : squares_)
      s += q > 0 ? '+' : '-';
    return s;
  }

  Signature concat(const Signature &other) const {
    Signature out = *this;
    out.squares_.insert(out.squares_.end(), other.squares_.begin(),
                        other.squares_.end());
    return out;
  }

  friend bool operator==(const Signature &, const Signature &) = default;

private:
  std::vector<std::int8_t> squares_;
};

} // namespace cliff
