#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cliff/errors.hpp"

namespace cliff {

using cplx = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using SparseOperator = Eigen::SparseMatrix<cplx>;

// i^k for k mod 4.
inline cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
  case 0:
    return {1, 0};
  case 1:
    return {0, 1};
  case 2:
    return {-1, 0};
  default:
    return {0, -1};
  }
}

// i^phase * X^x * Z^z acting on basis states by
//   |c> -> i^phase (-1)^popcount(z & c) |c ^ x>.
// Masks are in basis-index bit positions.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  std::uint8_t phase = 0; // power of i, mod 4

  cplx entry_phase(std::uint32_t col) const {
    int k = phase + ((std::popcount(z & col) & 1) ? 2 : 0);
    return i_power(k);
  }

  PauliString operator*(const PauliString &o) const {
    // Z^z1 X^x2 = (-1)^|z1 & x2| X^x2 Z^z1
    int k = phase + o.phase + ((std::popcount(z & o.x) & 1) ? 2 : 0);
    return {x ^ o.x, z ^ o.z, static_cast<std::uint8_t>(k & 3)};
  }

  PauliString times_i(int k = 1) const {
    return {x, z, static_cast<std::uint8_t>((phase + k) & 3)};
  }

  bool commutes_with(const PauliString &o) const {
    return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
  }

  OperatorMatrix dense(std::size_t dim) const {
    OperatorMatrix m = OperatorMatrix::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
    for (std::uint32_t c = 0; c < dim; ++c)
      m(c ^ x, c) = entry_phase(c);
    return m;
  }

  friend bool operator==(const PauliString &, const PauliString &) = default;
};

// Linear combination of Pauli strings keyed by (x, z); phases are folded into
// the complex coefficients.
class PauliSum {
public:
  using key_type = std::pair<std::uint32_t, std::uint32_t>;

  PauliSum() = default;
  explicit PauliSum(std::size_t dim) : dim_(dim) {}

  static PauliSum identity(std::size_t dim) {
    PauliSum s(dim);
    s.add(PauliString{}, cplx{1, 0});
    return s;
  }

  static PauliSum from(const PauliString &p, std::size_t dim,
                       cplx coeff = {1, 0}) {
    PauliSum s(dim);
    s.add(p, coeff);
    return s;
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::map<key_type, cplx> &terms() const noexcept { return terms_; }

  void add(const PauliString &p, cplx coeff) {
    coeff *= i_power(p.phase);
    auto [it, inserted] = terms_.try_emplace(key_type{p.x, p.z}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == cplx{0, 0})
        terms_.erase(it);
    }
  }

  PauliSum &operator+=(const PauliSum &o) {
    check(o);
    for (const auto &[k, c] : o.terms_)
      add(PauliString{k.first, k.second, 0}, c);
    return *this;
  }
  PauliSum &operator-=(const PauliSum &o) { return *this += cplx{-1, 0} * o; }

  friend PauliSum operator+(PauliSum a, const PauliSum &b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum &b) { return a -= b; }

  friend PauliSum operator*(cplx s, const PauliSum &a) {
    PauliSum out(a.dim_);
    for (const auto &[k, c] : a.terms_)
      out.add(PauliString{k.first, k.second, 0}, s * c);
    return out;
  }

  friend PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    a.check(b);
    PauliSum out(a.dim_);
    for (const auto &[ka, ca] : a.terms_)
      for (const auto &[kb, cb] : b.terms_) {
        PauliString p = PauliString{ka.first, ka.second, 0} *
                        PauliString{kb.first, kb.second, 0};
        out.add(p, ca * cb);
      }
    return out;
  }

  PauliSum adjoint() const {
    // (X^x Z^z)^dagger = Z^z X^x = (-1)^|x & z| X^x Z^z
    PauliSum out(dim_);
    for (const auto &[k, c] : terms_) {
      const double s = (std::popcount(k.first & k.second) & 1) ? -1.0 : 1.0;
      out.add(PauliString{k.first, k.second, 0}, s * std::conj(c));
    }
    return out;
  }

  // sqrt(tr(A^dagger A) / dim): distinct Pauli strings are orthonormal.
  double hs_norm() const {
    double s = 0;
    for (const auto &[k, c] : terms_)
      s += std::norm(c);
    return std::sqrt(s);
  }

  // Normalized Hilbert-Schmidt inner product tr(A^dagger B) / dim.
  friend cplx hs_inner(const PauliSum &a, const PauliSum &b) {
    cplx s{0, 0};
    for (const auto &[k, c] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it != b.terms_.end())
        s += std::conj(c) * it->second;
    }
    return s;
  }

  OperatorMatrix dense() const {
    const auto n = static_cast<Eigen::Index>(dim_);
    OperatorMatrix m = OperatorMatrix::Zero(n, n);
    for (const auto &[k, c] : terms_) {
      PauliString p{k.first, k.second, 0};
      for (std::uint32_t col = 0; col < dim_; ++col)
        m(col ^ p.x, col) += c * p.entry_phase(col);
    }
    return m;
  }

  SparseOperator sparse() const {
    std::vector<Eigen::Triplet<cplx>> trips;
    trips.reserve(terms_.size() * dim_);
    for (const auto &[k, c] : terms_) {
      PauliString p{k.first, k.second, 0};
      for (std::uint32_t col = 0; col < dim_; ++col)
        trips.emplace_back(static_cast<int>(col ^ p.x), static_cast<int>(col),
                           c * p.entry_phase(col));
    }
    const auto n = static_cast<Eigen::Index>(dim_);
    SparseOperator s(n, n);
    s.setFromTriplets(trips.begin(), trips.end());
    s.prune(cplx{0, 0}, 0.0);
    return s;
  }

private:
  void check(const PauliSum &o) const {
    if (dim_ != o.dim_)
      throw config_error("operator dimensions differ: " + std::to_string(dim_) +
                         " vs " + std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::map<key_type, cplx> terms_;
};

inline PauliSum commutator(const PauliSum &a, const PauliSum &b) {
  return a * b - b * a;
}

} // namespace cliff
