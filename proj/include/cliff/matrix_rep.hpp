#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/pauli.hpp"

namespace cliff {

inline constexpr std::size_t kMaxRepGenerators = 24;
inline constexpr std::size_t kMaxDenseDim = 4096;
inline constexpr std::size_t kMaxRegularGenerators = 12;
inline constexpr double kRelationTolerance = 1e-12;

// Generators of a faithful matrix representation, stored as exact Pauli
// strings; `matrix(i)` densifies generator i.
struct RepResult {
  Signature sig;
  std::vector<PauliString> generators;
  std::size_t spinor_dim = 1;
  bool faithful = false;

  OperatorMatrix matrix(std::size_t i) const {
    return generators.at(i).dense(spinor_dim);
  }

  std::vector<OperatorMatrix> matrices() const {
    std::vector<OperatorMatrix> out;
    for (std::size_t i = 0; i < generators.size(); ++i)
      out.push_back(matrix(i));
    return out;
  }
};

struct RelationCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

// Blade images are distinct Pauli strings (hence linearly independent, so the
// representation is faithful) iff the generators' (x, z) masks are linearly
// independent over GF2.
inline bool generators_independent(const std::vector<PauliString> &gens) {
  std::array<std::uint64_t, 64> pivot{}; // pivot[i] has leading bit i
  for (const auto &g : gens) {
    std::uint64_t v = (std::uint64_t{g.x} << 32) | g.z;
    while (v) {
      const int lead = 63 - std::countl_zero(v);
      if (!pivot[lead]) {
        pivot[lead] = v;
        break;
      }
      v ^= pivot[lead];
    }
    if (!v)
      return false;
  }
  return true;
}

// Jordan-Wigner construction on ceil(k/2) qubits, qubit 0 the most significant
// tensor factor:
//   gamma_{2j}   = Z x ... x Z x X_j x 1 ...
//   gamma_{2j+1} = Z x ... x Z x Y_j x 1 ...
// A generator with square -1 is i times the positive one.
inline RepResult jordan_wigner_rep(const Signature &sig) {
  const std::size_t k = sig.size();
  if (k > kMaxRepGenerators)
    throw bound_error("Jordan-Wigner representation supports at most " +
                      std::to_string(kMaxRepGenerators) + " generators, got " +
                      std::to_string(k));
  const std::size_t qubits = (k + 1) / 2;
  RepResult rep;
  rep.sig = sig;
  rep.spinor_dim = std::size_t{1} << qubits;
  auto qubit_bit = [&](std::size_t j) {
    return std::uint32_t{1} << (qubits - 1 - j);
  };
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t j = a / 2;
    PauliString p;
    for (std::size_t q = 0; q < j; ++q)
      p.z |= qubit_bit(q);
    p.x |= qubit_bit(j);
    if (a % 2 == 1) {
      // Y = i X Z
      p.z |= qubit_bit(j);
      p.phase = 1;
    }
    if (sig.square(a) < 0)
      p = p.times_i();
    rep.generators.push_back(p);
  }
  rep.faithful = generators_independent(rep.generators);
  return rep;
}

// max over a, b of || g_a g_b + g_b g_a - 2 delta_ab s_a 1 ||_inf (row-sum norm).
inline RelationCheck verify_relations(std::span<const OperatorMatrix> gens,
                                      const Signature &sig) {
  RelationCheck out;
  if (gens.size() != sig.size())
    return out;
  double worst = 0.0;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a; b < gens.size(); ++b) {
      OperatorMatrix ac = gens[a] * gens[b] + gens[b] * gens[a];
      if (a == b)
        ac.diagonal().array() -= cplx(2.0 * sig.square(a), 0.0);
      const double dev = ac.cwiseAbs().rowwise().sum().maxCoeff();
      worst = std::max(worst, dev);
    }
  }
  out.max_deviation = worst;
  out.ok = worst <= kRelationTolerance;
  return out;
}

// Same check on the exact Pauli form; used for spinor dimensions where dense
// products are too costly.
inline RelationCheck verify_relations(const RepResult &rep, const Signature &sig) {
  if (rep.generators.size() != sig.size())
    return {};
  if (rep.spinor_dim <= 256) {
    const auto mats = rep.matrices();
    return verify_relations(std::span<const OperatorMatrix>(mats), sig);
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < rep.generators.size(); ++a) {
    for (std::size_t b = a; b < rep.generators.size(); ++b) {
      PauliSum ac(rep.spinor_dim);
      ac.add(rep.generators[a] * rep.generators[b], 1.0);
      ac.add(rep.generators[b] * rep.generators[a], 1.0);
      if (a == b)
        ac.add(PauliString{}, -2.0 * sig.square(a));
      // Each Pauli string has unit row sums, so this bounds the inf-norm.
      double dev = 0.0;
      for (const auto &[key, c] : ac.terms())
        dev += std::abs(c);
      worst = std::max(worst, dev);
    }
  }
  return {worst <= kRelationTolerance, worst};
}

// Pauli form of the image of a blade: the ordered product of its generators.
inline PauliString blade_pauli(Blade b, const RepResult &rep) {
  PauliString p;
  for (auto i : b.members())
    p = p * rep.generators.at(i);
  return p;
}

template <CoefficientRing R>
PauliSum rep_multivector_pauli(const Multivector<R> &x, const RepResult &rep) {
  static_assert(ring_traits<R>::is_signed,
                "matrix representations need a signed ring");
  if (!(x.signature() == rep.sig))
    throw config_error("multivector signature " + x.signature().str() +
                       " does not match representation " + rep.sig.str());
  PauliSum out(rep.spinor_dim);
  for (const auto &[b, c] : x.terms())
    out.add(blade_pauli(b, rep), cplx(ring_traits<R>::to_double(c), 0.0));
  return out;
}

template <CoefficientRing R>
OperatorMatrix rep_multivector(const Multivector<R> &x, const RepResult &rep) {
  if (rep.spinor_dim > kMaxDenseDim)
    throw bound_error("dense representation limited to dimension " +
                      std::to_string(kMaxDenseDim));
  return rep_multivector_pauli(x, rep).dense();
}

enum class Side { Left, Right };

// Matrix of x -> z x (Left) or x -> x z (Right) in the blade basis, blade
// bitmask order.
template <CoefficientRing R>
OperatorMatrix regular_rep_matrix(const Multivector<R> &z, Side side) {
  static_assert(ring_traits<R>::is_signed,
                "regular representation needs a signed ring");
  const Signature &sig = z.signature();
  if (sig.size() > kMaxRegularGenerators)
    throw bound_error("regular representation limited to " +
                      std::to_string(kMaxRegularGenerators) + " generators");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << sig.size());
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Blade basis{static_cast<std::uint32_t>(col)};
    for (const auto &[b, c] : z.terms()) {
      const auto prod =
          side == Side::Left ? blade_mul(b, basis, sig) : blade_mul(basis, b, sig);
      m(prod.blade.bits, col) += prod.sign * ring_traits<R>::to_double(c);
    }
  }
  return m;
}

} // namespace cliff
