#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cliff/matrix_rep.hpp"
#include "cliff/pauli.hpp"
#include "cliff/spectrum.hpp"

// Finite toy Dirac model. N octads of Clifford generators gamma_a(n),
// a = 1..8, realize the regularized correspondences
//   i dx^mu <- tau gamma^{mu5}(1)
//   i x^mu  <- tau sum_n gamma^{mu5}(n)
//   i p_mu  <- hbar/(N tau) sum_n gamma^{mu6}(n)
//   i       <- sum_n gamma^{56}(n) / N  =: eta
// with gamma^{ab}(n) = gamma_a(n) gamma_b(n).
namespace cliff::dirac {

inline constexpr int kOctadSize = 8;
inline constexpr int kMaxEigenOctads = 3;
inline constexpr int kMaxCombinatorialOctads = 6;

// Which gamma^{mu5} enters the finite mass operator.
enum class MassVariant { FirstOctad, Averaged };

inline std::string_view mass_variant_name(MassVariant v) {
  return v == MassVariant::FirstOctad ? "first-octad" : "averaged";
}

inline MassVariant parse_mass_variant(std::string_view s) {
  if (s == "first-octad" || s == "first")
    return MassVariant::FirstOctad;
  if (s == "averaged" || s == "average")
    return MassVariant::Averaged;
  throw config_error("unknown mass operator variant '" + std::string(s) + "'");
}

struct OctadConfig {
  int n = 1;
  double tau = 1.0;
  double hbar = 1.0;
  // Squares of gamma_1 .. gamma_8, shared by every octad.
  Signature octad_squares = Signature::euclidean(kOctadSize);
  std::array<int, 4> mu_indices{1, 2, 3, 4};
  int coord_aux = 5;
  int momentum_aux = 6;
  int time_index = 1;
  MassVariant mass = MassVariant::FirstOctad;

  double ergon() const { return hbar / (n * tau); }
  std::size_t matrix_dim() const { return std::size_t{1} << (4 * n); }

  Signature full_signature() const {
    Signature sig;
    for (int k = 0; k < n; ++k)
      sig = sig.concat(octad_squares);
    return sig;
  }

  void validate(int max_octads = kMaxEigenOctads) const {
    if (n < 1 || n > max_octads)
      throw bound_error("octad count must be in 1.." + std::to_string(max_octads) +
                        ", got " + std::to_string(n));
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw config_error("chronon tau must be positive and finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
      throw config_error("hbar must be positive and finite");
    if (octad_squares.size() != kOctadSize)
      throw config_error("octad signature needs 8 squares, got " +
                         std::to_string(octad_squares.size()));
    auto in_octad = [](int a) { return a >= 1 && a <= kOctadSize; };
    for (int mu : mu_indices)
      if (!in_octad(mu))
        throw config_error("Lorentz index outside the octad");
    if (!in_octad(coord_aux) || !in_octad(momentum_aux) ||
        coord_aux == momentum_aux)
      throw config_error("auxiliary indices must be distinct octad indices");
    for (int mu : mu_indices)
      if (mu == coord_aux || mu == momentum_aux)
        throw config_error("Lorentz and auxiliary indices overlap");
    if (mu_slot(time_index) < 0)
      throw config_error("time index must be one of the Lorentz indices");
  }

  // Position of Lorentz index mu in mu_indices, or -1.
  int mu_slot(int mu) const {
    for (int s = 0; s < 4; ++s)
      if (mu_indices[static_cast<std::size_t>(s)] == mu)
        return s;
    return -1;
  }
};

// Generator index of gamma_a(octad), a = 1..8, octad = 1..N.
inline std::size_t generator_index(int a, int octad) {
  return static_cast<std::size_t>(kOctadSize * (octad - 1) + (a - 1));
}

struct ToyOperators {
  OctadConfig cfg;
  RepResult rep;
  // Indexed by slot 0..3 of cfg.mu_indices.
  std::array<PauliSum, 4> x;
  std::array<PauliSum, 4> p;
  std::array<PauliSum, 4> dx;
  PauliSum eta;
  PauliSum mass;

  std::size_t dim() const { return rep.spinor_dim; }

  PauliString gamma(int a, int octad) const {
    return rep.generators.at(generator_index(a, octad));
  }
  PauliString gamma2(int a, int b, int octad) const {
    return gamma(a, octad) * gamma(b, octad);
  }

  const PauliSum &x_of(int mu) const { return x.at(slot(mu)); }
  const PauliSum &p_of(int mu) const { return p.at(slot(mu)); }

private:
  std::size_t slot(int mu) const {
    const int s = cfg.mu_slot(mu);
    if (s < 0)
      throw config_error("index " + std::to_string(mu) + " is not a Lorentz index");
    return static_cast<std::size_t>(s);
  }
};

inline ToyOperators build_toy_model(const OctadConfig &cfg) {
  cfg.validate();
  ToyOperators ops;
  ops.cfg = cfg;
  ops.rep = jordan_wigner_rep(cfg.full_signature());
  const std::size_t dim = ops.rep.spinor_dim;
  const int N = cfg.n;
  const cplx minus_i{0.0, -1.0};
  const int c5 = cfg.coord_aux;
  const int c6 = cfg.momentum_aux;

  for (std::size_t s = 0; s < 4; ++s) {
    const int mu = cfg.mu_indices[s];
    ops.x[s] = PauliSum(dim);
    ops.p[s] = PauliSum(dim);
    for (int n = 1; n <= N; ++n) {
      ops.x[s].add(ops.gamma2(mu, c5, n), minus_i * cfg.tau);
      ops.p[s].add(ops.gamma2(mu, c6, n), minus_i * cfg.ergon());
    }
    ops.dx[s] = PauliSum::from(ops.gamma2(mu, c5, 1), dim, minus_i * cfg.tau);
  }

  ops.eta = PauliSum(dim);
  for (int n = 1; n <= N; ++n)
    ops.eta.add(ops.gamma2(c5, c6, n), cplx(1.0 / N, 0.0));

  // M_f = sum_mu g^{mu5} d_mu with d_mu <- i p_mu / hbar.
  ops.mass = PauliSum(dim);
  for (std::size_t s = 0; s < 4; ++s) {
    const int mu = cfg.mu_indices[s];
    PauliSum g5(dim);
    if (cfg.mass == MassVariant::FirstOctad) {
      g5.add(ops.gamma2(mu, c5, 1), 1.0);
    } else {
      for (int n = 1; n <= N; ++n)
        g5.add(ops.gamma2(mu, c5, n), cplx(1.0 / N, 0.0));
    }
    ops.mass += g5 * (cplx(0.0, 1.0 / cfg.hbar) * ops.p[s]);
  }
  return ops;
}

inline SpectrumReport time_spectrum(const ToyOperators &ops) {
  return spectrum(ops.x_of(ops.cfg.time_index));
}

inline SpectrumReport time_spectrum(const OctadConfig &cfg) {
  return time_spectrum(build_toy_model(cfg));
}

struct EtaSpectrum {
  SpectrumReport spectrum;
  // Distinct eigenvalue moduli, ascending.
  std::vector<double> moduli;
  double max_modulus = 0.0;
};

inline EtaSpectrum eta_spectrum(const ToyOperators &ops) {
  EtaSpectrum out;
  out.spectrum = spectrum(ops.eta);
  std::vector<double> mods;
  for (const auto &c : out.spectrum.clusters) {
    const double r = std::abs(c.value);
    out.max_modulus = std::max(out.max_modulus, r);
    bool seen = false;
    for (double m : mods)
      seen = seen || std::abs(m - r) <= 1e-9;
    if (!seen)
      mods.push_back(r);
  }
  std::sort(mods.begin(), mods.end());
  out.moduli = mods;
  return out;
}

inline EtaSpectrum eta_spectrum(const OctadConfig &cfg) {
  return eta_spectrum(build_toy_model(cfg));
}

// Eigenvalue multiset of a sum of N mutually commuting, independent terms with
// eigenvalues {+lambda, -lambda} (each with multiplicity dim/2), scaled by
// `scale`. Used for octad counts beyond the eigensolver bound.
inline std::vector<EigenCluster>
commuting_sum_spectrum(int n, cplx lambda, cplx scale, std::size_t dim) {
  std::vector<EigenCluster> out;
  const std::size_t per = dim >> n;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    out.push_back({scale * lambda * static_cast<double>(n - 2 * k),
                   static_cast<std::size_t>(binom) * per});
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

// Eigenvalues of gamma^{ab} are +-sqrt(-s_a s_b).
inline cplx bivector_root(const Signature &octad, int a, int b) {
  return octad.square(static_cast<std::size_t>(a - 1)) *
                     octad.square(static_cast<std::size_t>(b - 1)) >
                 0
             ? cplx{0, 1}
             : cplx{1, 0};
}

// Closed-form time spectrum for 1 <= N <= 6 (no matrices built).
inline std::vector<EigenCluster> combinatorial_time_spectrum(const OctadConfig &cfg) {
  cfg.validate(kMaxCombinatorialOctads);
  return commuting_sum_spectrum(
      cfg.n, bivector_root(cfg.octad_squares, cfg.time_index, cfg.coord_aux),
      cplx{0, -cfg.tau}, cfg.matrix_dim());
}

inline std::vector<EigenCluster> combinatorial_eta_spectrum(const OctadConfig &cfg) {
  cfg.validate(kMaxCombinatorialOctads);
  return commuting_sum_spectrum(
      cfg.n, bivector_root(cfg.octad_squares, cfg.coord_aux, cfg.momentum_aux),
      cplx{1.0 / cfg.n, 0}, cfg.matrix_dim());
}

struct CommutatorReport {
  PauliSum commutator;
  // Least-squares c in [x, p] ~ c hbar eta.
  cplx c{0, 0};
  double residual = 0.0;
  double norm = 0.0;
};

// [x^mu, p^nu] against hbar * eta. Norms are normalized Hilbert-Schmidt norms
// sqrt(tr(A^dagger A)/dim).
inline CommutatorReport commutator_xp(const ToyOperators &ops, int mu, int nu) {
  CommutatorReport rep;
  rep.commutator = commutator(ops.x_of(mu), ops.p_of(nu));
  rep.norm = rep.commutator.hs_norm();
  const PauliSum target = cplx(ops.cfg.hbar, 0.0) * ops.eta;
  const cplx denom = hs_inner(target, target);
  if (std::abs(denom) > 0.0)
    rep.c = hs_inner(target, rep.commutator) / denom;
  rep.residual = (rep.commutator - rep.c * target).hs_norm();
  return rep;
}

inline OperatorMatrix evolution_operator(const ToyOperators &ops, double dtau) {
  if (!std::isfinite(dtau))
    throw domain_error("evolution step must be finite");
  const OperatorMatrix m = ops.mass.dense();
  return (cplx(0.0, -dtau) * m).exp();
}

// X -> U X U^{-1} with U = exp(-i M_f dtau), the exact solution of
// dX/dtau = -i [M_f, X].
inline OperatorMatrix mass_evolution(const ToyOperators &ops,
                                     const OperatorMatrix &x, double dtau) {
  const auto dim = static_cast<Eigen::Index>(ops.dim());
  if (x.rows() != dim || x.cols() != dim)
    throw config_error("operator dimension " + std::to_string(x.rows()) +
                       " does not match model dimension " + std::to_string(dim));
  if (!x.allFinite())
    throw domain_error("operator has non-finite entries");
  if (dtau == 0.0)
    return x;
  const OperatorMatrix m = ops.mass.dense();
  const OperatorMatrix u = (cplx(0.0, -dtau) * m).exp();
  const OperatorMatrix u_inv = (cplx(0.0, dtau) * m).exp();
  return u * x * u_inv;
}

struct DerivativeCheck {
  double relative_error = 0.0;
  double delta = 0.0;
};

// Central difference (evolve(X, d) - evolve(X, -d)) / 2d against -i[M_f, X];
// relative error in the max-abs-entry norm.
inline DerivativeCheck evolution_derivative_check(const ToyOperators &ops,
                                                  const OperatorMatrix &x,
                                                  double delta) {
  const OperatorMatrix m = ops.mass.dense();
  const OperatorMatrix exact = cplx(0.0, -1.0) * (m * x - x * m);
  const OperatorMatrix fd =
      (mass_evolution(ops, x, delta) - mass_evolution(ops, x, -delta)) /
      (2.0 * delta);
  const double scale = exact.cwiseAbs().maxCoeff();
  DerivativeCheck out;
  out.delta = delta;
  out.relative_error = (fd - exact).cwiseAbs().maxCoeff() / std::max(scale, 1e-300);
  return out;
}

struct FactorizationCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

inline Eigen::SparseMatrix<cplx> sparse_identity(std::size_t n) {
  Eigen::SparseMatrix<cplx> id(static_cast<Eigen::Index>(n),
                               static_cast<Eigen::Index>(n));
  id.setIdentity();
  return id;
}

// Jordan-Wigner parity chain of one octad: Z x Z x Z x Z.
inline Eigen::SparseMatrix<cplx> octad_chain_factor() {
  Eigen::SparseMatrix<cplx> z(2, 2);
  z.insert(0, 0) = 1.0;
  z.insert(1, 1) = -1.0;
  Eigen::SparseMatrix<cplx> out = z;
  for (int q = 1; q < 4; ++q)
    out = Eigen::SparseMatrix<cplx>(Eigen::kroneckerProduct(out, z));
  return out;
}

// Compares the generators of the 8N-generator algebra with the explicit
// tensor product chain^(n-1) x gamma_a x 1^(N-n) built from a single octad.
inline FactorizationCheck
octad_factorization_check(const OctadConfig &cfg,
                          const Eigen::SparseMatrix<cplx> &chain) {
  cfg.validate();
  const RepResult full = jordan_wigner_rep(cfg.full_signature());
  const RepResult octad = jordan_wigner_rep(cfg.octad_squares);
  const std::size_t od = octad.spinor_dim;
  FactorizationCheck out;
  for (int n = 1; n <= cfg.n; ++n) {
    for (int a = 1; a <= kOctadSize; ++a) {
      Eigen::SparseMatrix<cplx> m = sparse_identity(1);
      for (int k = 1; k < n; ++k)
        m = Eigen::SparseMatrix<cplx>(Eigen::kroneckerProduct(m, chain));
      const Eigen::SparseMatrix<cplx> g =
          PauliSum::from(octad.generators[static_cast<std::size_t>(a - 1)], od)
              .sparse();
      m = Eigen::SparseMatrix<cplx>(Eigen::kroneckerProduct(m, g));
      const std::size_t rest = std::size_t{1} << (4 * (cfg.n - n));
      m = Eigen::SparseMatrix<cplx>(
          Eigen::kroneckerProduct(m, sparse_identity(rest)));
      const Eigen::SparseMatrix<cplx> direct =
          PauliSum::from(full.generators[generator_index(a, n)], full.spinor_dim)
              .sparse();
      Eigen::SparseMatrix<cplx> diff = m - direct;
      double dev = 0.0;
      for (Eigen::Index col = 0; col < diff.outerSize(); ++col)
        for (Eigen::SparseMatrix<cplx>::InnerIterator it(diff, col); it; ++it)
          dev = std::max(dev, std::abs(it.value()));
      out.max_deviation = std::max(out.max_deviation, dev);
    }
  }
  out.ok = out.max_deviation <= 1e-12;
  return out;
}

inline FactorizationCheck octad_factorization_check(const OctadConfig &cfg) {
  return octad_factorization_check(cfg, octad_chain_factor());
}

} // namespace cliff::dirac
