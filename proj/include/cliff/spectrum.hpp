#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "cliff/errors.hpp"
#include "cliff/matrix_rep.hpp"
#include "cliff/pauli.hpp"

namespace cliff {

inline constexpr double kNormalityTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-8;
inline constexpr double kClusterTolerance = 1e-9;

struct EigenCluster {
  cplx value;
  std::size_t multiplicity = 0;
};

struct SpectrumReport {
  std::size_t dim = 0;
  // All eigenvalues, grouped by cluster in cluster order.
  std::vector<cplx> eigenvalues;
  std::vector<EigenCluster> clusters;
  double max_residual = 0.0;
  double normality_deviation = 0.0;
  std::size_t block_count = 0;
  std::size_t largest_block = 0;
};

namespace detail {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

inline double inf_norm(const OperatorMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

struct BlockEigen {
  std::vector<cplx> values;
  double residual = 0.0;
};

inline double max_residual(const OperatorMatrix &b, const OperatorMatrix &vecs,
                           const std::vector<cplx> &vals) {
  double worst = 0.0;
  const OperatorMatrix bv = b * vecs;
  for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
    const double r =
        (bv.col(j) - vals[static_cast<std::size_t>(j)] * vecs.col(j)).norm();
    worst = std::max(worst, r);
  }
  return worst;
}

inline BlockEigen solve_hermitian(const OperatorMatrix &b) {
  BlockEigen out;
  if (b.imag().cwiseAbs().maxCoeff() == 0.0) {
    const Eigen::MatrixXd re = b.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re);
    if (es.info() != Eigen::Success)
      throw numeric_error("symmetric eigensolver failed to converge");
    for (Eigen::Index j = 0; j < re.rows(); ++j)
      out.values.emplace_back(es.eigenvalues()(j), 0.0);
    out.residual =
        max_residual(b, es.eigenvectors().cast<cplx>(), out.values);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(b);
  if (es.info() != Eigen::Success)
    throw numeric_error("Hermitian eigensolver failed to converge");
  for (Eigen::Index j = 0; j < b.rows(); ++j)
    out.values.emplace_back(es.eigenvalues()(j), 0.0);
  out.residual = max_residual(b, es.eigenvectors(), out.values);
  return out;
}

// For normal B the Hermitian parts H1 = (B + B^)/2 and H2 = (B - B^)/2i
// commute, so eigenvectors of H1 + alpha H2 for a generic alpha are joint
// eigenvectors and the eigenvalues are the Rayleigh quotients.
inline BlockEigen solve_normal(const OperatorMatrix &b) {
  const OperatorMatrix h1 = (b + b.adjoint()) * 0.5;
  const OperatorMatrix h2 = (b - b.adjoint()) * cplx(0.0, -0.5);
  const double scale = std::max(1.0, inf_norm(b));
  BlockEigen best;
  best.residual = std::numeric_limits<double>::infinity();
  for (double alpha : {0.7548776662466927, 1.3247179572447460, 0.5698402909980532}) {
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h1 + alpha * h2);
    if (es.info() != Eigen::Success)
      continue;
    const OperatorMatrix &v = es.eigenvectors();
    BlockEigen cur;
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      cur.values.push_back(v.col(j).dot(b * v.col(j)));
    cur.residual = max_residual(b, v, cur.values);
    if (cur.residual < best.residual)
      best = std::move(cur);
    if (best.residual <= kResidualTolerance * scale)
      break;
  }
  if (best.values.empty())
    throw numeric_error("normal eigensolver failed to converge");
  return best;
}

inline std::vector<EigenCluster> cluster_values(const std::vector<cplx> &vals,
                                                double tol) {
  std::vector<EigenCluster> clusters;
  std::vector<cplx> sums;
  for (const auto &v : vals) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(clusters[c].value - v) <= tol) {
        ++clusters[c].multiplicity;
        sums[c] += v;
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({v, 1});
      sums.push_back(v);
    }
  }
  for (std::size_t c = 0; c < clusters.size(); ++c)
    clusters[c].value = sums[c] / static_cast<double>(clusters[c].multiplicity);
  std::sort(clusters.begin(), clusters.end(),
            [tol](const EigenCluster &a, const EigenCluster &b) {
              if (std::abs(a.value.real() - b.value.real()) > tol)
                return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });
  return clusters;
}

} // namespace detail

// Eigenvalue multiset of a normal matrix. The matrix is first split into the
// connected components of its nonzero pattern; each block is solved densely.
inline SpectrumReport spectrum(const SparseOperator &m) {
  if (m.rows() != m.cols())
    throw config_error("spectrum needs a square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n > kMaxDenseDim)
    throw bound_error("eigensolves limited to dimension " +
                      std::to_string(kMaxDenseDim) + ", got " + std::to_string(n));

  detail::DisjointSets sets(n);
  double scale = 0.0;
  {
    std::vector<double> row_sum(n, 0.0);
    for (Eigen::Index col = 0; col < m.outerSize(); ++col)
      for (SparseOperator::InnerIterator it(m, col); it; ++it) {
        if (it.value() == cplx{0, 0})
          continue;
        sets.unite(static_cast<std::size_t>(it.row()),
                   static_cast<std::size_t>(it.col()));
        row_sum[static_cast<std::size_t>(it.row())] += std::abs(it.value());
      }
    for (double r : row_sum)
      scale = std::max(scale, r);
  }
  scale = std::max(1.0, scale);

  std::vector<std::vector<std::size_t>> blocks;
  {
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t root = sets.find(i);
      if (slot[root] == n) {
        slot[root] = blocks.size();
        blocks.emplace_back();
      }
      blocks[slot[root]].push_back(i);
    }
  }

  std::vector<std::size_t> local(n);
  SpectrumReport rep;
  rep.dim = n;
  rep.block_count = blocks.size();
  std::vector<cplx> all;
  all.reserve(n);
  for (const auto &idx : blocks) {
    const auto s = static_cast<Eigen::Index>(idx.size());
    rep.largest_block = std::max(rep.largest_block, idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      local[idx[i]] = i;
    OperatorMatrix b = OperatorMatrix::Zero(s, s);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto col = static_cast<Eigen::Index>(idx[i]);
      for (SparseOperator::InnerIterator it(m, col); it; ++it)
        b(static_cast<Eigen::Index>(local[static_cast<std::size_t>(it.row())]),
          static_cast<Eigen::Index>(i)) = it.value();
    }
    const double normality =
        detail::inf_norm(b * b.adjoint() - b.adjoint() * b);
    rep.normality_deviation = std::max(rep.normality_deviation, normality);
    if (normality > kNormalityTolerance * scale * scale)
      throw numeric_error("matrix is not normal (deviation " +
                          std::to_string(normality) + ")");
    const bool hermitian =
        detail::inf_norm(b - b.adjoint()) <= 1e-14 * scale;
    auto res = hermitian ? detail::solve_hermitian(b) : detail::solve_normal(b);
    rep.max_residual = std::max(rep.max_residual, res.residual);
    all.insert(all.end(), res.values.begin(), res.values.end());
  }
  if (rep.max_residual > kResidualTolerance * scale)
    throw numeric_error("eigenpair residual " + std::to_string(rep.max_residual) +
                        " exceeds tolerance");

  rep.clusters = detail::cluster_values(all, kClusterTolerance * scale);
  for (const auto &c : rep.clusters) {
    // Keep the individual values, ordered by cluster.
    for (const auto &v : all)
      if (std::abs(v - c.value) <= kClusterTolerance * scale)
        rep.eigenvalues.push_back(v);
  }
  if (rep.eigenvalues.size() != n) {
    // Overlapping clusters; fall back to a plain sort.
    rep.eigenvalues = all;
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
              [](cplx a, cplx b) {
                return a.real() != b.real() ? a.real() < b.real()
                                            : a.imag() < b.imag();
              });
  }
  return rep;
}

inline SpectrumReport spectrum(const OperatorMatrix &m) {
  if (m.rows() != m.cols())
    throw config_error("spectrum needs a square matrix");
  if (static_cast<std::size_t>(m.rows()) > kMaxDenseDim)
    throw bound_error("eigensolves limited to dimension " +
                      std::to_string(kMaxDenseDim));
  return spectrum(SparseOperator(m.sparseView(cplx{0, 0}, 0.0)));
}

inline SpectrumReport spectrum(const PauliSum &p) { return spectrum(p.sparse()); }

} // namespace cliff
