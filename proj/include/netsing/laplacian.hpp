#ifndef NETSING_LAPLACIAN_HPP
#define NETSING_LAPLACIAN_HPP

#include <Eigen/Dense>

#include "netsing/errors.hpp"
#include "netsing/graph.hpp"
#include "netsing/types.hpp"

namespace netsing {

/// Dense symmetric Laplacian of a signed graph together with the relative
/// rank tolerance used by all spectral decisions made about it.
struct LaplacianMatrix {
  Matrix entries;
  Real rank_tolerance = kDefaultRankTol;

  Index size() const { return entries.rows(); }
};

enum class Definiteness {
  PositiveSemidefCorank1,
  SingularCorank2,
  IndefiniteCorank1,
};

/// Certificate that placing a negative conductance of the critical gain on
/// one edge of a positive network makes the Laplacian singular.
struct SingularGainCertificate {
  Index i = 0;
  Index j = 0;
  Real critical_gain = 0.0;      // 1 / effective_resistance
  Real effective_resistance = 0.0;
  Vector kernel_vector;          // mean-zero, unit norm, first nonzero > 0
};

// ---------------------------------------------------------------------------
// Scalar-generic matrix kernels. These accept any dense Eigen expression and
// are the building blocks behind the double-typed operations below.
// ---------------------------------------------------------------------------

/// Moore-Penrose pseudoinverse of a symmetric matrix via spectral
/// decomposition. Eigenvalues with |l| <= tol * max(1, |l|_max) are treated
/// as zero.
template <typename Derived>
MatrixX<typename Derived::Scalar> symmetric_pseudoinverse(
    const Eigen::MatrixBase<Derived>& m,
    typename Derived::Scalar tol = kDefaultRankTol) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(m.derived());
  const VectorX<Scalar>& ev = es.eigenvalues();
  const Scalar cutoff = tol * std::max(Scalar(1), ev.cwiseAbs().maxCoeff());
  VectorX<Scalar> inv = VectorX<Scalar>::Zero(ev.size());
  for (Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i]) > cutoff) inv[i] = Scalar(1) / ev[i];
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

/// Dimension of the numerical kernel of a symmetric matrix.
template <typename Derived>
Index symmetric_corank(const Eigen::MatrixBase<Derived>& m,
                       typename Derived::Scalar tol = kDefaultRankTol) {
  using Scalar = typename Derived::Scalar;
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(m.derived(),
                                                    Eigen::EigenvaluesOnly);
  const VectorX<Scalar>& ev = es.eigenvalues();
  const Scalar cutoff = tol * std::max(Scalar(1), ev.cwiseAbs().maxCoeff());
  Index count = 0;
  for (Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i]) <= cutoff) ++count;
  return count;
}

/// Schur complement M_BB - M_BC M_CC^{-1} M_CB for an index partition.
/// Throws SingularInternalBlock when M_CC is numerically rank-deficient.
template <typename Derived>
MatrixX<typename Derived::Scalar> schur_complement(
    const Eigen::MatrixBase<Derived>& m, const NodePartition& partition,
    typename Derived::Scalar tol = kDefaultRankTol) {
  using Scalar = typename Derived::Scalar;
  const Index nb = partition.n_boundary();
  const Index nc = partition.n_central();
  MatrixX<Scalar> bb(nb, nb), bc(nb, nc), cb(nc, nb), cc(nc, nc);
  const auto& b = partition.boundary();
  const auto& c = partition.central();
  for (Index p = 0; p < nb; ++p)
    for (Index q = 0; q < nb; ++q) bb(p, q) = m.derived()(b[p], b[q]);
  for (Index p = 0; p < nb; ++p)
    for (Index q = 0; q < nc; ++q) bc(p, q) = m.derived()(b[p], c[q]);
  for (Index p = 0; p < nc; ++p)
    for (Index q = 0; q < nb; ++q) cb(p, q) = m.derived()(c[p], b[q]);
  for (Index p = 0; p < nc; ++p)
    for (Index q = 0; q < nc; ++q) cc(p, q) = m.derived()(c[p], c[q]);
  if (nc == 0) return bb;

  Eigen::FullPivLU<MatrixX<Scalar>> lu(cc);
  lu.setThreshold(tol);
  if (lu.rank() < nc)
    throw SingularInternalBlock("internal block is numerically singular");
  MatrixX<Scalar> reduced = bb - bc * lu.solve(cb);
  return ((reduced + reduced.transpose()) / Scalar(2)).eval();
}

// ---------------------------------------------------------------------------
// Laplacian-level operations.
// ---------------------------------------------------------------------------

/// L = D W D^T assembled directly from the edge list.
LaplacianMatrix assemble_laplacian(const SignedGraph& graph,
                                   Real rank_tol = kDefaultRankTol);

/// Moore-Penrose pseudoinverse with the Laplacian's own rank tolerance.
Matrix pseudoinverse(const LaplacianMatrix& laplacian);

/// Number of numerically zero eigenvalues.
Index corank(const LaplacianMatrix& laplacian, Real tol);
Index corank(const LaplacianMatrix& laplacian);

/// Kron reduction: Schur complement onto the boundary block. Result rows sum
/// to zero and the matrix is symmetric.
LaplacianMatrix kron_reduce(const LaplacianMatrix& laplacian,
                            const NodePartition& partition);

/// Effective resistance r_ij = e_ij^T L^+ e_ij. Requires corank(L) == 1 so
/// the potential drop is well-defined.
Real effective_resistance(const LaplacianMatrix& laplacian, Index i, Index j);

/// Critical gain certificate for one negative edge added between i and j of
/// a connected all-positive graph: the gain k = 1/r_ij at which
/// L_+ - k e_ij e_ij^T acquires a second kernel direction.
SingularGainCertificate singular_gain(const SignedGraph& graph_plus, Index i,
                                      Index j, Real rank_tol = kDefaultRankTol);

/// Definiteness class of L_+ - k e_ij e_ij^T for a gain k > 0.
Definiteness classify_definiteness(const SignedGraph& graph_plus, Index i,
                                   Index j, Real k,
                                   Real rank_tol = kDefaultRankTol);

const char* to_string(Definiteness d);

}  // namespace netsing

#endif
