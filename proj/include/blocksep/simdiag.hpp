#pragma once

#include <vector>

#include "blocksep/block_matrix.hpp"
#include "blocksep/linalg.hpp"

namespace blocksep {

// Eigenvalue clusters are split where consecutive (ascending) eigenvalues of a
// generator differ by more than kClusterGapTol * max(1, ||generator||_F).
inline constexpr double kClusterGapTol = 1e-8;
// Worst tolerated off-diagonal leakage of basis^dagger * B_ij * basis, relative
// to max(1, max_ij ||B_ij||_F).
inline constexpr double kJointResidualTol = 1e-8;

// Common orthonormal eigenbasis of a commuting normal block family together
// with the per-column eigenvalue tables.
struct JointEigenStructure {
  ComplexMatrix basis;              // d x d unitary; column k is the common eigenvector u_k
  std::vector<ComplexMatrix> beta;  // d tables, each n x n; beta[k](i,j) = eigenvalue of block (i,j) on u_k
  double residual = 0.0;            // worst off-diagonal Frobenius mass over all conjugated blocks
};

// Recursive eigenspace refinement: the Hermitian and anti-Hermitian parts of
// each block are processed in a fixed order (blocks row-major, Hermitian part
// first) and every current subspace is split along the eigenvalue clusters of
// the compressed generator. Eigenvalue tables are Rayleigh quotients
// u_k^dagger B_ij u_k, so the residual measurement is independent of the
// refinement path. The column order and phases of the basis are a gauge;
// callers must not rely on them.
JointEigenStructure simultaneous_diagonalize(const BlockMatrix& t);

struct Eq1Term {
  ComplexMatrix coefficient;       // n x n table attached to one basis column
  std::vector<cplx> basis_vector;  // the matching unit column u_k
};

// Splits T into d pairs (coefficient table, basis column); summing
// kron(coefficient, u u^dagger) over the pairs reconstructs the dense matrix.
std::vector<Eq1Term> decompose_eq1(const BlockMatrix& t, const JointEigenStructure& j);

}  // namespace blocksep
