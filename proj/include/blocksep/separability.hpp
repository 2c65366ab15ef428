#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "blocksep/block_matrix.hpp"
#include "blocksep/simdiag.hpp"

namespace blocksep {

// A coefficient matrix is accepted as PSD when its smallest eigenvalue stays
// above -tol * max(1, ||M||_F).
inline constexpr double kDefaultPsdTol = 1e-9;
// Decomposition weights at or below kDropWeightTol * max(1, ||M||_F) are
// clamped to zero and omitted.
inline constexpr double kDropWeightTol = 1e-12;
// Hermiticity gate applied to the dense matrix and to each coefficient matrix.
inline constexpr double kHermiticityTol = 1e-9;

struct Tolerances {
  double normal = kDefaultNormalTol;
  double commute = kDefaultCommuteTol;
  double psd = kDefaultPsdTol;
};

// One n x n eigenvalue table attached to basis column k, with a cached
// eigendecomposition once a PSD check has run.
struct CoefficientMatrix {
  std::size_t k = 0;
  ComplexMatrix m;
  std::optional<HermitianEigResult> eig;
};

struct SeparableTerm {
  double weight = 0.0;
  std::vector<cplx> left;   // unit vector in C^n
  std::vector<cplx> right;  // unit vector in C^d
  std::size_t k = 0;        // basis column the term belongs to (not serialized)
};

// Rank-one expansion: sum of weight * kron(left left^dagger, right right^dagger).
// At most n*d terms; terms are ordered by (k, descending weight).
struct SeparableDecomposition {
  std::vector<SeparableTerm> terms;
};

struct Witness {
  std::vector<cplx> vector;  // X in C^(nd) with X^dagger T X = value < 0
  double value = 0.0;
  std::size_t k = 0;
};

struct Separable {
  SeparableDecomposition decomposition;
};
// A non-Hermitian input cannot be PSD; in that case the witness is absent and
// the Hermiticity defect carries the evidence instead.
struct NotPsd {
  std::optional<Witness> witness;
  double hermiticity_defect = 0.0;
};
struct HypothesesFail {
  FamilyReport report;
};
using Verdict = std::variant<Separable, NotPsd, HypothesesFail>;

std::vector<CoefficientMatrix> coefficient_matrices(const JointEigenStructure& j);

struct PsdCheckResult {
  bool all_psd = true;
  std::vector<double> min_eigenvalues;  // per coefficient matrix
};

// Eigensolves each coefficient matrix (symmetrized) and caches the result on
// the record. Throws NotHermitianError when a matrix fails the Hermiticity
// gate, which signals that the assembled block matrix was not Hermitian.
PsdCheckResult check_psd_all(std::vector<CoefficientMatrix>& ms, double tol = kDefaultPsdTol);

// Full pipeline: hypothesis validation, joint diagonalization, per-column PSD
// checks, then either the explicit separable decomposition or a negativity
// witness.
Verdict decompose(const BlockMatrix& t, const Tolerances& tol = {});

// Negativity witness kron(v, u_k) from the most negative eigenpair (value, v)
// of coefficient matrix k. Throws NotNegativeError when that matrix is PSD at
// the given tolerance.
Witness witness(std::vector<CoefficientMatrix>& ms, const JointEigenStructure& j, std::size_t k,
                double tol = kDefaultPsdTol);

struct NecessaryConditionResult {
  bool passes = true;
  std::vector<std::array<std::size_t, 3>> violations;  // (k, i, j); diagonal entries use i == j
  // Informational only: whether |M(i,j)| <= M(i,i) held everywhere. That
  // stronger inequality is violated by genuine PSD matrices, so it never
  // contributes to `passes`.
  bool literal_diagonal_dominance = true;
};

// Fast PSD pre-filter on the eigenvalue tables: nonnegative diagonals and
// |M(i,j)|^2 <= M(i,i) * M(j,j), each with slack 1e-9 * max(1, ||M||_F)^2.
// Failure implies the block matrix is not PSD; passing decides nothing.
NecessaryConditionResult necessary_condition(const std::vector<CoefficientMatrix>& ms);

}  // namespace blocksep
