#include "blocksep/simdiag.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "blocksep/errors.hpp"

namespace blocksep {

namespace {

ComplexMatrix column_range(const ComplexMatrix& m, std::size_t first, std::size_t last) {
  ComplexMatrix out(m.rows(), last - first);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = first; j < last; ++j) out(i, j - first) = m(i, j);
  return out;
}

// Splits every subspace along the eigenvalue clusters of the compressed
// generator. One-dimensional subspaces cannot split further.
void refine(std::vector<ComplexMatrix>& subspaces, const ComplexMatrix& generator) {
  const double gap = kClusterGapTol * std::max(1.0, generator.frobenius_norm());
  std::vector<ComplexMatrix> next;
  next.reserve(subspaces.size());
  for (const ComplexMatrix& q : subspaces) {
    const std::size_t m = q.cols();
    if (m == 1) {
      next.push_back(q);
      continue;
    }
    const ComplexMatrix compressed = q.adjoint() * (generator * q);
    const HermitianEigResult eig = hermitian_eig(compressed);
    const ComplexMatrix rotated = q * eig.eigenvectors;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (i == m || eig.eigenvalues[i] - eig.eigenvalues[i - 1] > gap) {
        next.push_back(column_range(rotated, start, i));
        start = i;
      }
    }
  }
  subspaces = std::move(next);
}

}  // namespace

JointEigenStructure simultaneous_diagonalize(const BlockMatrix& t) {
  const FamilyReport rep = validate_family(t);
  if (!rep.is_normal_family || !rep.is_commuting_family) {
    throw FamilyInvalidError("simultaneous_diagonalize: blocks are not a commuting normal family");
  }

  const std::size_t n = t.n();
  const std::size_t d = t.d();

  std::vector<ComplexMatrix> subspaces;
  subspaces.push_back(ComplexMatrix::identity(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix& b = t.block(i, j);
      const ComplexMatrix bh = b.adjoint();
      refine(subspaces, cplx(0.5) * (b + bh));
      refine(subspaces, cplx(0.0, -0.5) * (b - bh));
    }
  }

  JointEigenStructure out;
  out.basis = ComplexMatrix(d, d);
  std::size_t col = 0;
  for (const ComplexMatrix& q : subspaces) {
    for (std::size_t j = 0; j < q.cols(); ++j, ++col) {
      for (std::size_t i = 0; i < d; ++i) out.basis(i, col) = q(i, j);
    }
  }

  out.beta.assign(d, ComplexMatrix(n, n));
  const ComplexMatrix basis_adj = out.basis.adjoint();
  double max_block_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix& b = t.block(i, j);
      max_block_norm = std::max(max_block_norm, b.frobenius_norm());
      const ComplexMatrix conj = basis_adj * (b * out.basis);
      double off = 0.0;
      for (std::size_t r = 0; r < d; ++r) {
        out.beta[r](i, j) = conj(r, r);
        for (std::size_t s = 0; s < d; ++s)
          if (r != s) off += std::norm(conj(r, s));
      }
      out.residual = std::max(out.residual, std::sqrt(off));
    }
  }

  if (out.residual > kJointResidualTol * std::max(1.0, max_block_norm)) {
    throw ResidualTooLargeError("simultaneous_diagonalize: joint diagonalization leakage " +
                                std::to_string(out.residual) +
                                " exceeds tolerance; family is borderline non-commuting");
  }
  return out;
}

std::vector<Eq1Term> decompose_eq1(const BlockMatrix& t, const JointEigenStructure& j) {
  const std::size_t n = t.n();
  const std::size_t d = t.d();
  if (j.basis.rows() != d || j.basis.cols() != d || j.beta.size() != d) {
    throw InconsistentInputError("decompose_eq1: joint structure does not match block matrix");
  }
  for (const ComplexMatrix& table : j.beta) {
    if (table.rows() != n || table.cols() != n) {
      throw InconsistentInputError("decompose_eq1: eigenvalue table is not " + std::to_string(n) +
                                   "x" + std::to_string(n));
    }
  }
  std::vector<Eq1Term> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) out.push_back({j.beta[k], j.basis.col(k)});
  return out;
}

}  // namespace blocksep
