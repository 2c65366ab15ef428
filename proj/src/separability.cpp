#include "blocksep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "blocksep/errors.hpp"

namespace blocksep {

namespace {

const HermitianEigResult& ensure_eig(CoefficientMatrix& cm) {
  if (!cm.eig) {
    cm.eig = hermitian_eig(cplx(0.5) * (cm.m + cm.m.adjoint()));
  }
  return *cm.eig;
}

}  // namespace

std::vector<CoefficientMatrix> coefficient_matrices(const JointEigenStructure& j) {
  std::vector<CoefficientMatrix> out;
  out.reserve(j.beta.size());
  for (std::size_t k = 0; k < j.beta.size(); ++k) out.push_back({k, j.beta[k], std::nullopt});
  return out;
}

PsdCheckResult check_psd_all(std::vector<CoefficientMatrix>& ms, double tol) {
  if (tol <= 0.0) throw Error("check_psd_all: tolerance must be positive");
  PsdCheckResult res;
  res.min_eigenvalues.reserve(ms.size());
  for (CoefficientMatrix& cm : ms) {
    const double norm = cm.m.frobenius_norm();
    const double defect = (cm.m - cm.m.adjoint()).frobenius_norm();
    if (defect > kHermiticityTol * std::max(1.0, norm)) {
      throw NotHermitianError("check_psd_all: coefficient matrix " + std::to_string(cm.k) +
                              " has Hermiticity defect " + std::to_string(defect) +
                              "; the block matrix itself was not Hermitian");
    }
    const double lam_min = ensure_eig(cm).eigenvalues.front();
    res.min_eigenvalues.push_back(lam_min);
    if (lam_min < -tol * std::max(1.0, norm)) res.all_psd = false;
  }
  return res;
}

Witness witness(std::vector<CoefficientMatrix>& ms, const JointEigenStructure& j, std::size_t k,
                double tol) {
  if (k >= ms.size() || j.basis.cols() != ms.size()) {
    throw InconsistentInputError("witness: index or joint structure out of range");
  }
  CoefficientMatrix& cm = ms[k];
  const HermitianEigResult& eig = ensure_eig(cm);
  const double lam_min = eig.eigenvalues.front();
  if (lam_min >= -tol * std::max(1.0, cm.m.frobenius_norm())) {
    throw NotNegativeError("witness: coefficient matrix " + std::to_string(k) +
                           " is PSD at tolerance (min eigenvalue " + std::to_string(lam_min) + ")");
  }
  return {kron_vec(eig.eigenvectors.col(0), j.basis.col(k)), lam_min, k};
}

Verdict decompose(const BlockMatrix& t, const Tolerances& tol) {
  const FamilyReport rep = validate_family(t, tol.normal, tol.commute);
  if (!rep.is_normal_family || !rep.is_commuting_family) {
    return HypothesesFail{rep};
  }

  const ComplexMatrix dense = t.to_dense();
  const double herm_defect = (dense - dense.adjoint()).frobenius_norm();
  if (herm_defect > kHermiticityTol * std::max(1.0, dense.frobenius_norm())) {
    return NotPsd{std::nullopt, herm_defect};
  }

  const JointEigenStructure j = simultaneous_diagonalize(t);
  std::vector<CoefficientMatrix> ms = coefficient_matrices(j);
  const PsdCheckResult psd = check_psd_all(ms, tol.psd);

  if (!psd.all_psd) {
    std::size_t worst_k = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const double lam = psd.min_eigenvalues[k];
      if (lam < -tol.psd * std::max(1.0, ms[k].m.frobenius_norm()) && lam < worst) {
        worst = lam;
        worst_k = k;
      }
    }
    return NotPsd{witness(ms, j, worst_k, tol.psd), herm_defect};
  }

  SeparableDecomposition dec;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const HermitianEigResult& eig = *ms[k].eig;
    const double drop = kDropWeightTol * std::max(1.0, ms[k].m.frobenius_norm());
    // Eigenvalues are ascending, so walking backwards emits weights in
    // descending order and stops at the first one small enough to drop.
    for (std::size_t idx = eig.eigenvalues.size(); idx-- > 0;) {
      const double w = eig.eigenvalues[idx];
      if (w <= drop) break;
      dec.terms.push_back({w, eig.eigenvectors.col(idx), j.basis.col(k), k});
    }
  }
  return Separable{std::move(dec)};
}

NecessaryConditionResult necessary_condition(const std::vector<CoefficientMatrix>& ms) {
  NecessaryConditionResult res;
  for (const CoefficientMatrix& cm : ms) {
    const ComplexMatrix sym = cplx(0.5) * (cm.m + cm.m.adjoint());
    const std::size_t n = sym.rows();
    const double anchor = std::max(1.0, sym.frobenius_norm());
    const double slack = 1e-9 * anchor * anchor;
    for (std::size_t i = 0; i < n; ++i) {
      if (sym(i, i).real() < -slack) {
        res.passes = false;
        res.violations.push_back({cm.k, i, i});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double lhs = std::norm(sym(i, j));
        if (lhs > sym(i, i).real() * sym(j, j).real() + slack) {
          res.passes = false;
          res.violations.push_back({cm.k, i, j});
        }
      }
    }
    for (std::size_t i = 0; i < n && res.literal_diagonal_dominance; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (std::abs(sym(i, j)) > sym(i, i).real() + 1e-12 * anchor) {
          res.literal_diagonal_dominance = false;
          break;
        }
      }
    }
  }
  return res;
}

}  // namespace blocksep
