#include "blocksep/block_matrix.hpp"

#include <algorithm>
#include <string>

#include "blocksep/errors.hpp"

namespace blocksep {

namespace {
constexpr std::size_t kMaxReportedOffenders = 10;
}

BlockMatrix::BlockMatrix(std::size_t n, std::size_t d) : n_(n), d_(d) {
  if (n == 0 || d == 0) {
    throw InvalidDimensionError("block grid size and block dimension must be positive");
  }
  blocks_.assign(n * n, ComplexMatrix(d, d));
}

BlockMatrix BlockMatrix::from_dense(const ComplexMatrix& dense, std::size_t n, std::size_t d) {
  BlockMatrix out(n, d);
  if (dense.rows() != n * d || dense.cols() != n * d) {
    throw DimensionMismatchError("from_dense: expected " + std::to_string(n * d) + "x" +
                                 std::to_string(n * d) + " matrix, got " +
                                 std::to_string(dense.rows()) + "x" + std::to_string(dense.cols()));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexMatrix& b = out.block(i, j);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) b(r, s) = dense(i * d + r, j * d + s);
    }
  return out;
}

ComplexMatrix BlockMatrix::to_dense() const {
  ComplexMatrix dense(n_ * d_, n_ * d_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const ComplexMatrix& b = block(i, j);
      for (std::size_t r = 0; r < d_; ++r)
        for (std::size_t s = 0; s < d_; ++s) dense(i * d_ + r, j * d_ + s) = b(r, s);
    }
  return dense;
}

FamilyReport validate_family(const BlockMatrix& t, double tol_normal, double tol_commute) {
  if (tol_normal <= 0.0 || tol_commute <= 0.0) {
    throw Error("validate_family: tolerances must be positive");
  }
  const std::size_t n = t.n();
  FamilyReport rep;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix& b = t.block(i, j);
      const ComplexMatrix bh = b.adjoint();
      const double defect = (b * bh - bh * b).frobenius_norm();
      rep.max_normality_defect = std::max(rep.max_normality_defect, defect);
      const double nf = b.frobenius_norm();
      if (defect > tol_normal * std::max(1.0, nf * nf)) {
        rep.is_normal_family = false;
        if (rep.non_normal_blocks.size() < kMaxReportedOffenders) {
          rep.non_normal_blocks.push_back({i, j});
        }
      }
    }
  }

  const std::size_t total = n * n;
  for (std::size_t a = 0; a < total; ++a) {
    const BlockIndex ia{a / n, a % n};
    const ComplexMatrix& ba = t.block(ia.i, ia.j);
    const double na = std::max(1.0, ba.frobenius_norm());
    for (std::size_t b = a + 1; b < total; ++b) {
      const BlockIndex ib{b / n, b % n};
      const ComplexMatrix& bb = t.block(ib.i, ib.j);
      const double comm = commutator_norm(ba, bb);
      rep.max_commutator_norm = std::max(rep.max_commutator_norm, comm);
      if (comm > tol_commute * na * std::max(1.0, bb.frobenius_norm())) {
        rep.is_commuting_family = false;
        if (rep.noncommuting_pairs.size() < kMaxReportedOffenders) {
          rep.noncommuting_pairs.emplace_back(ia, ib);
        }
      }
    }
  }
  return rep;
}

}  // namespace blocksep
