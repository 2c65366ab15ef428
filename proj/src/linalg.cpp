#include "blocksep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "blocksep/errors.hpp"

namespace blocksep {

namespace {

void require_finite(const std::vector<cplx>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag())) {
      throw Error("non-finite matrix entry at flat index " + std::to_string(i));
    }
  }
}

std::string shape_str(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw InvalidDimensionError("matrix dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw InvalidDimensionError("matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw DimensionMismatchError("entry count " + std::to_string(entries_.size()) +
                                 " does not match shape " + shape_str(*this));
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  if (r == 0) throw InvalidDimensionError("matrix dimensions must be positive");
  const std::size_t c = rows.begin()->size();
  std::vector<cplx> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatchError("ragged row in matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw NonSquareError("trace: matrix is " + shape_str(*this));
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<cplx> ComplexMatrix::col(std::size_t j) const {
  std::vector<cplx> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatchError("add: shapes " + shape_str(*this) + " vs " + shape_str(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatchError("subtract: shapes " + shape_str(*this) + " vs " + shape_str(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : entries_) z *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionMismatchError("multiply: shapes " + shape_str(*this) + " vs " + shape_str(other));
  }
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += aik * other(k, j);
    }
  }
  return out;
}

HermitianEigResult hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw NonSquareError("hermitian_eig: matrix is " + shape_str(m));
  const std::size_t n = m.rows();

  const double input_norm = m.frobenius_norm();
  const double herm_defect = (m - m.adjoint()).frobenius_norm();
  if (herm_defect > kHermitianEigInputTol * std::max(1.0, input_norm)) {
    throw NotHermitianError("hermitian_eig: Hermiticity defect " + std::to_string(herm_defect) +
                            " exceeds tolerance for norm " + std::to_string(input_norm));
  }

  ComplexMatrix a = cplx(0.5) * (m + m.adjoint());
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kJacobiConvergenceTol * a.frobenius_norm();
  const auto offdiag_mass = [&a, n]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; ; ++sweep) {
    if (offdiag_mass() <= threshold) {
      converged = true;
      break;
    }
    if (sweep >= kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx beta = a(p, q);
        const double absb = std::abs(beta);
        if (absb == 0.0) continue;
        // Rotation angle zeroing a(p,q): t solves t^2 + 2*tau*t - 1 = 0 with
        // the smaller-magnitude root for stability.
        const cplx phase = beta / absb;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * absb);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          const cplx arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(phase) * arq;
          a(r, q) = s * phase * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const cplx apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * phase * aqr;
          a(q, r) = s * std::conj(phase) * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(phase) * vrq;
          v(r, q) = s * phase * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergenceError("hermitian_eig: off-diagonal mass above threshold after " +
                             std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

bool is_normal(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw NonSquareError("is_normal: matrix is " + shape_str(m));
  const ComplexMatrix mh = m.adjoint();
  const double defect = (m * mh - mh * m).frobenius_norm();
  const double nf = m.frobenius_norm();
  return defect <= tol * std::max(1.0, nf * nf);
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatchError("commutator_norm: shapes " + shape_str(a) + " vs " + shape_str(b));
  }
  return (a * b - b * a).frobenius_norm();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          out(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
    }
  return out;
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatchError("hadamard: shapes " + shape_str(a) + " vs " + shape_str(b));
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

cplx vec_dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vec_dot: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& v) {
  if (m.cols() != v.size()) throw DimensionMismatchError("matvec: length mismatch");
  std::vector<cplx> out(m.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  ComplexMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < b.size(); ++r) out[i * b.size() + r] = a[i] * b[r];
  return out;
}

}  // namespace blocksep
