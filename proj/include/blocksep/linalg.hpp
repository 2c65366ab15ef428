#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace blocksep {

using cplx = std::complex<double>;

// Eigensolver input gate: ||M - M^dagger||_F must stay below this times max(1, ||M||_F).
inline constexpr double kHermitianEigInputTol = 1e-10;
// Cyclic Jacobi stops once the off-diagonal Frobenius mass drops below
// kJacobiConvergenceTol * ||M||_F; it gives up after kMaxJacobiSweeps sweeps.
inline constexpr double kJacobiConvergenceTol = 1e-14;
inline constexpr int kMaxJacobiSweeps = 100;

// Dense row-major complex matrix. Constructors that take user-supplied data
// reject non-finite entries; arithmetic assumes finite operands.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;  // empty 0x0 placeholder
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  std::vector<cplx> col(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
  ComplexMatrix operator*(const ComplexMatrix& other) const;

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

struct HermitianEigResult {
  std::vector<double> eigenvalues;  // ascending; ties keep pre-sort column order
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Cyclic complex Jacobi eigensolver. The input is symmetrized to (M + M^dagger)/2
// before iterating; inputs beyond the Hermiticity tolerance are rejected.
HermitianEigResult hermitian_eig(const ComplexMatrix& m);

// True iff ||M M^dagger - M^dagger M||_F <= tol * max(1, ||M||_F^2).
bool is_normal(const ComplexMatrix& m, double tol);

// ||AB - BA||_F for square matrices of equal dimension.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

// kron(A (m x n), B (p x q)) is (mp x nq); block (i,j) equals A(i,j)*B, i.e.
// the left argument is the outer tensor factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Entrywise product; shapes must match.
ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

double vec_norm(const std::vector<cplx>& v);
cplx vec_dot(const std::vector<cplx>& a, const std::vector<cplx>& b);  // conjugate-linear in a
std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& v);
ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);  // u v^dagger
std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace blocksep
