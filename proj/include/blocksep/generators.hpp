#pragma once

#include <cstdint>
#include <vector>

#include "blocksep/block_matrix.hpp"
#include "blocksep/linalg.hpp"

namespace blocksep {

// Coefficients in ascending degree; the list must be nonempty (a leading zero
// is allowed, the degree is only an upper bound).
struct PolynomialSpec {
  std::vector<cplx> coefficients;
};

// Cyclic shift generator: ones on the subdiagonal plus a one in the top-right
// corner. S is real orthogonal, S^d = I, and S u_k = eps^k u_k for the Fourier
// vectors u_k with components conj(eps)^(k*l)/sqrt(d), eps = exp(2*pi*i/d).
ComplexMatrix shift_matrix(std::size_t d);

// S^exponent with negative exponents meaning adjoint powers; exact since S is
// a permutation matrix of order d.
ComplexMatrix shift_power(std::size_t d, long long exponent);

// Block (i,j) = A(i,j) * S^(i-j). Hermitian A gives a Hermitian result.
BlockMatrix circulant_constant(const ComplexMatrix& a, std::size_t d);

// Block (i,j) = B^(j-i) above the diagonal, (B^(i-j))^dagger below, identity
// blocks on the diagonal. B must be normal.
BlockMatrix power_toeplitz(const ComplexMatrix& b, std::size_t n);

// Block (i,j) = grid[i][j] evaluated at B by Horner iteration. Polynomials of
// one normal matrix always form a commuting normal family.
BlockMatrix polynomial_family(const ComplexMatrix& b, const std::vector<std::vector<PolynomialSpec>>& grid);

ComplexMatrix eval_poly(const ComplexMatrix& b, const PolynomialSpec& p);

// Deterministic stream: Box-Muller Gaussians on top of mt19937_64 so the same
// seed yields the same bytes on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  cplx complex_gaussian();

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
// Normal matrix with the prescribed spectrum in a random eigenbasis.
ComplexMatrix normal_with_spectrum(const std::vector<cplx>& spectrum, Rng& rng);

enum class SpectrumShift { none, psd, indefinite };

// Seeded factory for Hermitian members of the commuting-normal class: blocks
// are low-degree polynomials in one random normal matrix (adjoint-mirrored
// below the diagonal, Hermitianized on it). With a shift request the diagonal
// blocks are offset so the spectrum lands strictly on the requested side of
// zero, at distance 0.05 * max(1, ||T||_F).
BlockMatrix random_commuting_family(std::size_t n, std::size_t d, std::uint64_t seed,
                                    SpectrumShift shift = SpectrumShift::none);

}  // namespace blocksep
