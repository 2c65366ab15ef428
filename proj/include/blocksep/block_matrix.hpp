#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "blocksep/linalg.hpp"

namespace blocksep {

inline constexpr double kDefaultNormalTol = 1e-10;
inline constexpr double kDefaultCommuteTol = 1e-10;

// n x n grid of d x d blocks. The dense layout puts block (i,j) at rows
// [i*d, (i+1)*d) and columns [j*d, (j+1)*d), so the grid index is the outer
// (left) tensor factor.
class BlockMatrix {
 public:
  BlockMatrix(std::size_t n, std::size_t d);

  static BlockMatrix from_dense(const ComplexMatrix& dense, std::size_t n, std::size_t d);
  ComplexMatrix to_dense() const;

  std::size_t n() const { return n_; }  // blocks per row
  std::size_t d() const { return d_; }  // block dimension

  ComplexMatrix& block(std::size_t i, std::size_t j) { return blocks_[i * n_ + j]; }
  const ComplexMatrix& block(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }

  bool operator==(const BlockMatrix& other) const = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<ComplexMatrix> blocks_;  // row-major grid
};

struct BlockIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  bool operator==(const BlockIndex&) const = default;
};

// Flags use the scaled tests below; the defect fields carry the raw worst
// Frobenius norms so they stay meaningful across matrix scales.
struct FamilyReport {
  bool is_normal_family = true;
  bool is_commuting_family = true;
  double max_normality_defect = 0.0;  // max ||B B^dagger - B^dagger B||_F over blocks
  double max_commutator_norm = 0.0;   // max ||AB - BA||_F over block pairs
  std::vector<BlockIndex> non_normal_blocks;                       // at most 10
  std::vector<std::pair<BlockIndex, BlockIndex>> noncommuting_pairs;  // at most 10
};

// Checks every block for normality (tol_normal * max(1, ||B||_F^2)) and every
// unordered block pair for commutation (tol_commute * max(1,||A||_F) * max(1,||B||_F)).
FamilyReport validate_family(const BlockMatrix& t, double tol_normal = kDefaultNormalTol,
                             double tol_commute = kDefaultCommuteTol);

}  // namespace blocksep
