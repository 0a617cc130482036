#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "elnet/mat.hpp"

namespace elnet {

// [A, B] = AB - BA. Throws DimensionMismatch unless A, B are square of equal size.
Mat lie_bracket(const Mat& a, const Mat& b);

// Solves A X = B exactly by Gaussian elimination, first nonzero pivot in
// column order. Throws SingularInterior if A is singular.
Mat solve(const Mat& a, const Mat& b);

// K_B - K_{B,I} K_I^{-1} K_{I,B}, rows/cols indexed by the complement of
// `interior` in original order. Empty interior returns K unchanged.
Mat schur_complement(const Mat& k, const std::set<std::size_t>& interior);

// Finite exponential sum for nilpotent N. Throws NotNilpotent when the power
// series has not terminated after size(N) terms.
Mat exp_nilpotent(const Mat& n, const Rat& t);

// exp(t M) for M = cI + N with N nilpotent, as e^{tc} * exp_nilpotent(N, t).
// Throws UnsupportedMatrix if M is not of that form.
ScaledMat scaled_exp(const Mat& m, const Rat& t);

// Incrementally maintained row space over Q, kept in reduced echelon form.
class RowSpace {
 public:
  // Returns true (and absorbs the row) iff it was independent of the span.
  bool insert(std::vector<Rat> row);
  bool contains(std::vector<Rat> row) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<Rat>>& basis() const { return rows_; }

 private:
  std::vector<Rat> reduce(std::vector<Rat> row) const;
  std::vector<std::vector<Rat>> rows_;   // reduced, pivot entry 1
  std::vector<std::size_t> pivots_;      // pivot column of each basis row
};

// Dimension of the rational span of the flattened matrices.
std::size_t span_dim(const std::vector<Mat>& mats);

}  // namespace elnet
