#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pairtopo/mpoly.hpp"
#include "pairtopo/rat.hpp"

namespace pairtopo {

/// Dense row-major matrix over Q with explicit shape, so 0xN is representable.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> init);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

using RatVector = std::vector<Rat>;

struct RowEchelon {
  RatMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RowEchelon rowReduce(RatMatrix m);

/// Basis of {c : M c = 0}; one vector per free column, free entry set to 1.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct LinSolveResult {
  std::optional<RatVector> solution;  // particular solution, free variables 0
  std::vector<RatVector> kernel;
  bool solvable() const { return solution.has_value(); }
};

/// Exact Gaussian elimination for M c = v. Throws DimensionError when v's
/// length differs from M's row count.
LinSolveResult linSolveRat(const RatMatrix& m, const RatVector& v);

RatVector matVec(const RatMatrix& m, const RatVector& c);

using PolyMatrix = std::vector<std::vector<RatPoly>>;

/// Rank over the fraction field by fraction-free (Bareiss) elimination.
std::size_t polyMatrixRank(PolyMatrix m);

/// Determinant of a square polynomial matrix by Bareiss elimination.
RatPoly polyDeterminant(PolyMatrix m);

}  // namespace pairtopo
