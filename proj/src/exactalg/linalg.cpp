#include "pairtopo/linalg.hpp"

#include "pairtopo/polyalg.hpp"

namespace pairtopo {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

RowEchelon rowReduce(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).isZero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).isZero()) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  auto ech = rowReduce(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : ech.pivots) isPivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    RatVector v(m.cols());
    v[free] = Rat(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinSolveResult linSolveRat(const RatMatrix& m, const RatVector& v) {
  if (v.size() != m.rows())
    throw DimensionError("right-hand side has " + std::to_string(v.size()) + " entries, matrix has " +
                         std::to_string(m.rows()) + " rows");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = v[i];
  }
  auto ech = rowReduce(std::move(aug));
  LinSolveResult out;
  out.kernel = nullspace(m);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return out;
  RatVector sol(m.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) sol[ech.pivots[r]] = ech.reduced.at(r, m.cols());
  out.solution = std::move(sol);
  return out;
}

RatVector matVec(const RatMatrix& m, const RatVector& c) {
  if (c.size() != m.cols()) throw DimensionError("vector length does not match column count");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * c[j];
  return out;
}

namespace {

// Fraction-free elimination in place. Returns rank; `sign` tracks row swaps.
std::size_t bareiss(PolyMatrix& m, int& sign) {
  sign = 1;
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  RatPoly prev = RatPoly::constant(Rat(1));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m[p][col].isZero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      std::swap(m[p], m[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        RatPoly num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        auto q = divideExact(num, prev);
        if (!q) throw InvariantBreach("Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
      m[i][col] = RatPoly();
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t polyMatrixRank(PolyMatrix m) {
  int sign = 1;
  return bareiss(m, sign);
}

RatPoly polyDeterminant(PolyMatrix m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of non-square matrix");
  if (n == 0) return RatPoly::constant(Rat(1));
  int sign = 1;
  std::size_t rank = bareiss(m, sign);
  if (rank < n) return RatPoly();
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace pairtopo
