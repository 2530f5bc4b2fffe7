#pragma once

#include <Eigen/Dense>

#include "krmiss/errors.hpp"

namespace krmiss {

// Dense double-precision storage used throughout. Every experiment in this
// library stays below a few thousand rows, so direct O(n^3) factorizations
// are the right tool; there are no sparse or iterative paths.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace detail {

inline void check_square_system(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("matrix must be square, got " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  if (b.size() != a.rows())
    throw DimensionMismatch("rhs length " + std::to_string(b.size()) +
                            " does not match matrix order " +
                            std::to_string(a.rows()));
}

// One step of iterative refinement keeps the residual within the promised
// 1e-8 * (1 + |b|_inf) even on poorly scaled systems.
template <typename Factorization>
Vector refined_solve(const Factorization& fact, const Matrix& a,
                     const Vector& b) {
  Vector x = fact.solve(b);
  Vector r = b - a * x;
  x += fact.solve(r);
  return x;
}

}  // namespace detail

// Solves A x = b for symmetric positive-definite A via Cholesky.
// Throws NotPositiveDefinite when a non-positive pivot shows up, which in
// this library signals lambda chosen too small or duplicated support points.
inline Vector solve_spd(const Matrix& a, const Vector& b) {
  detail::check_square_system(a, b);
  const double scale = a.cwiseAbs().maxCoeff();
  if (a.rows() > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() >
                          1e-10 * (scale > 0 ? scale : 1.0))
    throw NotPositiveDefinite("matrix is not symmetric");
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("Cholesky factorization failed");
  return detail::refined_solve(llt, a, b);
}

// Solves A x = b for general square A via row-pivoted LU.
inline Vector solve_general(const Matrix& a, const Vector& b) {
  detail::check_square_system(a, b);
  const double scale = a.size() > 0 ? a.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0 && a.rows() > 0) throw Singular("zero matrix");
  Eigen::PartialPivLU<Matrix> lu(a);
  if (a.rows() > 0 &&
      lu.matrixLU().diagonal().cwiseAbs().minCoeff() < 1e-12 * scale)
    throw Singular("pivot below 1e-12 * max|A|");
  return detail::refined_solve(lu, a, b);
}

}  // namespace krmiss
