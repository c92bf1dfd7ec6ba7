#pragma once

// Exact determinant and rank for Eigen matrices with rational entries.

#include <Eigen/Core>
#include <vector>

#include "cymod/rational.hpp"

namespace cymod {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// Row-echelon reduction in place; returns the rank and the sign/scale of the
// determinant through det when the matrix is square.
int row_reduce(RatMatrix& m, Rational* det = nullptr);

inline Rational determinant(RatMatrix m) {
  Rational d;
  row_reduce(m, &d);
  return d;
}

inline int rank(RatMatrix m) { return row_reduce(m); }
inline int rank(const IntMatrix& m) { return rank(RatMatrix(m.cast<Rational>())); }

// Resultant of two binary forms given by coefficient lists c_0..c_n (formal
// degree n = size - 1), via the Sylvester determinant.
Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);
Integer resultant(const std::vector<Integer>& f, const std::vector<Integer>& g);

}  // namespace cymod
