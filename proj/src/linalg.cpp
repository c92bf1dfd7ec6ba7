#include "cymod/linalg.hpp"

#include "cymod/errors.hpp"

namespace cymod {

int row_reduce(RatMatrix& m, Rational* det) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Rational d(1);
  int r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      d = Rational(0);
      continue;
    }
    if (piv != r) {
      m.row(piv).swap(m.row(r));
      d = -d;
    }
    d *= m(r, c);
    Rational inv = m(r, c).inverse();
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  if (det) *det = (rows == cols && r == rows) ? d : Rational(0);
  return r;
}

Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  if (f.empty() || g.empty()) throw Error(ErrorKind::InvalidArgument, "resultant of empty form");
  const int n = static_cast<int>(f.size()) - 1, m = static_cast<int>(g.size()) - 1;
  const int size = n + m;
  if (size == 0) return Rational(1);
  RatMatrix s = RatMatrix::Constant(size, size, Rational(0));
  // rows hold coefficients from the highest power down
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(i, i + k) = f[n - k];
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(m + i, i + k) = g[m - k];
  return determinant(s);
}

Integer resultant(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  std::vector<Rational> a(f.begin(), f.end()), b(g.begin(), g.end());
  return resultant(a, b).num();
}

}  // namespace cymod
