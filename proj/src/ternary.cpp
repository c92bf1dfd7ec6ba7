#include "cymod/ternary.hpp"

#include "cymod/linalg.hpp"

namespace cymod {

Rational cubic_discriminant(const RatForm& f) {
  if (f.degree() != 3) throw Error(ErrorKind::InvalidArgument, "cubic form expected");
  RatForm h = hessian(f);
  RatForm rows[6] = {f.partial(0), f.partial(1), f.partial(2), h.partial(0), h.partial(1), h.partial(2)};
  RatMatrix m(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = rows[r].coeffs()[c];
  return determinant(m);
}

}  // namespace cymod
