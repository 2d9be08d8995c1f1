#include "adkit/linalg.hpp"

namespace adkit {

Poly det_poly(const MatP& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return m(0, 0);
  Poly out;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    MatP minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Poly term = m(0, c) * det_poly(minor);
    if (c % 2) out -= term;
    else out += term;
  }
  return out;
}

} // namespace adkit
