#pragma once

// Eigen glue for the exact scalar types. Matrices of these scalars are used as
// plain dense containers with Eigen's expression arithmetic (sums, products,
// Kronecker products); every decomposition is done by the exact routines in
// linalg.hpp, never by Eigen's floating-point solvers.

#include <Eigen/Core>
#include <unsupported/Eigen/KroneckerProduct>

#include "adkit/poly.hpp"
#include "adkit/quad_ext.hpp"
#include "adkit/ratfunc.hpp"
#include "adkit/rational.hpp"

namespace adkit::detail {

template <class T>
struct ExactNumTraits {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline int digits10() { return 0; }
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
};

} // namespace adkit::detail

namespace Eigen {
template <> struct NumTraits<adkit::Rational> : adkit::detail::ExactNumTraits<adkit::Rational> {};
template <> struct NumTraits<adkit::QuadExt> : adkit::detail::ExactNumTraits<adkit::QuadExt> {};
template <> struct NumTraits<adkit::Poly> : adkit::detail::ExactNumTraits<adkit::Poly> {};
template <> struct NumTraits<adkit::RatFunc> : adkit::detail::ExactNumTraits<adkit::RatFunc> {};
} // namespace Eigen

namespace adkit {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using MatP = Mat<Poly>;
using VecP = Vec<Poly>;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) return false;
  return true;
}

/// Entrywise conversion Poly -> Rational at a full assignment.
inline MatQ evaluate(const MatP& m, const Assignment& at) {
  return m.unaryExpr([&](const Poly& p) { return p.evaluate(at); });
}

inline MatP partial_evaluate(const MatP& m, const Assignment& at) {
  return m.unaryExpr([&](const Poly& p) { return p.partial_evaluate(at); });
}

inline MatP substitute(const MatP& m, const std::map<Var, Poly>& values) {
  return m.unaryExpr([&](const Poly& p) { return p.substitute(values); });
}

/// Rational matrix to Poly (or any scalar constructible from a Rational).
template <class S>
Mat<S> lift(const MatQ& m) {
  return m.unaryExpr([](const Rational& q) { return S(q); });
}

} // namespace adkit
