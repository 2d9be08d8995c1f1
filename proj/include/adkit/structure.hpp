#pragma once

#include <optional>
#include <string>

#include "adkit/eigen_support.hpp"
#include "adkit/errors.hpp"
#include "adkit/linalg.hpp"

namespace adkit {

/// Bilinear product on S^n stored as an n x n^2 matrix: column i*n+j holds
/// the coordinates of e_i o e_j. Indices here are 0-based.
template <class S>
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(int n) : n_(n), m_(Mat<S>::Zero(n, n * n)) {}
  explicit StructureConstants(Mat<S> m) : n_(static_cast<int>(m.rows())), m_(std::move(m)) {
    if (m_.cols() != static_cast<Eigen::Index>(n_) * n_)
      throw DimensionMismatch("structure matrix must be n x n^2");
  }

  int dim() const { return n_; }
  const Mat<S>& matrix() const { return m_; }

  S& operator()(int i, int j, int k) { return m_(k, i * n_ + j); }
  const S& operator()(int i, int j, int k) const { return m_(k, i * n_ + j); }

  /// e_i o e_j
  auto basis_product(int i, int j) const { return m_.col(i * n_ + j); }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    return StructureConstants<T>(Mat<T>(m_.unaryExpr(std::forward<F>(f))));
  }

  bool is_zero() const { return is_zero_matrix(m_); }

  friend StructureConstants operator+(const StructureConstants& a, const StructureConstants& b) {
    check_same_dim(a, b);
    return StructureConstants(Mat<S>(a.m_ + b.m_));
  }
  friend StructureConstants operator-(const StructureConstants& a, const StructureConstants& b) {
    check_same_dim(a, b);
    return StructureConstants(Mat<S>(a.m_ - b.m_));
  }
  friend StructureConstants operator-(const StructureConstants& a) { return StructureConstants(Mat<S>(-a.m_)); }
  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }
  friend bool operator!=(const StructureConstants& a, const StructureConstants& b) { return !(a == b); }

private:
  static void check_same_dim(const StructureConstants& a, const StructureConstants& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("structure constants of different dimensions");
  }

  int n_ = 0;
  Mat<S> m_;
};

/// (A, .) with an optional catalog label.
template <class S = Poly>
struct UnaryAlgebra {
  StructureConstants<S> mul;
  std::string label;

  int dim() const { return mul.dim(); }
};

/// (A, |>, <|). rhd is |>, lhd is <|.
template <class S = Poly>
struct AdPair {
  StructureConstants<S> rhd, lhd;
  std::string label;

  AdPair() = default;
  AdPair(StructureConstants<S> r, StructureConstants<S> l, std::string lab = {})
      : rhd(std::move(r)), lhd(std::move(l)), label(std::move(lab)) {
    if (rhd.dim() != lhd.dim()) throw DimensionMismatch("rhd and lhd have different dimensions");
  }
  explicit AdPair(int n) : rhd(n), lhd(n) {}

  int dim() const { return rhd.dim(); }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    return AdPair<T>(rhd.map(f), lhd.map(f), label);
  }

  friend bool operator==(const AdPair& a, const AdPair& b) { return a.rhd == b.rhd && a.lhd == b.lhd; }
  friend bool operator!=(const AdPair& a, const AdPair& b) { return !(a == b); }
};

/// x o y, bilinear extension of the table.
template <class S, class DX, class DY>
Vec<S> product(const StructureConstants<S>& sc, const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != sc.dim() || y.size() != sc.dim()) throw DimensionMismatch("vector length differs from algebra dimension");
  return sc.matrix() * Vec<S>(Eigen::kroneckerProduct(Vec<S>(x), Vec<S>(y)));
}

/// e_i o v
template <class S, class D>
Vec<S> left_basis_product(const StructureConstants<S>& sc, int i, const Eigen::MatrixBase<D>& v) {
  const int n = sc.dim();
  return sc.matrix().middleCols(i * n, n) * v;
}

/// v o e_j
template <class S, class D>
Vec<S> right_basis_product(const StructureConstants<S>& sc, const Eigen::MatrixBase<D>& v, int j) {
  const int n = sc.dim();
  Vec<S> out = Vec<S>::Zero(n);
  for (int c = 0; c < n; ++c)
    if (!is_zero(v(c))) out += v(c) * sc.basis_product(c, j);
  return out;
}

/// x . y = x |> y + x <| y
template <class S>
UnaryAlgebra<S> sum_algebra(const AdPair<S>& ad) {
  return {ad.rhd + ad.lhd, ad.label.empty() ? std::string() : "sum(" + ad.label + ")"};
}

/// Structure constants of the same product in the basis e'_i = sum_a T(a,i) e_a:
/// M' = T^{-1} M (T (x) T). Throws SingularMatrix.
template <class S>
StructureConstants<S> apply_basis_change(const StructureConstants<S>& sc, const Mat<S>& t) {
  if (t.rows() != sc.dim() || t.cols() != sc.dim()) throw DimensionMismatch("witness size differs from algebra dimension");
  Mat<S> tt = Eigen::kroneckerProduct(t, t);
  return StructureConstants<S>(Mat<S>(inverse(t) * (sc.matrix() * tt)));
}

template <class S>
AdPair<S> apply_basis_change(const AdPair<S>& ad, const Mat<S>& t) {
  return AdPair<S>(apply_basis_change(ad.rhd, t), apply_basis_change(ad.lhd, t), ad.label);
}

/// Symbolic tensors under a rational change of basis.
inline StructureConstants<Poly> apply_basis_change(const StructureConstants<Poly>& sc, const MatQ& t) {
  if (t.rows() != sc.dim() || t.cols() != sc.dim()) throw DimensionMismatch("witness size differs from algebra dimension");
  MatP tinv = lift<Poly>(inverse(t));
  MatP tt = lift<Poly>(MatQ(Eigen::kroneckerProduct(t, t)));
  return StructureConstants<Poly>(MatP(tinv * (sc.matrix() * tt)));
}

inline AdPair<Poly> apply_basis_change(const AdPair<Poly>& ad, const MatQ& t) {
  return AdPair<Poly>(apply_basis_change(ad.rhd, t), apply_basis_change(ad.lhd, t), ad.label);
}

/// True iff sc expressed in the basis given by the columns of t equals target,
/// i.e. M_sc (T (x) T) == T M_target. Needs no inverse, so it works over rings.
template <class S>
bool transports_to(const StructureConstants<S>& sc, const StructureConstants<S>& target, const Mat<S>& t) {
  if (sc.dim() != target.dim() || t.rows() != sc.dim() || t.cols() != sc.dim())
    throw DimensionMismatch("dimensions of source, target and witness disagree");
  Mat<S> tt = Eigen::kroneckerProduct(t, t);
  Mat<S> lhs = sc.matrix() * tt;
  Mat<S> rhs = t * target.matrix();
  return is_zero_matrix(Mat<S>(lhs - rhs));
}

inline StructureConstants<Rational> instantiate(const StructureConstants<Poly>& sc, const Assignment& at) {
  return sc.map([&](const Poly& p) { return p.evaluate(at); });
}
inline AdPair<Rational> instantiate(const AdPair<Poly>& ad, const Assignment& at) {
  return ad.map([&](const Poly& p) { return p.evaluate(at); });
}
inline UnaryAlgebra<Rational> instantiate(const UnaryAlgebra<Poly>& a, const Assignment& at) {
  return {instantiate(a.mul, at), a.label};
}

template <class S>
StructureConstants<Poly> to_poly(const StructureConstants<S>& sc) {
  return sc.map([](const S& q) { return Poly(q); });
}
template <class S>
AdPair<Poly> to_poly(const AdPair<S>& ad) {
  return ad.map([](const S& q) { return Poly(q); });
}

} // namespace adkit
