#include "adkit/structural.hpp"

#include <string>

namespace adkit {
namespace {

// Rows expressing x o e_j (all j) as linear maps of x: block j, column a is e_a o e_j.
MatQ left_action_rows(const StructureConstants<Rational>& sc) {
  const int n = sc.dim();
  MatQ out(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) out.block(j * n, a, n, 1) = sc.basis_product(a, j);
  return out;
}

// Rows expressing e_j o x (all j): block j is the n x n slice of e_j o e_a.
MatQ right_action_rows(const StructureConstants<Rational>& sc) {
  const int n = sc.dim();
  MatQ out(n * n, n);
  for (int j = 0; j < n; ++j) out.block(j * n, 0, n, n) = sc.matrix().middleCols(j * n, n);
  return out;
}

MatQ stack(const std::vector<MatQ>& blocks, int cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  MatQ out(rows, cols);
  Eigen::Index r = 0;
  for (const auto& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

MatQ kernel_span(const MatQ& m) { return span_basis<Rational>(nullspace<Rational>(m)); }

bool same_subspace(const MatQ& u, const MatQ& v) {
  return u.cols() == v.cols() && span_basis<Rational>(u) == span_basis<Rational>(v);
}

bool contained_in(const MatQ& vecs, const MatQ& space) {
  MatQ both(space.rows(), space.cols() + vecs.cols());
  both << space, vecs;
  return rank<Rational>(both) == rank<Rational>(space);
}

} // namespace

MatQ center_associative(const UnaryAlgebra<Rational>& alg) {
  const int n = alg.dim();
  return kernel_span(stack({left_action_rows(alg.mul), right_action_rows(alg.mul)}, n));
}

MatQ center_associative(const UnaryAlgebra<Poly>& alg, const Assignment& at) {
  return center_associative(instantiate(alg, at));
}

MatQ center_ad(const AdPair<Rational>& ad) {
  const int n = ad.dim();
  return kernel_span(stack({left_action_rows(ad.rhd), right_action_rows(ad.rhd), left_action_rows(ad.lhd),
                            right_action_rows(ad.lhd)},
                           n));
}

MatQ center_ad(const AdPair<Poly>& ad, const Assignment& at) { return center_ad(instantiate(ad, at)); }

MatQ left_annihilator(const AdPair<Rational>& ad) {
  return kernel_span(stack({left_action_rows(ad.rhd), left_action_rows(ad.lhd)}, ad.dim()));
}

MatQ right_annihilator(const AdPair<Rational>& ad) {
  return kernel_span(stack({right_action_rows(ad.rhd), right_action_rows(ad.lhd)}, ad.dim()));
}

MatQ product_span(const StructureConstants<Rational>& sc, const MatQ& u, const MatQ& v) {
  const int n = sc.dim();
  MatQ prods(n, u.cols() * v.cols());
  for (Eigen::Index a = 0; a < u.cols(); ++a)
    for (Eigen::Index b = 0; b < v.cols(); ++b) prods.col(a * v.cols() + b) = product(sc, u.col(a), v.col(b));
  return span_basis<Rational>(prods);
}

PowerSeries power_series(const UnaryAlgebra<Rational>& alg) {
  const int n = alg.dim();
  PowerSeries ps;
  std::vector<MatQ> powers{MatQ::Identity(n, n)};
  ps.dims.push_back(n);
  while (ps.dims.back() > 0) {
    const std::size_t next = powers.size() + 1; // exponent being built
    MatQ acc(n, 0);
    for (std::size_t k = 1; k < next; ++k) {
      MatQ part = product_span(alg.mul, powers[k - 1], powers[next - k - 1]);
      MatQ joined(n, acc.cols() + part.cols());
      joined << acc, part;
      acc = span_basis<Rational>(joined);
    }
    const int d = static_cast<int>(acc.cols());
    if (d == ps.dims.back()) break; // A^{i+1} = A^i: not nilpotent
    powers.push_back(acc);
    ps.dims.push_back(d);
  }
  if (ps.dims.back() == 0) ps.nilpotency = static_cast<int>(ps.dims.size());
  bool nf = static_cast<int>(ps.dims.size()) == n + 1;
  for (int i = 0; nf && i <= n; ++i) nf = ps.dims[i] == n - i;
  ps.null_filiform = nf;
  return ps;
}

PowerSeries power_series(const UnaryAlgebra<Poly>& alg, const Assignment& at) {
  return power_series(instantiate(alg, at));
}

Quotient quotient_by_ideal(const AdPair<Rational>& ad, const MatQ& ideal) {
  const int n = ad.dim();
  if (ideal.rows() != n) throw DimensionMismatch("ideal basis vectors have the wrong length");
  Quotient q;
  q.ideal = span_basis<Rational>(ideal);
  const StructureConstants<Rational>* ops[2] = {&ad.rhd, &ad.lhd};
  const MatQ id = MatQ::Identity(n, n);
  for (const auto* op : ops)
    for (Eigen::Index u = 0; u < q.ideal.cols(); ++u)
      for (int j = 0; j < n; ++j) {
        MatQ pair(n, 2);
        pair.col(0) = product(*op, q.ideal.col(u), id.col(j));
        pair.col(1) = product(*op, id.col(j), q.ideal.col(u));
        if (!contained_in(pair, q.ideal)) throw PreconditionFailed("subspace is not a two-sided ideal of both operations");
      }

  // Reduce modulo the ideal using its RREF rows; pivots are the eliminated coordinates.
  auto [r, pivots] = rref<Rational>(MatQ(q.ideal.transpose()));
  std::vector<bool> pivotal(n, false);
  for (int p : pivots) pivotal[p] = true;
  for (int c = 0; c < n; ++c)
    if (!pivotal[c]) q.complement.push_back(c);
  auto reduce = [&](VecQ v) {
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!v(pivots[i]).is_zero()) v -= v(pivots[i]) * r.row(static_cast<Eigen::Index>(i)).transpose();
    return v;
  };

  const int m = static_cast<int>(q.complement.size());
  StructureConstants<Rational> out[2] = {StructureConstants<Rational>(m), StructureConstants<Rational>(m)};
  for (int o = 0; o < 2; ++o)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        VecQ v = reduce(ops[o]->basis_product(q.complement[a], q.complement[b]));
        for (int c = 0; c < m; ++c) out[o](a, b, c) = v(q.complement[c]);
      }
  q.pair = AdPair<Rational>(out[0], out[1], ad.label.empty() ? "" : ad.label + "/I");
  return q;
}

Quotient quotient_by_center(const AdPair<Rational>& ad) {
  MatQ zad = center_ad(ad);
  MatQ zas = center_associative(sum_algebra(ad));
  if (!same_subspace(zad, zas))
    throw PreconditionFailed("Z_AD (dim " + std::to_string(zad.cols()) + ") differs from Z_As of the sum algebra (dim " +
                             std::to_string(zas.cols()) + ")");
  return quotient_by_ideal(ad, zad);
}

Quotient quotient_by_center(const AdPair<Poly>& ad, const Assignment& at) {
  return quotient_by_center(instantiate(ad, at));
}

} // namespace adkit
