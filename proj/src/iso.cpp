#include "adkit/iso.hpp"

#include <algorithm>
#include <set>

#include "adkit/structural.hpp"

namespace adkit {

WitnessVerdict verify_witness(const AdPair<Poly>& source, const AdPair<Poly>& target, const MatP& t,
                              const std::vector<Poly>& nonzero) {
  if (source.dim() != target.dim() || t.rows() != source.dim() || t.cols() != source.dim())
    throw DimensionMismatch("dimensions of source, target and witness disagree");
  Poly d = det_poly(t);
  if (d.is_zero()) throw SingularMatrix("witness determinant is identically zero");
  WitnessVerdict v;
  v.det = d.str();
  v.rhd_ok = transports_to(source.rhd, target.rhd, t);
  v.lhd_ok = transports_to(source.lhd, target.lhd, t);
  v.pass = v.rhd_ok && v.lhd_ok;
  if (!v.pass) {
    v.detail = !v.rhd_ok ? "|> is not transported" : "<| is not transported";
  } else if (!d.is_constant()) {
    // det = c * product of the stated conditions?
    Poly rest = d;
    bool progress = true;
    while (progress && !rest.is_constant()) {
      progress = false;
      for (const Poly& z : nonzero)
        if (!z.is_constant())
          if (auto q = rest.divide_exact(z)) {
            rest = *q;
            progress = true;
          }
    }
    v.detail = rest.is_constant() ? "det nonzero under the stated conditions"
                                   : "det " + d.str() + " vanishes somewhere; valid where it does not";
  }
  return v;
}

WitnessVerdict verify_note(const CatalogEntry& entry, const IsoNote& note) {
  if (!note.witness) {
    WitnessVerdict v;
    v.detail = "no printed witness";
    return v;
  }
  const Catalog& cat = Catalog::instance();
  AdPair<Poly> src = entry.pair.map([&](const Poly& p) { return p.substitute(note.source_at); });
  AdPair<Poly> tgt = cat.at(note.target).pair.map([&](const Poly& p) { return p.substitute(note.target_at); });
  MatP t = substitute(*note.witness, note.source_at);
  return verify_witness(src, tgt, t, note.nonzero);
}

// ---------------------------------------------------------------------------
// Fingerprints

const std::vector<std::string>& fingerprint_components() {
  static const std::vector<std::string> names{
      "dim",          "rhd_span",          "lhd_span",          "sum_span",      "power_dims",      "center_ad",
      "center_sum",   "left_annihilator",  "right_annihilator", "two_nilpotent", "sum_commutative", "diff_square_span"};
  return names;
}

std::vector<std::pair<std::string, std::string>> fingerprint_fields(const Fingerprint& f) {
  std::string pd = "[";
  for (std::size_t i = 0; i < f.power_dims.size(); ++i) pd += (i ? "," : "") + std::to_string(f.power_dims[i]);
  pd += "]";
  const auto& n = fingerprint_components();
  return {{n[0], std::to_string(f.dim)},
          {n[1], std::to_string(f.rhd_span)},
          {n[2], std::to_string(f.lhd_span)},
          {n[3], std::to_string(f.sum_span)},
          {n[4], pd},
          {n[5], std::to_string(f.center_ad)},
          {n[6], std::to_string(f.center_sum)},
          {n[7], std::to_string(f.left_annihilator)},
          {n[8], std::to_string(f.right_annihilator)},
          {n[9], f.two_nilpotent ? "true" : "false"},
          {n[10], f.sum_commutative ? "true" : "false"},
          {n[11], std::to_string(f.diff_square_span)}};
}

std::vector<std::string> differing(const Fingerprint& a, const Fingerprint& b) {
  std::vector<std::string> out;
  auto fa = fingerprint_fields(a), fb = fingerprint_fields(b);
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i].second != fb[i].second) out.push_back(fa[i].first);
  return out;
}

Fingerprint fingerprint(const AdPair<Rational>& ad) {
  Fingerprint f;
  const int n = f.dim = ad.dim();
  UnaryAlgebra<Rational> sum = sum_algebra(ad);
  f.rhd_span = rank(ad.rhd.matrix());
  f.lhd_span = rank(ad.lhd.matrix());
  f.sum_span = rank(sum.mul.matrix());
  f.power_dims = power_series(sum).dims;
  f.center_ad = static_cast<int>(center_ad(ad).cols());
  f.center_sum = static_cast<int>(center_associative(sum).cols());
  f.left_annihilator = static_cast<int>(left_annihilator(ad).cols());
  f.right_annihilator = static_cast<int>(right_annihilator(ad).cols());
  f.two_nilpotent = is_two_nilpotent(ad);
  f.sum_commutative = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) f.sum_commutative = f.sum_commutative && sum.mul(i, j, k) == sum.mul(j, i, k);
  // x |-> D(x,x) is a quadratic map; its image spans the same space as the
  // values of the symmetrised bilinear form on basis pairs.
  StructureConstants<Rational> diff = ad.rhd - ad.lhd;
  MatQ vecs(n, n * (n + 1) / 2);
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++col)
      for (int k = 0; k < n; ++k) vecs(k, col) = i == j ? diff(i, i, k) : diff(i, j, k) + diff(j, i, k);
  f.diff_square_span = rank(vecs);
  return f;
}

Fingerprint fingerprint(const AdPair<Poly>& ad, const Assignment& at) { return fingerprint(instantiate(ad, at)); }

// ---------------------------------------------------------------------------
// Search

const char* search_status_name(SearchStatus s) {
  switch (s) {
  case SearchStatus::found: return "found";
  case SearchStatus::separated: return "separated";
  case SearchStatus::not_found: return "not-found-within-bound";
  }
  return "?";
}

std::vector<Rational> search_values(int bound) {
  std::vector<Rational> out{Rational(0)};
  std::set<Rational> seen{Rational(0)};
  for (int h = 1; h <= bound; ++h)
    for (int q = 1; q <= h; ++q)
      for (int p = 1; p <= h; ++p) {
        if (std::max(p, q) != h) continue;
        Rational v{mpz_class(p), mpz_class(q)};
        if (!seen.insert(v).second) continue;
        out.push_back(v);
        out.push_back(-v);
      }
  return out;
}

namespace {

// Depth-first search over the entries of T. Column c of T is the image of the
// target's e_c. Once a column is known, every product equation involving it
// is linear in the remaining entries; those are solved before branching.
template <class S>
class WitnessSearch {
public:
  WitnessSearch(const AdPair<S>& src, const AdPair<S>& tgt, std::vector<S> values, long limit)
      : n_(src.dim()), values_(std::move(values)), limit_(limit) {
    ops_.push_back({src.rhd, tgt.rhd});
    ops_.push_back({src.lhd, tgt.lhd});
    src_ = src;
    tgt_ = tgt;
  }

  std::optional<Mat<S>> run() {
    std::vector<std::pair<int, S>> fixed;
    return visit(fixed);
  }

  long nodes() const { return nodes_; }
  bool limit_hit() const { return limit_hit_; }

private:
  int var(int row, int col) const { return col * n_ + row; }

  struct Solved {
    bool consistent = true;
    std::vector<std::optional<S>> value; // per variable, when determined
  };

  Solved solve(const std::vector<std::pair<int, S>>& fixed) const {
    const int nv = n_ * n_;
    Solved out;
    out.value.assign(nv, std::nullopt);
    for (const auto& [v, x] : fixed) out.value[v] = x;
    while (true) {
      std::vector<bool> col_known(n_);
      for (int c = 0; c < n_; ++c) {
        col_known[c] = true;
        for (int r = 0; r < n_; ++r) col_known[c] = col_known[c] && out.value[var(r, c)].has_value();
      }
      std::vector<std::vector<S>> rows;
      for (const auto& [v, x] : fixed) {
        std::vector<S> row(nv + 1, S(0));
        row[v] = S(1);
        row[nv] = x;
        rows.push_back(std::move(row));
      }
      for (const auto& [ms, mt] : ops_)
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) {
            if (!col_known[i] && !col_known[j]) continue;
            for (int a = 0; a < n_; ++a) {
              // sum_{p,q} ms(p,q,a) t_i[p] t_j[q] - sum_k mt(i,j,k) t_k[a] = 0
              std::vector<S> row(nv + 1, S(0));
              for (int p = 0; p < n_; ++p)
                for (int q = 0; q < n_; ++q) {
                  const S& c = ms(p, q, a);
                  if (is_zero(c)) continue;
                  if (col_known[i] && col_known[j]) row[nv] -= c * *out.value[var(p, i)] * *out.value[var(q, j)];
                  else if (col_known[i]) row[var(q, j)] += c * *out.value[var(p, i)];
                  else row[var(p, i)] += c * *out.value[var(q, j)];
                }
              for (int k = 0; k < n_; ++k)
                if (!is_zero(mt(i, j, k))) row[var(a, k)] -= mt(i, j, k);
              bool any = false;
              for (const S& x : row) any = any || !is_zero(x);
              if (any) rows.push_back(std::move(row));
            }
          }
      Mat<S> m(static_cast<Eigen::Index>(rows.size()), nv + 1);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c <= nv; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][c];
      auto [red, pivots] = rref(m);
      if (!pivots.empty() && pivots.back() == nv) {
        out.consistent = false;
        return out;
      }
      bool grew = false;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        bool alone = true;
        for (int c = pivots[r] + 1; c < nv && alone; ++c) alone = is_zero(red(static_cast<Eigen::Index>(r), c));
        if (alone && !out.value[pivots[r]]) {
          out.value[pivots[r]] = red(static_cast<Eigen::Index>(r), nv);
          grew = true;
        }
      }
      if (!grew) return out;
    }
  }

  // Known columns must stay linearly independent.
  bool columns_independent(const Solved& s) const {
    std::vector<int> known;
    for (int c = 0; c < n_; ++c) {
      bool k = true;
      for (int r = 0; r < n_; ++r) k = k && s.value[var(r, c)].has_value();
      if (k) known.push_back(c);
    }
    if (known.empty()) return true;
    Mat<S> m(n_, static_cast<Eigen::Index>(known.size()));
    for (std::size_t q = 0; q < known.size(); ++q)
      for (int r = 0; r < n_; ++r) m(r, static_cast<Eigen::Index>(q)) = *s.value[var(r, known[q])];
    return rank(m) == static_cast<int>(known.size());
  }

  std::optional<Mat<S>> visit(std::vector<std::pair<int, S>>& fixed) {
    if (++nodes_ > limit_) {
      limit_hit_ = true;
      return std::nullopt;
    }
    Solved s = solve(fixed);
    if (!s.consistent || !columns_independent(s)) return std::nullopt;
    int next = -1;
    for (int v = 0; v < n_ * n_ && next < 0; ++v)
      if (!s.value[v]) next = v;
    if (next < 0) {
      Mat<S> t(n_, n_);
      for (int c = 0; c < n_; ++c)
        for (int r = 0; r < n_; ++r) t(r, c) = *s.value[var(r, c)];
      if (is_zero(det(t))) return std::nullopt;
      if (transports_to(src_.rhd, tgt_.rhd, t) && transports_to(src_.lhd, tgt_.lhd, t)) return t;
      return std::nullopt;
    }
    for (const S& x : values_) {
      fixed.emplace_back(next, x);
      auto found = visit(fixed);
      fixed.pop_back();
      if (found || limit_hit_) return found;
    }
    return std::nullopt;
  }

  int n_;
  std::vector<S> values_;
  long limit_;
  long nodes_ = 0;
  bool limit_hit_ = false;
  std::vector<std::pair<StructureConstants<S>, StructureConstants<S>>> ops_;
  AdPair<S> src_, tgt_;
};

AdPair<QuadExt> to_ext(const AdPair<Rational>& ad) {
  return ad.map([](const Rational& q) { return QuadExt(q); });
}

} // namespace

SearchResult search_witness(const AdPair<Rational>& source, const AdPair<Rational>& target, const SearchOptions& opt) {
  if (source.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  SearchResult res;
  res.source_fp = fingerprint(source);
  res.target_fp = fingerprint(target);
  res.separation = differing(res.source_fp, res.target_fp);
  if (!res.separation.empty()) {
    res.status = SearchStatus::separated;
    return res;
  }
  WitnessSearch<Rational> rational(source, target, search_values(opt.bound), opt.node_limit);
  auto t = rational.run();
  res.nodes = rational.nodes();
  res.node_limit_hit = rational.limit_hit();
  if (t) {
    if (!verify_witness(source, target, *t).pass) throw std::logic_error("search returned an invalid witness");
    res.status = SearchStatus::found;
    res.witness = *t;
    return res;
  }
  if (opt.sqrt) {
    QuadExt root = QuadExt::sqrt_of(*opt.sqrt);
    std::vector<QuadExt> values;
    for (const Rational& q : search_values(opt.bound)) {
      values.emplace_back(q);
      if (!q.is_zero()) values.push_back(QuadExt(q) * root);
    }
    WitnessSearch<QuadExt> ext(to_ext(source), to_ext(target), values, opt.node_limit);
    auto te = ext.run();
    res.nodes += ext.nodes();
    res.node_limit_hit = res.node_limit_hit || ext.limit_hit();
    if (te) {
      if (!verify_witness(to_ext(source), to_ext(target), *te).pass)
        throw std::logic_error("search returned an invalid witness");
      res.status = SearchStatus::found;
      res.witness_ext = *te;
    }
  }
  return res;
}

} // namespace adkit
