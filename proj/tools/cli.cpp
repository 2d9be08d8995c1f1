#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "adkit/catalog.hpp"
#include "adkit/iso.hpp"
#include "adkit/poly_parse.hpp"
#include "adkit/solver.hpp"
#include "adkit/structural.hpp"

namespace adkit::cli {

using nlohmann::json;

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        bool flat = v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
        if (flat) {
          os << pad << "- " << v.dump() << "\n";
        } else {
          os << pad << "-\n";
          render(v, indent + 2, os);
        }
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }
}

} // namespace

std::string render_plain(const json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  json inputs = json::object();
  json results = json::object();
  std::string status = "pass";

  void fail() {
    if (status == "pass") status = "fail";
  }
  void inconclusive() {
    if (status != "fail") status = "inconclusive";
  }
};

struct Input {
  std::string path;
  std::string text;
  AlgebraFile file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load(const std::string& path, Report& rep) {
  Input in{path, read_file(path), {}};
  rep.inputs[path] = digest(in.text);
  try {
    in.file = parse_algebra(in.text);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
  return in;
}

std::set<Var> variables_of(const StructureConstants<Poly>& sc) {
  std::set<Var> out;
  for (Eigen::Index r = 0; r < sc.matrix().rows(); ++r)
    for (Eigen::Index c = 0; c < sc.matrix().cols(); ++c)
      for (Var v : sc.matrix()(r, c).variables()) out.insert(v);
  return out;
}

std::set<Var> variables_of(const AlgebraFile& f) {
  if (f.kind == AlgebraKind::associative) return variables_of(f.mul.mul);
  std::set<Var> a = variables_of(f.pair.rhd), b = variables_of(f.pair.lhd);
  a.insert(b.begin(), b.end());
  return a;
}

AlgebraFile substituted(const AlgebraFile& f, const std::map<Var, Poly>& subs) {
  if (subs.empty()) return f;
  auto sub = [&](const Poly& p) { return p.substitute(subs); };
  AlgebraFile out = f;
  if (f.kind == AlgebraKind::associative) out.mul.mul = f.mul.mul.map(sub);
  else out.pair = f.pair.map(sub);
  std::set<Var> vars = variables_of(out);
  out.params.assign(vars.begin(), vars.end());
  return out;
}

std::map<Var, Poly> parse_subs(const std::string& text) {
  if (text.empty()) return {};
  return parse_substitution(text);
}

json assignment_json(const Assignment& at) {
  json j = json::object();
  for (const auto& [v, q] : at) j[var_name(v)] = q.str();
  return j;
}

json subs_json(const std::map<Var, Poly>& s) {
  json j = json::object();
  for (const auto& [v, p] : s) j[var_name(v)] = p.str();
  return j;
}

std::string vec_expr(const VecQ& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational& c = v(i);
    if (c.is_zero()) continue;
    std::string basis = "e" + std::to_string(i + 1);
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    std::string term = a.is_one() ? basis : a.str() + "*" + basis;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

json basis_json(const MatQ& m) {
  json j = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) j.push_back(vec_expr(m.col(c)));
  return j;
}

json residual_json(const Vec<Poly>& r) {
  json j = json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) j.push_back(r(i).str());
  return j;
}

json violation_json(const Violation<Poly>& v) {
  return {{"triple", {v.i + 1, v.j + 1, v.k + 1}}, {"residual", residual_json(v.residual)}};
}

json axiom_json(const AxiomReport<Poly>& rep) {
  json ids = json::object();
  for (int id = 1; id <= kIdentityCount; ++id) {
    json viol = json::array();
    for (const auto& v : rep.per_identity[id - 1]) viol.push_back(violation_json(v));
    ids["id" + std::to_string(id)] = {{"identity", identity_text(id)}, {"holds", rep.identity_holds(id)}, {"violations", viol}};
  }
  return {{"identities", ids}, {"eq2", rep.eq2}, {"eq3", rep.eq3}, {"pass", rep.pass()}};
}

json table_json(const StructureConstants<Rational>& sc) { return tensor_to_json(to_poly(sc)); }

json ratfunc_table(const StructureConstants<RatFunc>& sc) {
  json j = json::array();
  const int n = sc.dim();
  for (int i = 0; i < n; ++i)
    for (int k2 = 0; k2 < n; ++k2)
      for (int k = 0; k < n; ++k) {
        const RatFunc& x = sc(i, k2, k);
        if (!x.is_zero()) j.push_back({i + 1, k2 + 1, k + 1, x.str()});
      }
  return j;
}

template <class S>
json matrix_json(const Mat<S>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json fingerprint_json(const Fingerprint& f) {
  json j = json::object();
  for (const auto& [k, v] : fingerprint_fields(f)) j[k] = v;
  return j;
}

// ---------------------------------------------------------------------------
// verify

void cmd_verify(const std::string& path, const std::string& assign, Report& rep) {
  Input in = load(path, rep);
  auto subs = parse_subs(assign);
  AlgebraFile f = substituted(in.file, subs);
  json& res = rep.results;
  res["assignment"] = subs_json(subs);
  if (f.kind == AlgebraKind::associative) {
    res["kind"] = "associative";
    auto viol = associativity_violations(f.mul);
    json vj = json::array();
    for (const auto& v : viol) vj.push_back(violation_json(v));
    res["associative"] = viol.empty();
    res["violations"] = vj;
    if (!viol.empty()) rep.fail();
    return;
  }
  res["kind"] = "antidendriform";
  AxiomReport<Poly> ax = check_antidendriform(f.pair);
  res["axioms"] = axiom_json(ax);
  UnaryAlgebra<Poly> sum = sum_algebra(f.pair);
  res["sum"] = tensor_to_json(sum.mul);
  res["sum_associative"] = is_associative(sum);
  if (!ax.pass()) rep.fail();
}

// ---------------------------------------------------------------------------
// catalog

void cmd_catalog_list(Report& rep) {
  json list = json::array();
  for (const auto& e : Catalog::instance().entries()) {
    json params = json::array();
    for (Var v : e.params) params.push_back(var_name(v));
    json item = {{"id", e.id},
                 {"kind", e.kind == AlgebraKind::associative ? "associative" : "antidendriform"},
                 {"dim", e.dim()},
                 {"params", params},
                 {"classified", e.classified}};
    if (!e.nonzero.empty()) item["constraint"] = e.constraint_text();
    if (!e.associated_sum.empty()) item["associated_sum"] = e.associated_sum;
    if (!e.remark.empty()) item["remark"] = e.remark;
    list.push_back(item);
  }
  rep.results["entries"] = list;
  rep.results["generator"] = "mu0_<n>: null-filiform associative algebra of dimension n";
}

void cmd_catalog_verify(const std::vector<std::string>& ids, Report& rep) {
  const Catalog& cat = Catalog::instance();
  std::vector<const CatalogEntry*> entries;
  if (ids.empty()) {
    for (const auto& e : cat.entries()) entries.push_back(&e);
  } else {
    for (const auto& id : ids) {
      const CatalogEntry* e = cat.find(id);
      if (!e) throw UsageError("unknown catalog id " + id);
      entries.push_back(e);
    }
  }
  json out = json::object();
  int ad_pass = 0, ad_total = 0, as_pass = 0, as_total = 0;
  for (const CatalogEntry* e : entries) {
    EntryVerdict v = cat.verify(*e);
    json j = {{"axioms", v.axioms}, {"pass", v.pass()}};
    if (e->kind == AlgebraKind::antidendriform) {
      ++ad_total;
      ad_pass += v.pass();
      j["sum_match"] = v.sum_match.value_or(false);
      j["sum_detail"] = v.sum_detail;
      json failing = json::array();
      for (int id = 1; id <= kIdentityCount; ++id)
        if (!v.report.identity_holds(id)) {
          failing.push_back({{"identity", "id" + std::to_string(id)},
                             {"first_violation", violation_json(v.report.per_identity[id - 1].front())}});
        }
      j["failing_identities"] = failing;
      json notes = json::array();
      for (const auto& note : e->iso_notes) {
        json nj = {{"text", note.text}};
        if (note.witness) {
          WitnessVerdict w = verify_note(*e, note);
          nj["witness_pass"] = w.pass;
          nj["det"] = w.det;
          if (!w.detail.empty()) nj["detail"] = w.detail;
          if (!w.pass) rep.fail();
        } else {
          nj["witness"] = nullptr;
        }
        notes.push_back(nj);
      }
      if (!notes.empty()) j["iso_notes"] = notes;
    } else {
      ++as_total;
      as_pass += v.pass();
      json viol = json::array();
      for (const auto& x : v.assoc_violations) viol.push_back(violation_json(x));
      j["violations"] = viol;
    }
    if (!e->remark.empty()) j["remark"] = e->remark;
    if (!v.pass()) rep.fail();
    out[e->id] = j;
  }
  rep.results["entries"] = out;
  rep.results["summary"] = {{"antidendriform_pass", ad_pass},
                            {"antidendriform_total", ad_total},
                            {"associative_pass", as_pass},
                            {"associative_total", as_total}};
}

// Returns the algebra file text.
std::string catalog_export(std::string id, int n, const std::string& assign) {
  if (id == "mu0") {
    if (n < 1) throw UsageError("export mu0 needs --n <dimension>");
    id = "mu0_" + std::to_string(n);
  }
  const Catalog& cat = Catalog::instance();
  std::optional<Assignment> at;
  if (!assign.empty()) at = parse_assignment(assign);
  return dump_algebra(cat.get(id, at));
}

// ---------------------------------------------------------------------------
// enumerate

json step_json(const Step& s, const Poly& result) {
  std::string text;
  switch (s.kind) {
  case Step::substitute:
    text = var_name(s.var) + " := " +
           (s.den.is_constant() ? (s.num * Poly(s.den.constant_value()->inverse())).str()
                                : "(" + s.num.str() + ")/(" + s.den.str() + ")");
    break;
  case Step::divide: text = "divide by " + s.factor.str(); break;
  case Step::square_root: text = "square root"; break;
  }
  return {{"step", text}, {"result", result.str()}};
}

json certificate_json(const Certificate& c) {
  json steps = json::array();
  std::vector<Poly> trace = c.trace();
  for (std::size_t i = 0; i < c.steps.size(); ++i) steps.push_back(step_json(c.steps[i], trace[i]));
  json j = {{"kind", c.kind == Certificate::nonzero_constant ? "nonzero_constant" : "side_condition_vanishes"},
            {"start", c.start.str()},
            {"steps", steps},
            {"final", trace.empty() ? c.start.str() : trace.back().str()},
            {"replays", c.replay()}};
  if (c.origin >= 0) {
    j["equation"] = c.origin;
    j["provenance"] = c.provenance.str();
  } else {
    j["provenance"] = "case-split assumption";
  }
  return j;
}

json family_json(const Family& f) {
  json params = json::array();
  for (Var p : f.params) params.push_back(var_name(p));
  json renamed = json::object();
  for (const auto& [u, p] : f.renamed) renamed[unknown_name(u)] = var_name(p);
  json sides = json::array();
  for (const Poly& s : f.side_conditions) sides.push_back(s.str());
  json j = {{"params", params}, {"renamed", renamed}, {"side_conditions", sides}};
  if (auto poly = f.polynomial()) {
    j["algebra"] = to_json(AlgebraFile::of(*poly, f.params));
  } else {
    j["rhd"] = ratfunc_table(f.pair.rhd);
    j["lhd"] = ratfunc_table(f.pair.lhd);
  }
  return j;
}

void cmd_enumerate(const std::string& path, const std::string& assign, std::optional<int> depth,
                   std::optional<int> max_splits, const std::string& expect, Report& rep) {
  Input in = load(path, rep);
  if (in.file.kind != AlgebraKind::associative) throw UsageError("enumerate expects an associative algebra file");
  auto subs = parse_subs(assign);
  AlgebraFile f = substituted(in.file, subs);
  SolverOptions opt = default_solver_options();
  if (depth) opt.max_depth = *depth;
  if (max_splits) opt.max_splits = *max_splits;
  json& res = rep.results;
  res["assignment"] = subs_json(subs);
  res["options"] = {{"max_depth", opt.max_depth}, {"max_splits", opt.max_splits}};
  if (!is_associative(f.mul)) {
    res["error"] = "input algebra is not associative";
    rep.fail();
    return;
  }
  Enumeration e = enumerate_compatible(f.mul, opt);
  res["system"] = {{"dim", e.system.dim},
                   {"unknowns", e.system.unknowns.size()},
                   {"equations", e.system.equations.size()},
                   {"raw_equations", e.system.raw_count}};
  res["splits"] = e.result.splits;
  res["budget_exhausted"] = e.result.budget_exhausted;
  res["counts"] = {{"solved", e.count(BranchStatus::solved)},
                   {"infeasible", e.count(BranchStatus::infeasible)},
                   {"stuck", e.count(BranchStatus::stuck)}};
  json branches = json::array();
  std::size_t fam = 0;
  for (const Branch& b : e.result.branches) {
    json decisions = json::array(), sides = json::array(), free = json::array(), subs_out = json::object();
    for (const auto& d : b.decisions) decisions.push_back(d);
    for (const auto& s : b.side_conditions) sides.push_back(s.str());
    for (Var v : b.free_unknowns) free.push_back(unknown_name(v));
    for (const auto& [v, val] : b.substitutions) subs_out[unknown_name(v)] = val.str();
    json bj = {{"status", status_name(b.status)}, {"decisions", decisions}, {"depth", b.depth}};
    if (b.status == BranchStatus::solved) {
      bj["free_unknowns"] = free;
      bj["side_conditions"] = sides;
      bj["family"] = family_json(e.families.at(fam++));
    } else if (b.status == BranchStatus::stuck) {
      json remaining = json::array();
      for (const auto& p : b.remaining) remaining.push_back(p.str());
      bj["reason"] = b.reason;
      bj["remaining"] = remaining;
      bj["side_conditions"] = sides;
      bj["substitutions"] = subs_out;
    }
    if (b.certificate) bj["certificate"] = certificate_json(*b.certificate);
    branches.push_back(bj);
  }
  res["branches"] = branches;
  std::string outcome = e.count(BranchStatus::stuck) > 0 ? "inconclusive"
                        : e.families.empty()             ? "infeasible"
                                                         : "solved";
  res["outcome"] = outcome;
  if (outcome == "inconclusive") rep.inconclusive();
  if (!expect.empty()) {
    res["expected"] = expect;
    if (outcome != "inconclusive" && outcome != expect) rep.fail();
  }
}

// ---------------------------------------------------------------------------
// iso

MatP read_witness(const std::string& path, Report& rep) {
  std::string text = read_file(path);
  rep.inputs[path] = digest(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("witness")) throw FormatError(path + ": missing \"witness\"");
    j = j["witness"];
  }
  if (!j.is_array() || j.empty()) throw FormatError(path + ": witness must be a non-empty list of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  MatP t(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw FormatError(path + ": witness must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const json& x = row[static_cast<std::size_t>(c)];
      if (x.is_number_integer()) t(r, c) = Poly(Rational(x.get<long>()));
      else if (x.is_string()) t(r, c) = parse_poly(x.get<std::string>());
      else throw FormatError(path + ": witness entries must be strings or integers");
    }
  }
  return t;
}

struct IsoArgs {
  std::string a, b, assign, assign_b, witness, sqrt;
  bool search = false;
  int bound = 3;
};

void cmd_iso(const IsoArgs& args, Report& rep) {
  Input ia = load(args.a, rep);
  Input ib = load(args.b, rep);
  if (ia.file.kind != AlgebraKind::antidendriform || ib.file.kind != AlgebraKind::antidendriform)
    throw UsageError("iso expects two antidendriform algebra files");
  auto sa = parse_subs(args.assign);
  auto sb = args.assign_b.empty() ? sa : parse_subs(args.assign_b);
  AlgebraFile fa = substituted(ia.file, sa), fb = substituted(ib.file, sb);
  if (fa.dim() != fb.dim()) throw UsageError("the two algebras have different dimensions");
  json& res = rep.results;
  res["assignment_a"] = subs_json(sa);
  res["assignment_b"] = subs_json(sb);
  const bool symbolic = !variables_of(fa).empty() || !variables_of(fb).empty();

  if (!args.witness.empty()) {
    // the witness lives in the source's coordinates, so it takes the source's parameters
    MatP t = read_witness(args.witness, rep).unaryExpr([&](const Poly& p) { return p.substitute(sa); });
    res["mode"] = "witness";
    res["witness"] = matrix_json(t);
    if (t.rows() != fa.dim()) throw UsageError("witness size differs from the algebra dimension");
    try {
      WitnessVerdict v = verify_witness(fa.pair, fb.pair, t);
      res["verdict"] = {{"pass", v.pass}, {"rhd", v.rhd_ok}, {"lhd", v.lhd_ok}, {"det", v.det}, {"symbolic", symbolic}};
      if (!v.detail.empty()) res["verdict"]["detail"] = v.detail;
      if (!v.pass) rep.fail();
    } catch (const SingularMatrix& e) {
      res["verdict"] = {{"pass", false}, {"detail", e.what()}};
      rep.fail();
    }
    return;
  }

  if (symbolic) throw UsageError("fingerprints and search need instantiated parameters (use --assign / --assign-b)");
  AdPair<Rational> qa = instantiate(fa.pair, {}), qb = instantiate(fb.pair, {});
  if (!args.search) {
    res["mode"] = "fingerprint";
    Fingerprint a = fingerprint(qa), b = fingerprint(qb);
    res["fingerprint_a"] = fingerprint_json(a);
    res["fingerprint_b"] = fingerprint_json(b);
    auto diff = differing(a, b);
    res["separation"] = diff;
    if (!diff.empty()) {
      res["verdict"] = "separated";
      rep.fail();
    } else {
      res["verdict"] = "indistinguishable by fingerprints";
      rep.inconclusive();
    }
    return;
  }
  SearchOptions opt;
  opt.bound = args.bound;
  if (!args.sqrt.empty()) {
    opt.sqrt = Rational::from_string(args.sqrt);
    if (opt.sqrt->sqrt_exact()) throw UsageError("--sqrt needs a non-square radicand");
  }
  SearchResult r = search_witness(qa, qb, opt);
  res["mode"] = "search";
  res["bound"] = opt.bound;
  if (opt.sqrt) res["sqrt"] = opt.sqrt->str();
  res["fingerprint_a"] = fingerprint_json(r.source_fp);
  res["fingerprint_b"] = fingerprint_json(r.target_fp);
  res["separation"] = r.separation;
  res["nodes"] = r.nodes;
  res["node_limit_hit"] = r.node_limit_hit;
  res["verdict"] = search_status_name(r.status);
  if (r.witness) res["witness"] = matrix_json(*r.witness);
  if (r.witness_ext) res["witness"] = matrix_json(*r.witness_ext);
  if (r.status == SearchStatus::separated) rep.fail();
  if (r.status == SearchStatus::not_found) rep.inconclusive();
}

// ---------------------------------------------------------------------------
// analyze

const std::vector<int> kDefaultSamples{0, 1, -1, 2, 3};

json power_json(const PowerSeries& ps) {
  json j = {{"dims", ps.dims}, {"null_filiform", ps.null_filiform}};
  j["nilpotency_index"] = ps.nilpotency ? json(*ps.nilpotency) : json(nullptr);
  return j;
}

json analyze_at(const AlgebraFile& f, const Assignment& at, Report& rep) {
  json j = {{"assignment", assignment_json(at)}};
  if (f.kind == AlgebraKind::associative) {
    UnaryAlgebra<Rational> a = instantiate(f.mul, at);
    bool assoc = is_associative(a);
    j["associative"] = assoc;
    if (!assoc) rep.fail();
    j["center"] = basis_json(center_associative(a));
    j["power_series"] = power_json(power_series(a));
    return j;
  }
  AdPair<Rational> ad = instantiate(f.pair, at);
  bool ok = check_antidendriform(ad).pass();
  j["axioms"] = ok;
  if (!ok) rep.fail();
  UnaryAlgebra<Rational> sum = sum_algebra(ad);
  j["sum"] = table_json(sum.mul);
  j["sum_associative"] = is_associative(sum);
  j["center_sum"] = basis_json(center_associative(sum));
  j["center_ad"] = basis_json(center_ad(ad));
  j["left_annihilator"] = basis_json(left_annihilator(ad));
  j["right_annihilator"] = basis_json(right_annihilator(ad));
  j["power_series"] = power_json(power_series(sum));
  j["two_nilpotent"] = is_two_nilpotent(ad);
  j["fingerprint"] = fingerprint_json(fingerprint(ad));
  try {
    Quotient q = quotient_by_center(ad);
    json comp = json::array();
    for (int c : q.complement) comp.push_back("e" + std::to_string(c + 1));
    j["quotient_by_center"] = {{"ideal", basis_json(q.ideal)},
                               {"complement", comp},
                               {"rhd", table_json(q.pair.rhd)},
                               {"lhd", table_json(q.pair.lhd)}};
  } catch (const PreconditionFailed& e) {
    j["quotient_by_center"] = {{"precondition_failed", e.what()}};
  }
  return j;
}

void cmd_analyze(const std::string& path, const std::string& assign, Report& rep) {
  Input in = load(path, rep);
  Assignment at = assign.empty() ? Assignment{} : parse_assignment(assign);
  std::set<Var> vars = variables_of(in.file);
  std::vector<Var> missing;
  for (Var v : vars)
    if (!at.count(v)) missing.push_back(v);
  json points = json::array();
  if (missing.empty()) {
    points.push_back(analyze_at(in.file, at, rep));
  } else {
    // every missing parameter takes the same default sample value
    for (int s : kDefaultSamples) {
      Assignment p = at;
      for (Var v : missing) p[v] = Rational(s);
      points.push_back(analyze_at(in.file, p, rep));
    }
    json names = json::array();
    for (Var v : missing) names.push_back(var_name(v));
    rep.results["sampled_parameters"] = names;
  }
  rep.results["kind"] = in.file.kind == AlgebraKind::associative ? "associative" : "antidendriform";
  rep.results["points"] = points;
}

std::string command_echo(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"adkit: exact checks for anti-dendriform algebra structures", "adkit"};
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "human-readable report instead of JSON");
  app.fallthrough();

  std::string file, assign;
  auto* verify = app.add_subcommand("verify", "check the axioms of an algebra file");
  verify->add_option("file", file, "algebra file")->required();
  verify->add_option("--assign", assign, "parameter values, e.g. a=1/2,l=-1");

  auto* catalog = app.add_subcommand("catalog", "built-in classification tables");
  catalog->require_subcommand(1);
  auto* clist = catalog->add_subcommand("list", "list entries");
  std::vector<std::string> ids;
  auto* cverify = catalog->add_subcommand("verify", "verify entries symbolically");
  cverify->add_option("ids", ids, "entry ids (default: all)");
  std::string export_id, output;
  int n = 0;
  auto* cexport = catalog->add_subcommand("export", "write an entry as an algebra file");
  cexport->add_option("id", export_id, "entry id, mu0_<n>, or mu0 with --n")->required();
  cexport->add_option("--assign", assign, "parameter values");
  cexport->add_option("--n", n, "dimension for mu0");
  cexport->add_option("-o,--output", output, "output file (default: stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate compatible anti-dendriform structures");
  std::optional<int> depth, max_splits;
  std::string expect;
  enumerate->add_option("file", file, "associative algebra file")->required();
  enumerate->add_option("--assign", assign, "parameter values or expressions");
  enumerate->add_option("--depth", depth, "maximum splits along one branch (default 32)");
  enumerate->add_option("--max-splits", max_splits, "split budget for the whole tree (default 4096, env ADKIT_MAX_SPLITS)");
  enumerate->add_option("--expect", expect, "expected outcome")->check(CLI::IsMember({"infeasible", "solved"}));

  IsoArgs iso_args;
  auto* iso = app.add_subcommand("iso", "isomorphism evidence for two anti-dendriform algebras");
  iso->add_option("a", iso_args.a, "first algebra file")->required();
  iso->add_option("b", iso_args.b, "second algebra file")->required();
  iso->add_option("--assign", iso_args.assign, "parameters of the first file (and of the second by default)");
  iso->add_option("--assign-b", iso_args.assign_b, "parameters of the second file");
  auto* witness_opt = iso->add_option("--witness", iso_args.witness, "witness file: rows of coefficient strings");
  iso->add_flag("--search", iso_args.search, "bounded witness search")->excludes(witness_opt);
  iso->add_option("--bound", iso_args.bound, "numerator/denominator bound for the search (default 3)")
      ->check(CLI::Range(1, 20));
  iso->add_option("--sqrt", iso_args.sqrt, "also search over Q(sqrt d)");

  auto* analyze = app.add_subcommand("analyze", "structural invariants");
  analyze->add_option("file", file, "algebra file")->required();
  analyze->add_option("--assign", assign, "parameter values");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Report rep;
  try {
    if (verify->parsed()) {
      cmd_verify(file, assign, rep);
    } else if (clist->parsed()) {
      cmd_catalog_list(rep);
    } else if (cverify->parsed()) {
      cmd_catalog_verify(ids, rep);
    } else if (cexport->parsed()) {
      std::string text = catalog_export(export_id, n, assign);
      if (output.empty()) {
        out << text;
        return kPass;
      }
      std::ofstream f(output, std::ios::binary);
      if (!(f << text)) throw UsageError("cannot write " + output);
      rep.results["written"] = output;
      rep.results["digest"] = digest(text);
    } else if (enumerate->parsed()) {
      cmd_enumerate(file, assign, depth, max_splits, expect, rep);
    } else if (iso->parsed()) {
      cmd_iso(iso_args, rep);
    } else if (analyze->parsed()) {
      cmd_analyze(file, assign, rep);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const MissingAssignment& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  json report = {{"command", command_echo(args)}, {"inputs", rep.inputs}, {"results", rep.results}, {"status", rep.status}};
  if (plain) out << render_plain(report);
  else out << report.dump(2) << "\n";
  if (rep.status == "fail") return kFail;
  if (rep.status == "inconclusive") return kInconclusive;
  return kPass;
}

} // namespace adkit::cli
