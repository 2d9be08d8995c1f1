#include "adkit/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "adkit/poly_parse.hpp"

namespace adkit {
namespace {

using nlohmann::json;

std::set<Var> occurring(const StructureConstants<Poly>& sc) {
  std::set<Var> out;
  const auto& m = sc.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Var v : m(r, c).variables()) out.insert(v);
  return out;
}

StructureConstants<Poly> read_tensor(const json& entries, int n, const std::string& key, const std::set<Var>& declared) {
  if (!entries.is_array()) throw FormatError("'" + key + "' must be an array of [i,j,k,\"coeff\"] entries");
  StructureConstants<Poly> sc(n);
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const json& item = entries[e];
    std::string where = key + "[" + std::to_string(e) + "]";
    if (!item.is_array() || item.size() != 4) throw FormatError(where + ": expected [i,j,k,\"coeff\"]");
    int idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!item[t].is_number_integer()) throw FormatError(where + ": index must be an integer");
      long v = item[t].get<long>();
      if (v < 1 || v > n) throw FormatError(where + ": index " + std::to_string(v) + " outside 1.." + std::to_string(n));
      idx[t] = static_cast<int>(v) - 1;
    }
    if (!seen.insert({idx[0], idx[1], idx[2]}).second) throw FormatError(where + ": duplicate entry");
    Poly coeff;
    if (item[3].is_string()) {
      try {
        coeff = parse_poly(item[3].get<std::string>());
      } catch (const ParseError& pe) {
        throw FormatError(where + ": " + pe.what());
      }
    } else if (item[3].is_number_integer()) {
      coeff = Poly(Rational(mpz_class(std::to_string(item[3].get<long long>()))));
    } else {
      throw FormatError(where + ": coefficient must be a string (or an integer)");
    }
    for (Var v : coeff.variables())
      if (!declared.count(v)) throw FormatError(where + ": parameter '" + var_name(v) + "' is not declared in \"params\"");
    sc(idx[0], idx[1], idx[2]) = coeff;
  }
  return sc;
}

json params_json(const std::vector<Var>& declared, const std::set<Var>& used) {
  std::set<Var> all(declared.begin(), declared.end());
  all.insert(used.begin(), used.end());
  json out = json::array();
  for (Var v : all) out.push_back(var_name(v));
  return out;
}

} // namespace

AlgebraFile AlgebraFile::of(const UnaryAlgebra<Poly>& a, std::vector<Var> params) {
  AlgebraFile f;
  f.kind = AlgebraKind::associative;
  f.mul = a;
  f.params = std::move(params);
  return f;
}

AlgebraFile AlgebraFile::of(const AdPair<Poly>& ad, std::vector<Var> params) {
  AlgebraFile f;
  f.kind = AlgebraKind::antidendriform;
  f.pair = ad;
  f.params = std::move(params);
  return f;
}

AlgebraFile parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("algebra file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    static const std::set<std::string> known{"dim", "params", "kind", "mul", "rhd", "lhd", "label"};
    if (!known.count(key)) throw FormatError("unknown key '" + key + "'");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw FormatError("missing integer \"dim\"");
  long n = doc["dim"].get<long>();
  if (n < 1 || n > kMaxUnknownDim) throw FormatError("\"dim\" must be between 1 and " + std::to_string(kMaxUnknownDim));

  AlgebraFile f;
  std::set<Var> declared;
  if (doc.contains("params")) {
    if (!doc["params"].is_array()) throw FormatError("\"params\" must be an array of names");
    for (const auto& p : doc["params"]) {
      if (!p.is_string()) throw FormatError("\"params\" must be an array of names");
      auto v = param_from_name(p.get<std::string>());
      if (!v) throw FormatError("unknown parameter name '" + p.get<std::string>() + "'");
      if (!declared.insert(*v).second) throw FormatError("parameter '" + p.get<std::string>() + "' declared twice");
      f.params.push_back(*v);
    }
  }
  std::string label = doc.value("label", std::string());

  std::string kind = doc.value("kind", std::string());
  const int dim = static_cast<int>(n);
  if (kind == "associative") {
    if (doc.contains("rhd") || doc.contains("lhd")) throw FormatError("associative files use \"mul\" only");
    f.kind = AlgebraKind::associative;
    f.mul.mul = read_tensor(doc.value("mul", json::array()), dim, "mul", declared);
    f.mul.label = label;
  } else if (kind == "antidendriform") {
    if (doc.contains("mul")) throw FormatError("antidendriform files use \"rhd\" and \"lhd\", not \"mul\"");
    f.kind = AlgebraKind::antidendriform;
    f.pair = AdPair<Poly>(read_tensor(doc.value("rhd", json::array()), dim, "rhd", declared),
                          read_tensor(doc.value("lhd", json::array()), dim, "lhd", declared), label);
  } else {
    throw FormatError("\"kind\" must be \"associative\" or \"antidendriform\"");
  }
  return f;
}

AlgebraFile read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

json tensor_to_json(const StructureConstants<Poly>& sc) {
  json out = json::array();
  const int n = sc.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!sc(i, j, k).is_zero()) out.push_back(json::array({i + 1, j + 1, k + 1, sc(i, j, k).str()}));
  return out;
}

json to_json(const AlgebraFile& f) {
  json out;
  out["dim"] = f.dim();
  if (f.kind == AlgebraKind::associative) {
    out["kind"] = "associative";
    out["mul"] = tensor_to_json(f.mul.mul);
    out["params"] = params_json(f.params, occurring(f.mul.mul));
    if (!f.mul.label.empty()) out["label"] = f.mul.label;
  } else {
    out["kind"] = "antidendriform";
    out["rhd"] = tensor_to_json(f.pair.rhd);
    out["lhd"] = tensor_to_json(f.pair.lhd);
    std::set<Var> used = occurring(f.pair.rhd);
    used.merge(occurring(f.pair.lhd));
    out["params"] = params_json(f.params, used);
    if (!f.pair.label.empty()) out["label"] = f.pair.label;
  }
  return out;
}

std::string dump_algebra(const AlgebraFile& f) { return to_json(f).dump(2) + "\n"; }

} // namespace adkit
