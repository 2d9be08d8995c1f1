#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "adkit/structure.hpp"

namespace adkit {

/// Malformed algebra file (bad JSON, bad index, bad coefficient, ...).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class AlgebraKind { associative, antidendriform };

/// Contents of one algebra file. Exactly one of `mul` / `pair` is meaningful,
/// selected by `kind`.
struct AlgebraFile {
  AlgebraKind kind = AlgebraKind::antidendriform;
  std::vector<Var> params;
  UnaryAlgebra<Poly> mul;
  AdPair<Poly> pair;

  int dim() const { return kind == AlgebraKind::associative ? mul.dim() : pair.dim(); }
  static AlgebraFile of(const UnaryAlgebra<Poly>& a, std::vector<Var> params = {});
  static AlgebraFile of(const AdPair<Poly>& ad, std::vector<Var> params = {});
};

AlgebraFile parse_algebra(std::string_view text);
AlgebraFile read_algebra_file(const std::filesystem::path& path);

/// Canonical JSON form: sorted keys, entries in (i,j,k) order, zero entries
/// omitted, 1-based indices. `params` lists the declared parameters plus any
/// occurring ones.
nlohmann::json to_json(const AlgebraFile& f);
std::string dump_algebra(const AlgebraFile& f);

/// Entry list [[i,j,k,"coeff"], ...] for one tensor.
nlohmann::json tensor_to_json(const StructureConstants<Poly>& sc);

} // namespace adkit
