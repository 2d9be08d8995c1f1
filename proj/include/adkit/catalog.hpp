#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adkit/algebra_io.hpp"
#include "adkit/identities.hpp"

namespace adkit {

/// A stated isomorphism source(params at source_at) ~ target(params at target_at).
/// The witness columns are the new basis vectors in old coordinates: the
/// source written in that basis has the target's table.
struct IsoNote {
  std::string text;
  std::string target;
  std::map<Var, Poly> source_at; // specialisation of the source parameters
  std::map<Var, Poly> target_at; // target parameters as functions of the source ones
  std::optional<MatP> witness;   // absent: stated without a printed witness
  std::vector<Poly> nonzero;     // the witness is valid where these do not vanish
};

struct CatalogEntry {
  std::string id;
  AlgebraKind kind = AlgebraKind::antidendriform;
  std::vector<Var> params;
  std::vector<Poly> nonzero; // domain: every listed polynomial is nonzero
  UnaryAlgebra<Poly> mul;    // associative entries
  AdPair<Poly> pair;         // anti-dendriform entries
  std::string associated_sum;
  /// Basis change taking the sum algebra to associated_sum when they are
  /// isomorphic rather than equal, valid where sum_witness_nonzero holds.
  std::optional<MatP> sum_witness;
  std::vector<Poly> sum_witness_nonzero;
  std::vector<IsoNote> iso_notes;
  bool classified = true; // false for auxiliary families outside the classification lists
  std::string remark;     // errata and provenance of corrected tables

  int dim() const { return kind == AlgebraKind::associative ? mul.dim() : pair.dim(); }
  std::string constraint_text() const;
  AlgebraFile file() const;
};

struct EntryVerdict {
  std::string id;
  bool axioms = false;    // associativity for associative entries
  std::optional<bool> sum_match; // anti-dendriform entries only
  std::string sum_detail;
  AxiomReport<Poly> report;        // anti-dendriform entries
  std::vector<Violation<Poly>> assoc_violations;
  bool pass() const { return axioms && sum_match.value_or(true); }
};

class Catalog {
public:
  static const Catalog& instance();

  /// Entries in lexicographic id order.
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& id) const;
  /// Throws std::out_of_range for unknown ids. Accepts "mu0_<n>" for the
  /// null-filiform generator.
  CatalogEntry at(const std::string& id) const;

  /// Symbolic tensors, or instantiated at `assign` (which must cover every
  /// parameter and satisfy the entry's constraints unless `check` is false).
  AlgebraFile get(const std::string& id, const std::optional<Assignment>& assign = std::nullopt,
                  bool check = true) const;

  EntryVerdict verify(const CatalogEntry& e) const;
  std::vector<EntryVerdict> verify_all() const;

private:
  Catalog();
  std::vector<CatalogEntry> entries_;
};

/// mu_n^0: e_i e_j = e_{i+j} for i + j <= n.
UnaryAlgebra<Poly> mu0(int n);

/// Throws ConstraintViolation / MissingAssignment.
void check_domain(const CatalogEntry& e, const Assignment& at);

} // namespace adkit
