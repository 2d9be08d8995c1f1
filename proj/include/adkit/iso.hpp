#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adkit/catalog.hpp"
#include "adkit/linalg.hpp"
#include "adkit/quad_ext.hpp"

namespace adkit {

// Witness convention: column i of T is the new basis vector e'_i in the
// source's coordinates; T is a witness when the source written in the new
// basis has the target's tables, i.e. M_src (T (x) T) = T M_tgt for both
// operations.

struct WitnessVerdict {
  bool pass = false;
  bool rhd_ok = false;
  bool lhd_ok = false;
  std::string det; // determinant as text
  std::string detail;
};

/// Throws DimensionMismatch, SingularMatrix.
template <class S>
WitnessVerdict verify_witness(const AdPair<S>& source, const AdPair<S>& target, const Mat<S>& t) {
  if (source.dim() != target.dim() || t.rows() != source.dim() || t.cols() != source.dim())
    throw DimensionMismatch("dimensions of source, target and witness disagree");
  S d = det(t);
  if (is_zero(d)) throw SingularMatrix("witness is singular");
  WitnessVerdict v;
  v.det = d.str();
  v.rhd_ok = transports_to(source.rhd, target.rhd, t);
  v.lhd_ok = transports_to(source.lhd, target.lhd, t);
  v.pass = v.rhd_ok && v.lhd_ok;
  if (!v.pass) v.detail = !v.rhd_ok ? "|> is not transported" : "<| is not transported";
  return v;
}

/// Parametric witness: the check runs in the polynomial ring, so it holds
/// identically in the parameters. The determinant must be a nonzero
/// polynomial; `nonzero` lists the conditions under which it is claimed
/// invertible, and the verdict notes whether det is a product of them.
WitnessVerdict verify_witness(const AdPair<Poly>& source, const AdPair<Poly>& target, const MatP& t,
                              const std::vector<Poly>& nonzero = {});

/// Checks a catalog iso note of `entry` symbolically. Notes without a
/// witness are evaluated by search at `at` (the source parameters) instead;
/// see search_witness.
WitnessVerdict verify_note(const CatalogEntry& entry, const IsoNote& note);

struct Fingerprint {
  int dim = 0;
  int rhd_span = 0, lhd_span = 0, sum_span = 0;
  std::vector<int> power_dims; // of the sum algebra
  int center_ad = 0, center_sum = 0;
  int left_annihilator = 0, right_annihilator = 0;
  bool two_nilpotent = false;
  bool sum_commutative = false;
  int diff_square_span = 0; // dim span{x|>x - x<|x}

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Component names, in the order of differing()/str().
const std::vector<std::string>& fingerprint_components();
std::vector<std::string> differing(const Fingerprint& a, const Fingerprint& b);
/// "name=value" pairs in component order.
std::vector<std::pair<std::string, std::string>> fingerprint_fields(const Fingerprint& f);

Fingerprint fingerprint(const AdPair<Rational>& ad);
/// Throws MissingAssignment.
Fingerprint fingerprint(const AdPair<Poly>& ad, const Assignment& at);

enum class SearchStatus { found, separated, not_found };
const char* search_status_name(SearchStatus s);

struct SearchOptions {
  int bound = 3;
  std::optional<Rational> sqrt; // also try entries q*sqrt(d)
  long node_limit = 500000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<MatQ> witness;
  std::optional<Mat<QuadExt>> witness_ext; // found only over Q(sqrt d)
  std::vector<std::string> separation;     // differing fingerprint components
  Fingerprint source_fp, target_fp;
  long nodes = 0;
  bool node_limit_hit = false;
};

/// Candidate entries p/q with |p|, q <= bound, in canonical order (0 first).
std::vector<Rational> search_values(int bound);

/// Bounded search for a rational witness, then over Q(sqrt d) if requested.
/// Compares fingerprints first and stops with a separation when they differ.
/// A returned witness has passed verify_witness. Not-found proves nothing.
SearchResult search_witness(const AdPair<Rational>& source, const AdPair<Rational>& target,
                            const SearchOptions& opt = {});

} // namespace adkit
