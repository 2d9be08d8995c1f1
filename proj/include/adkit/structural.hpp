#pragma once

#include <optional>
#include <vector>

#include "adkit/structure.hpp"

namespace adkit {

// Rank-based structure of instantiated algebras. Subspaces are returned as
// n x d matrices whose columns are the RREF basis of the subspace (so equal
// subspaces give equal matrices).

/// {x : x.y = y.x = 0 for all y}
MatQ center_associative(const UnaryAlgebra<Rational>& alg);
MatQ center_associative(const UnaryAlgebra<Poly>& alg, const Assignment& at);

/// {x : x|>y = y|>x = x<|y = y<|x = 0 for all y}
MatQ center_ad(const AdPair<Rational>& ad);
MatQ center_ad(const AdPair<Poly>& ad, const Assignment& at);

/// {x : x|>A = x<|A = 0}
MatQ left_annihilator(const AdPair<Rational>& ad);
/// {x : A|>x = A<|x = 0}
MatQ right_annihilator(const AdPair<Rational>& ad);

/// Span of all products u o v with u in U, v in V (columns are spanning sets).
MatQ product_span(const StructureConstants<Rational>& sc, const MatQ& u, const MatQ& v);

struct PowerSeries {
  std::vector<int> dims;           // dim A^1, dim A^2, ... ending at 0 or where it stabilizes
  std::optional<int> nilpotency;   // first i with A^i = 0
  bool null_filiform = false;
};

/// A^1 = A, A^{i+1} = sum_{k=1..i} A^k A^{i+1-k}.
PowerSeries power_series(const UnaryAlgebra<Rational>& alg);
PowerSeries power_series(const UnaryAlgebra<Poly>& alg, const Assignment& at);

struct Quotient {
  AdPair<Rational> pair;
  MatQ ideal;                  // basis of the subspace factored out
  std::vector<int> complement; // 0-based standard basis vectors spanning the complement
};

/// Induced pair on A/I for a two-sided ideal I of both operations.
/// Throws PreconditionFailed when I is not such an ideal.
Quotient quotient_by_ideal(const AdPair<Rational>& ad, const MatQ& ideal);

/// A/Z(A); requires Z_As(sum) = Z_AD, otherwise throws PreconditionFailed.
Quotient quotient_by_center(const AdPair<Rational>& ad);
Quotient quotient_by_center(const AdPair<Poly>& ad, const Assignment& at);

} // namespace adkit
