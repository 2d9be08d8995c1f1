#pragma once

#include <array>
#include <vector>

#include "adkit/structure.hpp"

namespace adkit {

inline constexpr int kIdentityCount = 7;

/// Human-readable form of id1..id7 (1-based), ASCII only.
const char* identity_text(int id);

/// A basis triple (0-based) with a nonzero residual vector.
template <class S>
struct Violation {
  int i, j, k;
  Vec<S> residual;
};

/// The six triple products the identities are built from, on e_i, e_j, e_k:
///   a  = x|>(y|>z)      b = -(x.y)|>z     c = -x<|(y.z)     d = (x<|y)<|z
///   e1 = (x|>y)<|z      e2 = x|>(y<|z)
template <class S>
struct TripleTerms {
  Vec<S> a, b, c, d, e1, e2;
};

template <class S>
TripleTerms<S> triple_terms(const AdPair<S>& ad, const StructureConstants<S>& sum, int i, int j, int k) {
  TripleTerms<S> t;
  t.a = left_basis_product(ad.rhd, i, ad.rhd.basis_product(j, k));
  t.b = -right_basis_product(ad.rhd, sum.basis_product(i, j), k);
  t.c = -left_basis_product(ad.lhd, i, sum.basis_product(j, k));
  t.d = right_basis_product(ad.lhd, ad.lhd.basis_product(i, j), k);
  t.e1 = right_basis_product(ad.lhd, ad.rhd.basis_product(i, j), k);
  t.e2 = left_basis_product(ad.rhd, i, ad.lhd.basis_product(j, k));
  return t;
}

/// lhs - rhs of identity `id` (1..7).
template <class S>
Vec<S> identity_residual(const TripleTerms<S>& t, int id) {
  switch (id) {
  case 1: return t.e1 - t.e2;
  case 2: return t.a - t.b;
  case 3: return t.a - t.c;
  case 4: return t.a - t.d;
  case 5: return t.c - t.b; // (x.y)|>z - x<|(y.z) = -b + c
  case 6: return t.b - t.d;
  case 7: return t.c - t.d;
  default: throw std::out_of_range("identity id must be in 1..7");
  }
}

template <class S>
struct AxiomReport {
  int dim = 0;
  /// per_identity[id-1] lists every triple where id fails.
  std::array<std::vector<Violation<S>>, kIdentityCount> per_identity;
  bool eq2 = true; // x|>(y|>z) = -(x.y)|>z = -x<|(y.z) = (x<|y)<|z
  bool eq3 = true; // (x|>y)<|z = x|>(y<|z)

  bool pass() const { return eq2 && eq3; }
  bool identity_holds(int id) const { return per_identity.at(id - 1).empty(); }
};

template <class S>
AxiomReport<S> check_antidendriform(const AdPair<S>& ad) {
  AxiomReport<S> rep;
  const int n = rep.dim = ad.dim();
  StructureConstants<S> sum = ad.rhd + ad.lhd;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        TripleTerms<S> t = triple_terms(ad, sum, i, j, k);
        for (int id = 1; id <= kIdentityCount; ++id) {
          Vec<S> r = identity_residual(t, id);
          if (!is_zero_matrix(r)) rep.per_identity[id - 1].push_back({i, j, k, std::move(r)});
        }
      }
  rep.eq3 = rep.identity_holds(1);
  rep.eq2 = rep.identity_holds(2) && rep.identity_holds(3) && rep.identity_holds(4);
  return rep;
}

/// All triples with (e_i e_j) e_k != e_i (e_j e_k); empty means associative.
template <class S>
std::vector<Violation<S>> associativity_violations(const UnaryAlgebra<S>& alg) {
  std::vector<Violation<S>> out;
  const auto& m = alg.mul;
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec<S> r = right_basis_product(m, m.basis_product(i, j), k) - left_basis_product(m, i, m.basis_product(j, k));
        if (!is_zero_matrix(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

template <class S>
bool is_associative(const UnaryAlgebra<S>& alg) {
  return associativity_violations(alg).empty();
}

/// First nonvanishing triple product among the sixteen (x*y)*z, x*(y*z), or
/// nothing when the pair is 2-nilpotent.
struct TwoNilpotentWitness {
  int i, j, k;
  bool left_bracketed; // (x*y)*z when true
  bool inner_rhd, outer_rhd;
};

template <class S>
std::optional<TwoNilpotentWitness> two_nilpotent_violation(const AdPair<S>& ad) {
  const int n = ad.dim();
  const StructureConstants<S>* ops[2] = {&ad.rhd, &ad.lhd};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int inner = 0; inner < 2; ++inner)
          for (int outer = 0; outer < 2; ++outer) {
            Vec<S> l = right_basis_product(*ops[outer], ops[inner]->basis_product(i, j), k);
            if (!is_zero_matrix(l)) return TwoNilpotentWitness{i, j, k, true, inner == 0, outer == 0};
            Vec<S> r = left_basis_product(*ops[outer], i, ops[inner]->basis_product(j, k));
            if (!is_zero_matrix(r)) return TwoNilpotentWitness{i, j, k, false, inner == 0, outer == 0};
          }
  return std::nullopt;
}

template <class S>
bool is_two_nilpotent(const AdPair<S>& ad) {
  return !two_nilpotent_violation(ad).has_value();
}

} // namespace adkit
