#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adkit/identities.hpp"
#include "adkit/ratfunc.hpp"

namespace adkit {

/// Where an equation came from: coordinate `coord` of identity `identity`
/// on the basis triple (i,j,k). All indices 0-based; identity is 1..7.
/// identity == 0 marks an equation introduced by a case split.
struct Provenance {
  int identity = 0;
  int i = 0, j = 0, k = 0, coord = 0;
  std::string str() const;
};

struct ConstraintSystem {
  int dim = 0;
  UnaryAlgebra<Poly> assoc;
  std::vector<Var> unknowns; // r(i,j,k) in lexicographic (i,j,k) order
  std::vector<Poly> equations;
  std::vector<Provenance> provenance; // parallel to equations
  int raw_count = 0;                  // before deduplication
};

/// Throws PreconditionFailed when the input is not associative.
ConstraintSystem generate_constraints(const UnaryAlgebra<Poly>& assoc);

/// One mechanical step applied to an equation: substitute var := num/den and
/// clear the denominator (multiply by den^k), exactly divide by a factor
/// asserted nonzero on the branch, or replace c*q^2 by q.
struct Step {
  enum Kind { substitute, divide, square_root } kind = substitute;
  Var var = 0;
  Poly num, den{1};
  Poly factor;
  Poly apply(const Poly& p) const;
};

struct Certificate {
  enum Kind { nonzero_constant, side_condition_vanishes } kind = nonzero_constant;
  /// Original equation index, or -1 when the start is a branch assumption.
  int origin = -1;
  Provenance provenance;
  Poly start;
  std::vector<Step> steps;
  /// Re-applies the steps; true iff they reproduce the recorded contradiction
  /// (a nonzero constant, or a vanishing side condition).
  bool replay() const;
  /// Intermediate results after each step (same length as steps).
  std::vector<Poly> trace() const;
};

enum class BranchStatus { solved, infeasible, stuck };
const char* status_name(BranchStatus s);

struct Branch {
  BranchStatus status = BranchStatus::stuck;
  std::vector<std::string> decisions;   // case-split choices along the path
  std::map<Var, RatFunc> substitutions; // eliminated unknown -> value in free unknowns and parameters
  std::vector<Poly> remaining;          // nonempty only for stuck branches
  std::vector<Poly> side_conditions;    // asserted != 0
  std::optional<Certificate> certificate;
  std::string reason; // for stuck branches
  int depth = 0;
  std::vector<Var> free_unknowns;
};

struct SolverOptions {
  int max_depth = 32;      // splits along one branch
  int max_splits = 4096;   // splits in the whole tree
};

/// Default options, with ADKIT_MAX_SPLITS (if set) overriding max_splits.
SolverOptions default_solver_options();

struct EliminationResult {
  std::vector<Branch> branches;
  int splits = 0;
  bool budget_exhausted = false;
};

EliminationResult eliminate(const ConstraintSystem& sys, const SolverOptions& opt = {});

/// A solved branch as a parametric pair: free unknowns renamed p1, p2, ...
struct Family {
  AdPair<RatFunc> pair;
  std::vector<Var> params;            // the fresh p_k, in order
  std::map<Var, Var> renamed;         // unknown -> p_k
  std::vector<Poly> side_conditions;  // in the renamed variables
  std::vector<std::string> decisions;
  /// Polynomial tables when no entry has a denominator.
  std::optional<AdPair<Poly>> polynomial() const;
};

struct Enumeration {
  ConstraintSystem system;
  EliminationResult result;
  std::vector<Family> families; // one per solved branch, in branch order

  int count(BranchStatus s) const;
  bool infeasible() const { return families.empty() && count(BranchStatus::stuck) == 0; }
};

Enumeration enumerate_compatible(const UnaryAlgebra<Poly>& assoc, const SolverOptions& opt = {});

Family family_of(const ConstraintSystem& sys, const Branch& b);

/// Concrete pair at a point; `at` covers the family parameters (and any
/// catalog parameters). Throws ConstraintViolation if a side condition
/// vanishes, MissingAssignment if a value is missing.
AdPair<Rational> sample_branch(const Family& f, const Assignment& at);

/// True iff the unknown values `point` (one per unknown) satisfy the branch's
/// substitutions and side conditions.
bool branch_contains(const Branch& b, const Assignment& point);

/// p with each variable in `values` replaced by its rational function.
RatFunc substitute_values(const Poly& p, const std::map<Var, RatFunc>& values);

/// Name of a solver unknown, 1-based: r<i>_<j>_<k>.
std::string unknown_name(Var v);

} // namespace adkit
