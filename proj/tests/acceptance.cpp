// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "adkit/catalog.hpp"
#include "adkit/iso.hpp"
#include "adkit/solver.hpp"
#include "adkit/structural.hpp"

using namespace adkit;

namespace {

// Time limits in seconds.
constexpr double kCatalogLimit = 5.0;
constexpr double kMu4Limit = 60.0;
constexpr double kIdempotentLimit = 10.0; // per algebra
constexpr double kMu3Limit = 10.0;
constexpr double kIsoLimit = 10.0;
constexpr double kCrossCheckLimit = 10.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  void within(double seconds, double limit, const std::string& what) {
    detail << " " << what << "=" << seconds << "s";
    require(seconds < limit, what + " over " + std::to_string(limit) + "s");
  }
};

Outcome catalog_soundness() {
  Outcome o;
  auto t0 = Clock::now();
  int pass = 0, total = 0;
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    ++total;
    EntryVerdict v = Catalog::instance().verify(e);
    if (v.pass()) ++pass;
    else o.require(false, e.id);
  }
  o.detail << " " << pass << "/" << total << " entries";
  o.within(since(t0), kCatalogLimit, "time");
  return o;
}

Outcome mu4_nonexistence() {
  Outcome o;
  auto t0 = Clock::now();
  Enumeration e = enumerate_compatible(mu0(4), default_solver_options());
  o.require(e.infeasible(), "every branch infeasible");
  o.require(!e.result.budget_exhausted, "within the default budget");
  int replaying = 0;
  for (const Branch& b : e.result.branches)
    if (b.certificate && b.certificate->kind == Certificate::nonzero_constant && b.certificate->replay()) ++replaying;
  o.require(replaying > 0, "a nonzero-constant certificate replays");
  o.detail << " branches=" << e.result.branches.size() << " certificates=" << replaying;
  o.within(since(t0), kMu4Limit, "time");
  return o;
}

Outcome idempotent_obstruction() {
  Outcome o;
  for (const char* id : {"As2_2", "As2_4", "As2_5", "As2_6", "As2_7"}) {
    auto t0 = Clock::now();
    Enumeration e = enumerate_compatible(Catalog::instance().at(id).mul);
    o.require(e.infeasible(), std::string(id) + " infeasible");
    o.within(since(t0), kIdempotentLimit, id);
  }
  return o;
}

Outcome mu3_family() {
  Outcome o;
  auto t0 = Clock::now();
  Enumeration e = enumerate_compatible(mu0(3));
  o.require(e.families.size() == 1, "exactly one solved branch");
  o.require(e.count(BranchStatus::stuck) == 0, "no stuck branch");
  if (e.families.size() == 1) {
    const Family& f = e.families.front();
    o.require(f.params.size() == 1, "exactly one free parameter");
    if (f.params.size() == 1) {
      const Var p = f.params.front();
      AdPair<Rational> ad1 = instantiate(Catalog::instance().at("AD3_1").pair, {});
      AdPair<Rational> ad2 = instantiate(Catalog::instance().at("AD3_2").pair, {});
      MatQ id = MatQ::Identity(3, 3);
      o.require(verify_witness(sample_branch(f, {{p, Rational(0)}}), ad1, id).pass, "sample at 0 is AD3_1");
      o.require(verify_witness(sample_branch(f, {{p, Rational(1)}}), ad2, id).pass, "sample at 1 is AD3_2");
      // e'_i = t^i e_i rescales the parameter to 1
      for (const Rational& t : {Rational(2), Rational(-1), Rational(1, 2), Rational(-3)}) {
        MatQ d = MatQ::Zero(3, 3);
        d(0, 0) = t;
        d(1, 1) = t * t;
        d(2, 2) = t * t * t;
        o.require(verify_witness(sample_branch(f, {{p, t}}), ad2, d).pass, "scaling witness at " + t.str());
      }
    }
  }
  o.within(since(t0), kMu3Limit, "time");
  return o;
}

Outcome stated_isomorphisms() {
  Outcome o;
  auto t0 = Clock::now();
  const Catalog& cat = Catalog::instance();
  for (const char* id : {"AD3_8", "AD3_15"}) {
    const CatalogEntry& e = cat.at(id);
    int checked = 0;
    for (const IsoNote& note : e.iso_notes) {
      if (!note.witness) continue;
      WitnessVerdict v = verify_note(e, note);
      o.require(v.pass, note.text + ": " + v.detail);
      ++checked;
    }
    o.require(checked > 0, std::string(id) + " has a witnessed note");
  }
  AdPair<Rational> a21 = instantiate(cat.get("AD3_21", Assignment{{kAlpha, Rational(-1)}}, false).pair, {});
  AdPair<Rational> a20 = instantiate(cat.get("AD3_20", Assignment{{kAlpha, Rational(0)}}).pair, {});
  SearchOptions opt;
  opt.bound = 3;
  SearchResult r = search_witness(a21, a20, opt);
  o.require(r.status == SearchStatus::found && r.witness, "AD3_21(-1) ~ AD3_20(0) found");
  if (r.witness) o.require(verify_witness(a21, a20, *r.witness).pass, "found witness verifies");
  o.detail << " search nodes=" << r.nodes;
  o.within(since(t0), kIsoLimit, "time");
  return o;
}

Outcome property_suites() {
  Outcome o;
  struct Suite {
    const char* binary;
    const char* cases;
  };
  const Suite suites[] = {
      {ADKIT_TEST_ALGEBRA_CORE, "axiom equivalence*,(R,-R)*,sum algebras across the catalog*"},
      {ADKIT_TEST_ISO, "fingerprints are basis invariant"},
      {ADKIT_TEST_SOLVER, "round trip*,grid oracle*"},
  };
  for (const Suite& s : suites) {
    std::string cmd = std::string("\"") + s.binary + "\" --test-case=\"" + s.cases + "\" --minimal > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    o.require(rc == 0, std::string(s.cases));
    o.detail << " " << s.cases << (rc == 0 ? ": ok;" : ": failed;");
  }
  return o;
}

Outcome two_dim_cross_check() {
  Outcome o;
  auto t0 = Clock::now();
  const Catalog& cat = Catalog::instance();

  Enumeration ab = enumerate_compatible(cat.at("As2_1").mul);
  o.require(!ab.families.empty() && ab.count(BranchStatus::stuck) == 0, "As2_1 closes with solutions");
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(-4, 4);
  int samples = 0;
  for (const Family& f : ab.families) {
    o.require(f.pair.lhd == f.pair.rhd.map([](const RatFunc& x) { return -x; }), "As2_1: lhd = -rhd");
    for (int s = 0; s < 20; ++s) {
      Assignment at;
      for (Var p : f.params) at[p] = Rational(d(rng));
      bool ok = true;
      for (const Poly& c : f.side_conditions) ok = ok && !c.evaluate(at).is_zero();
      if (!ok) continue;
      AdPair<Rational> pr = sample_branch(f, at);
      o.require(is_two_nilpotent(pr) && check_antidendriform(pr).pass(), "As2_1 sample is 2-nilpotent");
      ++samples;
    }
  }
  o.detail << " As2_1 samples=" << samples;

  Enumeration e3 = enumerate_compatible(cat.at("As2_3").mul);
  o.require(e3.count(BranchStatus::stuck) == 0 && !e3.families.empty(), "As2_3 closes with solutions");
  AdPair<Rational> ad22 = instantiate(cat.at("AD2_2").pair, {});
  bool hit22 = false;
  int matched = 0, tried = 0;
  for (const Family& f : e3.families) {
    if (f.params.size() != 1) {
      o.require(false, "As2_3 family with one parameter");
      continue;
    }
    for (int v = -4; v <= 4; ++v) {
      Assignment at{{f.params[0], Rational(v)}};
      bool ok = true;
      for (const Poly& c : f.side_conditions) ok = ok && !c.evaluate(at).is_zero();
      if (!ok) continue;
      ++tried;
      AdPair<Rational> s = sample_branch(f, at);
      bool match = false;
      if (verify_witness(ad22, s, MatQ(MatQ::Identity(2, 2))).pass) {
        match = hit22 = true;
      } else {
        // AD2_3(l) in the basis e1, (1+l) e2 has sum As2_3, with e1|>e1 = e2/(1+l) and
        // e1<|e1 = l e2/(1+l); l is read off the sample and the witness checked
        const Rational& r = s.rhd(0, 0, 1);
        if (!r.is_zero()) {
          Rational l = s.lhd(0, 0, 1) / r;
          if (l != Rational(-1)) {
            AdPair<Rational> ad23 = instantiate(cat.get("AD2_3", Assignment{{kLambda, l}}).pair, {});
            MatQ t = MatQ::Identity(2, 2);
            t(1, 1) = Rational(1) + l;
            match = verify_witness(ad23, s, t).pass;
          }
        }
      }
      matched += match;
    }
  }
  o.require(hit22, "AD2_2 is a sample");
  o.require(tried > 0 && matched == tried, "every As2_3 sample matches AD2_2 or AD2_3(l)");
  o.detail << " As2_3 samples matched=" << matched << "/" << tried;
  o.within(since(t0), kCrossCheckLimit, "time");
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 catalog soundness", catalog_soundness},
      {"2 mu0(4) nonexistence", mu4_nonexistence},
      {"3 idempotent obstruction", idempotent_obstruction},
      {"4 mu0(3) one-parameter family", mu3_family},
      {"5 stated isomorphisms", stated_isomorphisms},
      {"6 property suites", property_suites},
      {"7 two-dimensional cross-check", two_dim_cross_check},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ":" << o.detail.str() << std::endl;
  }
  std::cout << (7 - failures) << "/7 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
