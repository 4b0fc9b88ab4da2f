#include <random>

#include "doctest.h"
#include "fko/tc0frege.hpp"
#include "helpers.hpp"
#include "proof_library.hpp"

using namespace fko;
using testing_support::bits;

namespace {

TcFormula f(const char* text) { return parse_formula(text); }

Sequent goal_of(const TcProof& p) { return p.steps.back().sequent; }

// Random variable-free formula with at most `depth` levels.
TcFormula random_constant(std::mt19937_64& rng, int depth) {
  const auto r = rng() % 6;
  if (depth == 0 || r == 0) return rng() % 2 ? TcFormula::top() : TcFormula::bot();
  if (r == 1) return TcFormula::neg(random_constant(rng, depth - 1));
  const std::size_t n = rng() % 4;
  std::vector<TcFormula> kids;
  for (std::size_t i = 0; i < n; ++i) kids.push_back(random_constant(rng, depth - 1));
  return TcFormula::th(static_cast<std::uint32_t>(rng() % (n + 2)), std::move(kids));
}

// Reference threshold semantics, independent of eval().
bool ref_eval(const TcFormula& g) {
  switch (g.kind) {
    case TcFormula::Kind::kTrue: return true;
    case TcFormula::Kind::kFalse: return false;
    case TcFormula::Kind::kNot: return !ref_eval(g.children[0]);
    case TcFormula::Kind::kTh: {
      std::uint32_t count = 0;
      for (const auto& c : g.children) count += ref_eval(c) ? 1 : 0;
      return count >= g.index;
    }
    default: throw std::logic_error("variable in constant formula");
  }
}

}  // namespace

TEST_SUITE("tc0frege") {

TEST_CASE("formula parsing and printing") {
  const TcFormula g = f(" Th2( p1 , ~p12, T,F ) ");
  CHECK(g.kind == TcFormula::Kind::kTh);
  CHECK(g.index == 2);
  CHECK(g.children.size() == 4);
  CHECK(to_string(g) == "Th2(p1,~p12,T,F)");
  CHECK(f(to_string(g).c_str()) == g);
  CHECK(f("Th0()") == TcFormula::th(0, {}));
  CHECK(size(g) == 2);
  CHECK(depth(g) == 2);
  CHECK(size(f("p3")) == 0);
  CHECK(depth(f("~~p1")) == 2);
  CHECK(max_variable(g) == 12);
  CHECK(has_variables(g));
  CHECK_FALSE(has_variables(f("Th1(T,~F)")));
  for (const char* bad : {"", "p", "p0", "Th(p1)", "Th1(p1", "~", "p1 p2", "X", "Th1(p1,)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_formula(bad), TcParseError);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval(f("Th2(T,F,T)"), Assignment{}));
  CHECK(eval(f("Th0()"), Assignment{}));
  CHECK(eval(f("Th0(F,F)"), Assignment{}));
  for (std::uint64_t a = 0; a < 8; ++a) CHECK_FALSE(eval(f("Th4(p1,p2,p3)"), Assignment::from_mask(a, 3)));
  CHECK(eval(f("Th2(p1,~p2,p3)"), bits({1, 0, 0})));
  CHECK_FALSE(eval(f("Th2(p1,p2,p3)"), bits({1, 0, 0})));
  CHECK_THROWS_AS(eval(f("p4"), bits({1, 0, 0})), std::out_of_range);

  const Sequent s{{f("p1")}, {f("p2")}};
  CHECK(eval(s, bits({0, 0})));
  CHECK_FALSE(eval(s, bits({1, 0})));
  CHECK_FALSE(eval(Sequent{}, Assignment{}));
  CHECK(to_string(s) == "p1 --> p2");
  CHECK(to_string(Sequent{{}, {f("T")}}) == "--> T");
}

TEST_CASE("rule names") {
  for (Rule r : kAllRules) CHECK(parse_rule(to_string(r)) == r);
  CHECK_THROWS_AS(parse_rule("modus-ponens"), TcParseError);
}

TEST_CASE("check_proof examples") {
  CHECK(check_proof(parse_proof("1: axiom() |- p1 --> p1\n")).ok);

  const std::string em =
      "1: axiom() |- p1 --> p1\n"
      "2: not-right(1) |- --> ~p1, p1\n"
      "3: exchange-right(2) |- --> p1, ~p1\n"
      "4: one-right(3) |- --> Th1(p1,~p1)\n";
  const TcProof p = parse_proof(em);
  CHECK(check_proof(p).ok);
  CHECK(proves(p, f("Th1(p1,~p1)")));
  CHECK_FALSE(proves(p, f("Th1(~p1,p1)")));

  TcProof relabeled = p;
  relabeled.steps[1].rule = Rule::kCut;
  const ProofCheck c = check_proof(relabeled);
  CHECK_FALSE(c.ok);
  CHECK(c.step == 1);
}

TEST_CASE("structural errors") {
  CHECK_FALSE(check_proof(TcProof{}).ok);
  CHECK_FALSE(check_proof(parse_proof("1: not-right(2) |- --> ~p1, p1\n2: axiom() |- p1 --> p1\n")).ok);
  CHECK_FALSE(check_proof(parse_proof("1: axiom() |- p1 --> p1\n1: axiom() |- p2 --> p2\n")).ok);
  CHECK_FALSE(check_proof(parse_proof("1: axiom() |- p1 --> p2\n")).ok);
  CHECK_FALSE(check_proof(parse_proof("1: axiom() |- Th2(p1,p2) -->\n")).ok);
  CHECK(check_proof(parse_proof("1: axiom() |- Th3(p1,p2) -->\n")).ok);
  CHECK(check_proof(parse_proof("# comment\n\n1: axiom() |- --> T\n")).ok);
  CHECK(check_proof(parse_proof("1: axiom() |- --> Th0(p1,p2)\n")).ok);
  // th rules need i >= 1 and at least one argument
  CHECK_FALSE(check_proof(parse_proof("1: axiom() |- --> T\n2: th-right(1,1) |- --> Th0()\n")).ok);
  CHECK_THROWS_AS(parse_proof("1 axiom() |- p1 --> p1"), TcParseError);
  CHECK_THROWS_AS(parse_proof("1: axiom() |- p1 -> p1"), TcParseError);
  CHECK_THROWS_AS(parse_proof("x: axiom() |- p1 --> p1"), TcParseError);
  CHECK_THROWS_AS(parse_proof("1: magic() |- p1 --> p1"), TcParseError);
}

TEST_CASE("goal check") {
  const TcProof p = parse_proof("1: axiom() |- p1 --> p1\n");
  CHECK(check_proof(p, Sequent{{f("p1")}, {f("p1")}}).ok);
  CHECK_FALSE(check_proof(p, Sequent{{}, {f("p1")}}).ok);
}

TEST_CASE("library proofs are valid, sound and print back") {
  for (const auto& e : proof_library::all()) {
    CAPTURE(e.name);
    const TcProof p = parse_proof(e.text);
    const ProofCheck c = check_proof(p);
    CHECK_MESSAGE(c.ok, c.message);
    CHECK(goal_of(p).antecedent.empty());
    CHECK(parse_proof(to_string(p)) == p);

    std::uint32_t nv = 0;
    for (const auto& s : p.steps) {
      for (const auto& g : s.sequent.antecedent) nv = std::max(nv, max_variable(g));
      for (const auto& g : s.sequent.succedent) nv = std::max(nv, max_variable(g));
    }
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << nv); ++a) {
      const Assignment as = Assignment::from_mask(a, nv);
      for (const auto& s : p.steps) CHECK(eval(s.sequent, as));
    }
  }
}

TEST_CASE("substitution") {
  const TcProof p = parse_proof(proof_library::all().front().text);
  CHECK(substitute(p, {}) == p);

  const TcProof top = substitute(p, {{1, true}});
  CHECK(check_proof(top).ok);
  CHECK(proves(top, f("Th1(T,~T)")));
  CHECK(size(top) <= size(p));

  CHECK(substitute(f("Th1(p1,p2,~p3)"), {{1, false}, {3, true}}) == f("Th1(F,p2,~T)"));

  for (const auto& e : proof_library::all()) {
    const TcProof q = parse_proof(e.text);
    const TcProof all_true = substitute(q, {{1, true}, {2, true}, {3, true}, {4, true}, {5, true}, {6, true}});
    CHECK(check_proof(all_true, goal_of(all_true)).ok);
    for (const auto& s : all_true.steps) {
      for (const auto& g : s.sequent.antecedent) CHECK_FALSE(has_variables(g));
      for (const auto& g : s.sequent.succedent) CHECK_FALSE(has_variables(g));
    }
  }
}

TEST_CASE("decide_constant_formula examples") {
  const TcProof t = decide_constant_formula(f("T"));
  CHECK(t.steps.size() == 1);
  CHECK(proves(t, f("T")));

  CHECK(proves(decide_constant_formula(f("Th2(T,F,T)")), f("Th2(T,F,T)")));
  CHECK(proves(decide_constant_formula(f("Th2(F,F,T)")), f("~Th2(F,F,T)")));
  CHECK(proves(decide_constant_formula(f("F")), f("~F")));
  CHECK(proves(decide_constant_formula(f("Th0()")), f("Th0()")));
  CHECK(proves(decide_constant_formula(f("Th1()")), f("~Th1()")));
  CHECK_THROWS_AS(decide_constant_formula(f("Th1(p1)")), std::invalid_argument);
}

TEST_CASE("decide_constant_formula on random formulas") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const TcFormula phi = random_constant(rng, 4);
    CAPTURE(to_string(phi));
    const TcProof p = decide_constant_formula(phi);
    const bool truth = ref_eval(phi);
    CHECK(eval(phi, Assignment{}) == truth);
    CHECK(proves(p, truth ? phi : TcFormula::neg(phi)));
  }
}

}  // TEST_SUITE
