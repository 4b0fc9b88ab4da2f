// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "fko/parallel.hpp"
#include "fko/spectral.hpp"
#include "fko/tc0frege.hpp"
#include "fko/tuples.hpp"
#include "fko/witness.hpp"
#include "helpers.hpp"
#include "proof_library.hpp"

using namespace fko;
using testing_support::planted_blocks;
using testing_support::to_cnf;
using testing_support::to_formula;

namespace {

// Pinned thresholds.
constexpr std::size_t kSoundnessMinInstances = 500;
constexpr std::size_t kMinMutants = 100;
constexpr std::size_t kNaeMinPairs = 100000;
constexpr std::size_t kChainInstances = 50;
constexpr double kSpectralMinPassRate = 0.99;
constexpr std::size_t kSpectralInstances = 100;
constexpr std::size_t kBoundInstances = 40;
constexpr std::size_t kXorTuples = 200;
constexpr std::size_t kMinLibraryProofs = 10;
constexpr std::size_t kTcMinMutations = 100;

struct Line {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const Line& l, double seconds) {
  std::cout << (l.pass ? "PASS " : "FAIL ") << name << ": " << l.detail << " [" << std::fixed;
  std::cout.precision(1);
  std::cout << seconds << "s]" << std::endl;
  if (!l.pass) ++failures;
}

template <class F>
void run(const std::string& name, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Line l;
  try {
    l = f();
  } catch (const std::exception& e) {
    l = {false, std::string("exception: ") + e.what()};
  }
  report(name, l, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

bool oracle_unsat(const Cnf& k) { return !oracle::satisfiable(to_formula(k), static_cast<int>(k.n())); }

bool oracle_nae(const oracle::Lits& c, std::uint64_t mask) {
  const int t = oracle::true_count(c, mask);
  return t == 1 || t == 2;
}

// ---------------------------------------------------------------------------

Line soundness() {
  std::size_t instances = 0, accepted = 0, mutants = 0, bad = 0;
  std::string first_bad;
  std::vector<std::pair<Cnf, FkoWitness>> pool;

  auto check = [&](const Cnf& k, const FkoWitness& w, const std::string& label) {
    ++instances;
    if (!verify_witness(k, w).accepted) return false;
    ++accepted;
    // planted instances past the brute-force range: the first block is an
    // unsatisfiable subformula on x1..x3
    bool unsat;
    if (k.n() <= 18) {
      unsat = brute_force_unsat(k, 25) && oracle_unsat(k);
    } else {
      const oracle::Formula all = to_formula(k);
      unsat = k.m() >= 8;
      for (std::size_t i = 0; unsat && i < 8; ++i)
        for (int l : all[i]) unsat = unsat && std::abs(l) <= 3;
      unsat = unsat && !oracle::satisfiable(oracle::Formula(all.begin(), all.begin() + 8), 3);
    }
    if (!unsat) {
      if (bad++ == 0) first_bad = label;
    }
    return true;
  };

  // random instances, n in [6,18], sparse to dense
  const std::size_t factors[] = {3, 10, 30, 60, 100, 160};
  for (std::size_t i = 0; i < 390; ++i) {
    const auto n = static_cast<std::uint32_t>(6 + i % 13);
    const std::size_t m = n * factors[(i / 13) % 6];
    const std::uint64_t seed = 1000 + i;
    const Cnf k = gen_random_3cnf(n, m, seed);
    const BuildResult r = build_witness(k, {8, 4, 6, 16, seed});
    if (check(k, r.witness, "random#" + std::to_string(i)) && pool.size() < 40) pool.emplace_back(k, r.witness);
  }

  // planted blocks, bare and buried in random clauses
  for (int t = 1; t <= 10; ++t) {
    const Cnf k = planted_blocks(t);
    const FkoWitness w = build_witness(k).witness;
    if (check(k, w, "planted T=" + std::to_string(t)) && pool.size() < 50) pool.emplace_back(k, w);
  }
  const std::size_t noise[] = {2, 5, 10};
  for (std::size_t j = 0; j < 50; ++j) {
    const auto n = static_cast<std::uint32_t>(6 + j % 13);
    const int blocks = 1 + static_cast<int>(j % 2);
    oracle::Formula f = to_formula(planted_blocks(blocks));
    const auto extra = oracle::random_formula(static_cast<int>(n), static_cast<int>(n * noise[j % 3]), 5000 + j);
    f.insert(f.end(), extra.begin(), extra.end());
    const Cnf k = to_cnf(f, n);
    const BuildResult r = build_witness(k, {8, 4, 6, 16, j});
    if (check(k, r.witness, "noisy planted#" + std::to_string(j)) && pool.size() < 60) pool.emplace_back(k, r.witness);
  }

  // mutated witnesses
  std::mt19937_64 rng(77);
  auto honest_spectral = [](FkoWitness& w, const Cnf& k) {
    w.imbalance = imbalance(k);
    w.m_matrix = build_m(k);
    w.cert = approx_eigen(w.m_matrix, {w.cert.c});
    w.lambda = max_lambda(w.cert);
  };
  for (std::size_t p = 0; p < pool.size(); ++p) {
    const Cnf& k = pool[p].first;
    const FkoWitness& w = pool[p].second;
    const std::string tag = "mutant of pool#" + std::to_string(p) + ": ";
    std::vector<std::pair<Cnf, FkoWitness>> muts;

    FkoWitness a = w;
    a.collection.t += 1;
    muts.emplace_back(k, a);
    a = w;
    a.lambda = w.lambda / Rat(2);
    for (auto& l : a.cert.lambdas) l = l / Rat(2);
    muts.emplace_back(k, a);
    a = w;
    a.epsilon = Rat(0);
    muts.emplace_back(k, a);
    a = w;
    a.imbalance = 0;
    muts.emplace_back(k, a);
    a = w;
    if (!a.collection.tuples.empty()) {
      a.collection.tuples.push_back(a.collection.tuples.front());
      a.collection.t += 1;
    }
    muts.emplace_back(k, a);

    // transplant: keep the clauses the collection uses, resample the rest,
    // and rebuild the spectral part honestly for the new formula
    std::set<std::size_t> used;
    for (const auto& t : w.collection.tuples) used.insert(t.clause_indices.begin(), t.clause_indices.end());
    const Cnf fresh = gen_random_3cnf(k.n(), k.m(), 9000 + p);
    std::vector<Clause> cl = k.clauses();
    for (std::size_t i = 0; i < cl.size(); ++i)
      if (!used.count(i)) cl[i] = fresh[i];
    const Cnf moved(k.n(), cl);
    a = w;
    honest_spectral(a, moved);
    muts.emplace_back(moved, a);

    // transplant onto a formula where one used clause changed polarity
    if (!used.empty()) {
      std::vector<Clause> cl2 = moved.clauses();
      auto it = used.begin();
      std::advance(it, rng() % used.size());
      cl2[*it].pols[0] = !cl2[*it].pols[0];
      const Cnf damaged(k.n(), cl2);
      a = w;
      honest_spectral(a, damaged);
      muts.emplace_back(damaged, a);
    }

    for (std::size_t q = 0; q < muts.size(); ++q) {
      ++mutants;
      check(muts[q].first, muts[q].second, tag + std::to_string(q));
    }
  }

  std::ostringstream os;
  os << instances << " instances (" << mutants << " mutated witnesses), " << accepted << " accepted, " << bad
     << " accepted-but-satisfiable";
  if (bad) os << " first: " << first_bad;
  const bool pass = bad == 0 && instances >= kSoundnessMinInstances && mutants >= kMinMutants && accepted > 0;
  return {pass, os.str()};
}

Line planted() {
  std::ostringstream os;
  bool pass = true;
  for (int t = 1; t <= 10; ++t) {
    const Cnf k = planted_blocks(t);
    const BuildResult r = build_witness(k);
    const FkoWitness& w = r.witness;
    const bool ok = r.ok && w.imbalance == 0 && w.m_matrix == QMat(k.n()) && w.lambda == Rat(0) &&
                    w.collection.t == static_cast<std::size_t>(16 * t) && w.collection.d == 4 && w.collection.k == 2 &&
                    verify_witness(k, w).accepted;
    const bool oracle_ok = t > 6 || (brute_force_unsat(k) && oracle_unsat(k));
    if (!ok || !oracle_ok) {
      pass = false;
      os << "T=" << t << " failed; ";
    }
  }
  os << "T=1..10 built and accepted with I=0, M=0, lambda=0, t=16T, d=4, k=2; UNSAT confirmed for T<=6";
  return {pass, os.str()};
}

Line nae_identity() {
  std::size_t pairs = 0, mismatches = 0;
  for (int n = 6; n <= 10; ++n) {
    const auto f = oracle::random_formula(n, 100, 300 + n);
    const Cnf k = to_cnf(f, n);
    const QMat m = build_m(k);
    const auto m2 = oracle::twice_m(f, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const SignVector sv = SignVector::from_assignment(Assignment::from_mask(mask, n));
      long nae = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        ++pairs;
        const bool e = oracle_nae(f[i], mask);
        nae += e ? 1 : 0;
        if (clause_contribution(k[i], sv) != Rat(e ? 1 : -3)) ++mismatches;
      }
      std::vector<Rat> a;
      for (int s : sv.entries()) a.emplace_back(s);
      const long expect = 4 * nae - 3 * static_cast<long>(f.size());
      if (quadratic_form(QVec(a), m) != Rat(expect)) ++mismatches;
      if (oracle::twice_quadform(m2, mask) != 2 * expect) ++mismatches;
      if (static_cast<long>(count_nae(k, sv.to_assignment())) != nae) ++mismatches;
    }
  }
  std::ostringstream os;
  os << pairs << " (clause, assignment) pairs, " << mismatches << " mismatches";
  return {mismatches == 0 && pairs >= kNaeMinPairs, os.str()};
}

Line lemma_chain() {
  std::size_t violations = 0, cert_fail = 0, with_collection = 0, checks = 0;
  const std::size_t factors[] = {4, 8, 16, 32};
  for (std::size_t i = 0; i < kChainInstances; ++i) {
    const int n = 6 + static_cast<int>(i % 7);
    const int m = n * static_cast<int>(factors[i % 4]);
    const auto f = oracle::random_formula(n, m, 700 + i);
    const Cnf k = to_cnf(f, n);
    const BuildResult r = build_witness(k, {8, 4, 6, 16, i});
    if (r.failed == BuildStage::kCertification) {
      ++cert_fail;
      continue;
    }
    const FkoWitness& w = r.witness;
    if (!check_collection(w.collection, k).ok) ++violations;
    const long long imb = oracle::imbalance(f, n);
    const Rat nae_bound = nae_upper_bound(w, k);
    const Rat two_bound = two_lit_upper_bound(w, k);
    const std::size_t d = w.collection.d;
    const long lower = w.collection.t == 0 ? 0 : static_cast<long>((w.collection.t + d - 1) / d);
    with_collection += w.collection.t > 0 ? 1 : 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      long sat_lits = 0, nae = 0, n0 = 0, n2 = 0, not_xor = 0;
      for (const auto& c : f) {
        const int t = oracle::true_count(c, mask);
        sat_lits += t;
        nae += (t == 1 || t == 2) ? 1 : 0;
        n0 += t == 0 ? 1 : 0;
        n2 += t == 2 ? 1 : 0;
        not_xor += (t == 0 || t == 2) ? 1 : 0;
      }
      checks += 4;
      if (2 * sat_lits > 3 * m + imb) ++violations;
      if (Rat(nae) > nae_bound) ++violations;
      if (Rat(n2 - 3 * n0) > two_bound) ++violations;
      if (not_xor < lower) ++violations;
    }
  }
  std::ostringstream os;
  os << kChainInstances << " instances (n<=12, all assignments), " << checks << " inequality checks, "
     << with_collection << " with a collection, " << violations << " violations, " << cert_fail
     << " certification failures";
  return {violations == 0 && cert_fail == 0, os.str()};
}

Line spectral() {
  std::size_t passed = 0, violations = 0, bound_checked = 0;
  std::ostringstream fails;
  const double factors[] = {1, 2, 4};
  for (std::size_t i = 0; i < kSpectralInstances; ++i) {
    const auto n = static_cast<std::uint32_t>(5 + (i * 45) / (kSpectralInstances - 1));
    const std::size_t m = cli::fko_density(n, factors[i % 3]);
    const Cnf k = gen_random_3cnf(n, m, 1500 + i);
    const QMat mm = build_m(k);
    try {
      const SpectralCert cert = approx_eigen(mm, {8});
      const CertReport r = certify_eigvalbound(mm, cert);
      if (r.all_pass()) {
        ++passed;
      } else {
        fails << " n=" << n << " cond" << r.first_failure() << " rho=" << r.rho.to_double()
              << " gram=" << r.gram_off.to_double() << "/" << r.gram_diag.to_double() << " tau=" << r.tau.to_double();
      }
    } catch (const SpectralError& e) {
      fails << " n=" << n << " " << e.what();
    }
  }
  const std::size_t bfactors[] = {2, 4, 8};
  for (std::size_t i = 0; i < kBoundInstances; ++i) {
    const int n = 4 + static_cast<int>(i % 11);
    const auto f = oracle::random_formula(n, n * static_cast<int>(bfactors[i % 3]), 1700 + i);
    const Cnf k = to_cnf(f, n);
    const QMat mm = build_m(k);
    const SpectralCert cert = approx_eigen(mm, {8});
    const CertReport r = certify_eigvalbound(mm, cert);
    if (!r.all_pass()) continue;
    ++bound_checked;
    if (Rat(oracle::max_twice_quadform(f, n), 2) > certified_quadform_bound(mm, cert, r)) ++violations;
  }
  const double rate = static_cast<double>(passed) / kSpectralInstances;
  std::ostringstream os;
  os << passed << "/" << kSpectralInstances << " certified for n in [5,50] at c=8 (need >= " << kSpectralMinPassRate
     << "); bound checked on " << bound_checked << "/" << kBoundInstances << " n<=14 instances, " << violations
     << " violations";
  if (!fails.str().empty()) os << "; failures:" << fails.str();
  return {rate >= kSpectralMinPassRate && violations == 0 && bound_checked > 0, os.str()};
}

// Random inconsistent even tuple: every variable slot is doubled, shuffled
// into triples, and the negation parity is forced odd.
oracle::Formula random_inconsistent_tuple(std::mt19937_64& rng, int n, int k) {
  for (;;) {
    std::vector<int> slots;
    for (int i = 0; i < 3 * k / 2; ++i) {
      const int v = 1 + static_cast<int>(rng() % n);
      slots.push_back(v);
      slots.push_back(v);
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    oracle::Formula t;
    bool ok = true;
    for (int c = 0; c < k && ok; ++c) {
      const int a = slots[3 * c], b = slots[3 * c + 1], d = slots[3 * c + 2];
      ok = a != b && a != d && b != d;
      t.push_back({rng() % 2 ? a : -a, rng() % 2 ? b : -b, rng() % 2 ? d : -d});
    }
    if (!ok) continue;
    int negs = 0;
    for (const auto& c : t)
      for (int l : c) negs += l < 0;
    if (negs % 2 == 0) t[0][0] = -t[0][0];
    return t;
  }
}

Line xor_lemma() {
  std::mt19937_64 rng(123);
  std::size_t tuples = 0, failures_here = 0, predicate_mismatch = 0;
  for (std::size_t i = 0; i < kXorTuples; ++i) {
    const int n = 4 + static_cast<int>(i % 7);
    const int k = 2 * (1 + static_cast<int>(i % 3));
    const auto t = random_inconsistent_tuple(rng, n, k);
    const Cnf cnf = to_cnf(t, n);
    std::vector<std::size_t> idx(t.size());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    if (!oracle::inconsistent_tuple(t) || !is_inconsistent_tuple(idx, cnf)) ++predicate_mismatch;
    ++tuples;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      bool some_bad = false;
      for (const auto& c : t) {
        const int tc = oracle::true_count(c, mask);
        some_bad = some_bad || tc == 0 || tc == 2;
      }
      if (!some_bad) {
        ++failures_here;
        break;
      }
    }
  }
  std::ostringstream os;
  os << tuples << " random inconsistent tuples (n<=10, k<=6), " << failures_here
     << " with a fully 3XOR-satisfying assignment, " << predicate_mismatch << " predicate mismatches";
  return {failures_here == 0 && predicate_mismatch == 0 && tuples >= kXorTuples, os.str()};
}

// Changes exactly one node of `g`.
void mutate_node(TcFormula& g, std::mt19937_64& rng) {
  // walk to a random node
  TcFormula* cur = &g;
  while (!cur->children.empty() && rng() % 2) cur = &cur->children[rng() % cur->children.size()];
  switch (cur->kind) {
    case TcFormula::Kind::kVar: cur->index += 1; break;
    case TcFormula::Kind::kTrue: cur->kind = TcFormula::Kind::kFalse; break;
    case TcFormula::Kind::kFalse: cur->kind = TcFormula::Kind::kTrue; break;
    case TcFormula::Kind::kNot: {
      TcFormula inner = cur->children[0];
      *cur = std::move(inner);
      break;
    }
    case TcFormula::Kind::kTh: cur->index += 1; break;
  }
}

bool same_inference(Rule a, Rule b, const ProofStep& s) {
  // all-x and one-x coincide on Th1 with a single argument
  auto single_th1 = [](const std::vector<TcFormula>& side, bool front) {
    if (side.empty()) return false;
    const TcFormula& p = front ? side.front() : side.back();
    return p.kind == TcFormula::Kind::kTh && p.index == 1 && p.children.size() == 1;
  };
  const bool left = (a == Rule::kAllLeft && b == Rule::kOneLeft) || (a == Rule::kOneLeft && b == Rule::kAllLeft);
  const bool right = (a == Rule::kAllRight && b == Rule::kOneRight) || (a == Rule::kOneRight && b == Rule::kAllRight);
  return (left && single_th1(s.sequent.antecedent, true)) || (right && single_th1(s.sequent.succedent, true));
}

Line tc0() {
  const auto& lib = proof_library::all();
  std::size_t valid = 0, mutants = 0, accepted_mutants = 0, substitutions = 0, sub_failures = 0, decided = 0,
              decide_failures = 0;
  std::string first_mutant;
  std::mt19937_64 rng(8);

  for (const auto& e : lib) {
    const TcProof p = parse_proof(e.text);
    const Sequent goal = p.steps.back().sequent;
    if (check_proof(p, goal).ok) ++valid;

    auto try_mutant = [&](const TcProof& q, const std::string& what) {
      ++mutants;
      if (check_proof(q, goal).ok) {
        if (accepted_mutants++ == 0) first_mutant = e.name + ": " + what;
      }
    };
    for (std::size_t s = 0; s < p.steps.size(); ++s) {
      const ProofStep& step = p.steps[s];
      for (Rule r : kAllRules) {
        if (r == step.rule || same_inference(r, step.rule, step)) continue;
        TcProof q = p;
        q.steps[s].rule = r;
        try_mutant(q, "step " + std::to_string(step.id) + " relabeled " + to_string(r));
      }
      for (std::size_t j = 0; j < step.premises.size(); ++j) {
        for (std::size_t t = 0; t < s; ++t) {
          if (p.steps[t].id == step.premises[j]) continue;
          const auto orig = std::find_if(p.steps.begin(), p.steps.end(),
                                         [&](const ProofStep& x) { return x.id == step.premises[j]; });
          if (orig->sequent == p.steps[t].sequent) continue;  // same sequent, not a change
          TcProof q = p;
          q.steps[s].premises[j] = p.steps[t].id;
          try_mutant(q, "step " + std::to_string(step.id) + " premise -> " + std::to_string(p.steps[t].id));
        }
      }
      for (int rep = 0; rep < 3; ++rep) {
        TcProof q = p;
        Sequent& sq = q.steps[s].sequent;
        const std::size_t total = sq.antecedent.size() + sq.succedent.size();
        const std::size_t pick = rng() % total;
        TcFormula& g = pick < sq.antecedent.size() ? sq.antecedent[pick] : sq.succedent[pick - sq.antecedent.size()];
        mutate_node(g, rng);
        if (q == p) continue;
        try_mutant(q, "step " + std::to_string(step.id) + " formula changed");
      }
    }

    // substitution sweep over every full assignment
    std::uint32_t nv = 0;
    for (const auto& s : p.steps) {
      for (const auto& g : s.sequent.antecedent) nv = std::max(nv, max_variable(g));
      for (const auto& g : s.sequent.succedent) nv = std::max(nv, max_variable(g));
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
      std::map<std::uint32_t, bool> values;
      for (std::uint32_t v = 1; v <= nv; ++v) values[v] = (mask >> (v - 1)) & 1u;
      const TcProof q = substitute(p, values);
      ++substitutions;
      const Sequent qgoal = q.steps.back().sequent;
      if (!check_proof(q, qgoal).ok || size(q) > size(p) || q.steps.size() != p.steps.size()) ++sub_failures;
      // decide the substituted conclusion
      if (qgoal.antecedent.empty() && qgoal.succedent.size() == 1) {
        ++decided;
        if (!proves(decide_constant_formula(qgoal.succedent[0]), qgoal.succedent[0])) ++decide_failures;
      }
    }
  }

  // decide on random constant formulas
  std::function<TcFormula(int)> gen = [&](int depth) -> TcFormula {
    const auto r = rng() % 6;
    if (depth == 0 || r == 0) return rng() % 2 ? TcFormula::top() : TcFormula::bot();
    if (r == 1) return TcFormula::neg(gen(depth - 1));
    const std::size_t n = rng() % 5;
    std::vector<TcFormula> kids;
    for (std::size_t i = 0; i < n; ++i) kids.push_back(gen(depth - 1));
    return TcFormula::th(static_cast<std::uint32_t>(rng() % (n + 2)), std::move(kids));
  };
  for (int i = 0; i < 500; ++i) {
    const TcFormula phi = gen(5);
    const bool truth = eval(phi, Assignment{});
    ++decided;
    if (!proves(decide_constant_formula(phi), truth ? phi : TcFormula::neg(phi))) ++decide_failures;
  }

  std::ostringstream os;
  os << valid << "/" << lib.size() << " library proofs valid; " << mutants - accepted_mutants << "/" << mutants
     << " single-step mutations rejected; " << substitutions - sub_failures << "/" << substitutions
     << " substitution instances valid; " << decided - decide_failures << "/" << decided << " decide proofs valid";
  if (accepted_mutants) os << "; first accepted mutant: " << first_mutant;
  const bool pass = valid == lib.size() && lib.size() >= kMinLibraryProofs && accepted_mutants == 0 &&
                    mutants >= kTcMinMutations && sub_failures == 0 && decide_failures == 0;
  return {pass, os.str()};
}

std::string pipeline_digest() {
  std::ostringstream os;
  const Cnf a = gen_random_3cnf(12, 700, 5);
  const Cnf b = gen_random_3cnf(30, cli::fko_density(30), 6);
  os << to_dimacs(a) << to_dimacs(b);
  for (const Cnf* k : {&a, &b}) {
    const QMat m = build_m(*k);
    const SpectralCert cert = approx_eigen(m);
    for (const auto& l : cert.lambdas) os << l << ' ';
    os << certify_eigvalbound(m, cert).slack << '\n';
    const SearchResult s = find_collection(*k, {6, 4, 0, 3, 16});
    for (const auto& t : s.collection.tuples)
      for (auto i : t.clause_indices) os << i << ',';
    const BuildResult r = build_witness(*k, {8, 4, 6, 16, 3});
    os << witness_to_json(r.witness) << verdict_to_json(verify_witness(*k, r.witness)) << '\n';
  }
  const OracleResult o = brute_force_sat(gen_random_3cnf(16, 60, 9), 25, worker_count());
  os << o.unsat;
  for (bool x : o.model) os << x;
  cli::RunConfig cfg;
  cfg.ns = {8, 10, 12};
  cfg.seeds = 3;
  cfg.m = 300;
  cfg.budget = 8;
  for (const auto& row : cli::sweep(cfg))
    os << row.n << ',' << row.seed << ',' << row.t_found << ',' << row.lambda << ',' << row.accepted << '\n';
  os << to_string(decide_constant_formula(parse_formula("Th2(Th1(F,T),~Th3(T,T,F),T)")));
  return os.str();
}

Line determinism() {
  std::vector<std::string> digests;
  for (const char* threads : {"1", "8"}) {
    setenv("FKO_THREADS", threads, 1);
    digests.push_back(pipeline_digest());
    digests.push_back(pipeline_digest());
  }
  unsetenv("FKO_THREADS");
  bool same = true;
  for (const auto& d : digests) same = same && d == digests.front();
  std::ostringstream os;
  os << digests.size() << " runs (FKO_THREADS=1,1,8,8) over gen, M, eigen, certification, collection, witness, "
     << "verdict, brute force, sweep, decide: " << (same ? "bit-identical" : "DIFFERENT") << " (" << digests.front().size()
     << " bytes)";
  return {same, os.str()};
}

}  // namespace

int main() {
  run("soundness", soundness);
  run("planted end-to-end", planted);
  run("NAE identity", nae_identity);
  run("lemma chain", lemma_chain);
  run("spectral certification", spectral);
  run("3XOR lemma", xor_lemma);
  run("TC0-Frege checker", tc0);
  run("determinism", determinism);
  return failures == 0 ? 0 : 1;
}
