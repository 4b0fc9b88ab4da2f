#include "fko/cnf.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "fko/parallel.hpp"
#include "fko/random.hpp"

namespace fko {

namespace {

void validate_clause(const Clause& c, std::uint32_t n, std::size_t pos) {
  for (auto v : c.vars) {
    if (v < 1 || v > n) {
      throw CnfError("clause " + std::to_string(pos) + ": variable " + std::to_string(v) +
                     " out of range 1.." + std::to_string(n));
    }
  }
  if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] || c.vars[1] == c.vars[2]) {
    throw CnfError("clause " + std::to_string(pos) + ": repeated variable");
  }
}

}  // namespace

Cnf::Cnf(std::uint32_t n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    validate_clause(clauses_[i], n_, i);
    clauses_[i].index = i;
  }
}

Clause make_clause(int a, int b, int c) {
  Clause cl;
  const int lits[3] = {a, b, c};
  for (int s = 0; s < 3; ++s) {
    if (lits[s] == 0) throw CnfError("literal 0 is not a variable");
    cl.vars[s] = static_cast<std::uint32_t>(std::abs(lits[s]));
    cl.pols[s] = lits[s] > 0;
  }
  return cl;
}

Assignment Assignment::from_mask(std::uint64_t mask, std::uint32_t n) {
  std::vector<bool> bits(n);
  for (std::uint32_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1u;
  return Assignment(std::move(bits));
}

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e != 1 && e != -1) throw std::invalid_argument("sign vector entries must be +-1");
  }
}

SignVector SignVector::from_assignment(const Assignment& a) {
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a.bits()[i] ? 1 : -1;
  return SignVector(std::move(e));
}

Assignment SignVector::to_assignment() const {
  std::vector<bool> bits(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) bits[i] = entries_[i] == 1;
  return Assignment(std::move(bits));
}

// DIMACS ---------------------------------------------------------------------

Cnf parse_dimacs(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Clause> clauses;
  std::vector<long long> pending;
  std::size_t line_no = 0;

  auto flush_clause = [&]() {
    if (pending.size() != 3) {
      throw CnfError("line " + std::to_string(line_no) + ": clause has " +
                     std::to_string(pending.size()) + " literals, expected 3");
    }
    Clause c;
    for (int s = 0; s < 3; ++s) {
      const long long lit = pending[s];
      const long long v = lit < 0 ? -lit : lit;
      if (v > n) {
        throw CnfError("line " + std::to_string(line_no) + ": variable " + std::to_string(v) +
                       " out of range 1.." + std::to_string(n));
      }
      c.vars[s] = static_cast<std::uint32_t>(v);
      c.pols[s] = lit > 0;
    }
    validate_clause(c, static_cast<std::uint32_t>(n), clauses.size());
    clauses.push_back(c);
    pending.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const char lead = line[first];
    if (lead == 'c') continue;
    if (lead == '%') break;
    std::istringstream ss(line.substr(first));
    if (lead == 'p') {
      if (have_header) throw CnfError("line " + std::to_string(line_no) + ": duplicate header");
      std::string p, fmt;
      if (!(ss >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf" || n < 0 || m < 0 ||
          n > std::numeric_limits<std::uint32_t>::max()) {
        throw CnfError("line " + std::to_string(line_no) + ": malformed header, expected 'p cnf <n> <m>'");
      }
      std::string extra;
      if (ss >> extra) throw CnfError("line " + std::to_string(line_no) + ": trailing header tokens");
      have_header = true;
      continue;
    }
    if (!have_header) throw CnfError("line " + std::to_string(line_no) + ": clause before header");
    std::string tok;
    while (ss >> tok) {
      long long lit;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw CnfError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (lit == 0) {
        flush_clause();
      } else {
        pending.push_back(lit);
        if (pending.size() > 3) {
          throw CnfError("line " + std::to_string(line_no) + ": clause wider than 3");
        }
      }
    }
  }
  if (!have_header) throw CnfError("missing 'p cnf' header");
  if (!pending.empty()) throw CnfError("last clause is not zero-terminated");
  if (static_cast<long long>(clauses.size()) != m) {
    throw CnfError("header declares " + std::to_string(m) + " clauses, found " +
                   std::to_string(clauses.size()));
  }
  return Cnf(static_cast<std::uint32_t>(n), std::move(clauses));
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Cnf& k) {
  out << "p cnf " << k.n() << ' ' << k.m() << '\n';
  for (const auto& c : k.clauses()) {
    for (int s = 0; s < 3; ++s) out << (c.pols[s] ? "" : "-") << c.vars[s] << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const Cnf& k) {
  std::ostringstream out;
  write_dimacs(out, k);
  return out.str();
}

// Generation ----------------------------------------------------------------

Cnf gen_random_3cnf(std::uint32_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw CnfError("random 3CNF needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::array<std::uint32_t, 3> v{};
    v[0] = static_cast<std::uint32_t>(uniform_below(rng, n)) + 1;
    do {
      v[1] = static_cast<std::uint32_t>(uniform_below(rng, n)) + 1;
    } while (v[1] == v[0]);
    do {
      v[2] = static_cast<std::uint32_t>(uniform_below(rng, n)) + 1;
    } while (v[2] == v[0] || v[2] == v[1]);
    std::sort(v.begin(), v.end());
    const auto signs = uniform_below(rng, 8);
    Clause c;
    c.vars = v;
    for (int s = 0; s < 3; ++s) c.pols[s] = (signs >> s) & 1u;
    clauses.push_back(c);
  }
  return Cnf(n, std::move(clauses));
}

// Predicates -----------------------------------------------------------------

int true_literals(const Clause& c, const Assignment& a) {
  int count = 0;
  for (int s = 0; s < 3; ++s) count += a(c.vars[s]) == c.pols[s];
  return count;
}

bool not_sat(const Clause& c, const Assignment& a) { return true_literals(c, a) == 0; }

bool is_nae(const Clause& c, const Assignment& a) {
  const int t = true_literals(c, a);
  return t == 1 || t == 2;
}

bool is_3xor(const Clause& c, const Assignment& a) { return true_literals(c, a) % 2 == 1; }

std::vector<LitPosition> lit_positions(const Cnf& k, std::uint32_t var, bool positive) {
  std::vector<LitPosition> out;
  for (const auto& c : k.clauses()) {
    for (int s = 0; s < 3; ++s) {
      if (c.vars[s] == var && c.pols[s] == positive) out.emplace_back(c.index, s + 1);
    }
  }
  return out;
}

std::size_t count_sat_literals(const Cnf& k, const Assignment& a) {
  std::size_t total = 0;
  for (const auto& c : k.clauses()) total += static_cast<std::size_t>(true_literals(c, a));
  return total;
}

std::size_t count_nae(const Cnf& k, const Assignment& a) {
  return static_cast<std::size_t>(
      std::count_if(k.clauses().begin(), k.clauses().end(), [&](const Clause& c) { return is_nae(c, a); }));
}

std::size_t count_not_3xor(const Cnf& k, const Assignment& a) {
  return static_cast<std::size_t>(
      std::count_if(k.clauses().begin(), k.clauses().end(), [&](const Clause& c) { return !is_3xor(c, a); }));
}

std::size_t count_two_true(const Cnf& k, const Assignment& a) {
  return static_cast<std::size_t>(std::count_if(k.clauses().begin(), k.clauses().end(),
                                                 [&](const Clause& c) { return true_literals(c, a) == 2; }));
}

std::size_t i_imbalance(const Cnf& k, std::uint32_t var) {
  long long diff = 0;
  for (const auto& c : k.clauses()) {
    for (int s = 0; s < 3; ++s) {
      if (c.vars[s] == var) diff += c.pols[s] ? 1 : -1;
    }
  }
  return static_cast<std::size_t>(diff < 0 ? -diff : diff);
}

std::size_t imbalance(const Cnf& k) {
  std::vector<long long> diff(k.n() + 1, 0);
  for (const auto& c : k.clauses()) {
    for (int s = 0; s < 3; ++s) diff[c.vars[s]] += c.pols[s] ? 1 : -1;
  }
  std::size_t total = 0;
  for (auto d : diff) total += static_cast<std::size_t>(d < 0 ? -d : d);
  return total;
}

// Oracle ---------------------------------------------------------------------

OracleResult brute_force_sat(const Cnf& k, std::uint32_t cap, unsigned threads) {
  if (k.n() > cap) {
    throw CnfError("oracle cap exceeded: n=" + std::to_string(k.n()) + " > " + std::to_string(cap));
  }
  if (k.n() > 62) throw CnfError("oracle supports at most 62 variables");
  // Clause c is falsified by mask A iff (A & vars) == negated-literal bits.
  struct Masks {
    std::uint64_t vars, falsify;
  };
  std::vector<Masks> masks;
  masks.reserve(k.m());
  for (const auto& c : k.clauses()) {
    Masks mk{0, 0};
    for (int s = 0; s < 3; ++s) {
      const std::uint64_t bit = std::uint64_t{1} << (c.vars[s] - 1);
      mk.vars |= bit;
      if (!c.pols[s]) mk.falsify |= bit;
    }
    masks.push_back(mk);
  }
  const std::uint64_t total = std::uint64_t{1} << k.n();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 1u << 14));
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::atomic<std::uint64_t> best{total};

  parallel_for(chunks, threads == 0 ? worker_count() : threads, [&](std::size_t ci) {
    const std::uint64_t lo = ci * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= best.load(std::memory_order_relaxed)) return;
    for (std::uint64_t a = lo; a < hi; ++a) {
      bool ok = true;
      for (const auto& mk : masks) {
        if ((a & mk.vars) == mk.falsify) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::uint64_t cur = best.load();
        while (a < cur && !best.compare_exchange_weak(cur, a)) {
        }
        return;
      }
    }
  });

  OracleResult r;
  const std::uint64_t found = best.load();
  r.unsat = found == total;
  if (!r.unsat) r.model = Assignment::from_mask(found, k.n()).bits();
  return r;
}

bool brute_force_unsat(const Cnf& k, std::uint32_t cap, unsigned threads) {
  return brute_force_sat(k, cap, threads).unsat;
}

}  // namespace fko
