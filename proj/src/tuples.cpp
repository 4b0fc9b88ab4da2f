#include "fko/tuples.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "fko/random.hpp"

namespace fko {

namespace {

bool negation_parity(const Clause& c) {
  return ((c.pols[0] ? 0 : 1) + (c.pols[1] ? 0 : 1) + (c.pols[2] ? 0 : 1)) % 2 == 1;
}

std::array<std::uint32_t, 3> sorted_vars(const Clause& c) {
  auto v = c.vars;
  std::sort(v.begin(), v.end());
  return v;
}

// XOR of occurrence parts and of negation parities over the tuple.
std::pair<std::vector<bool>, bool> tuple_parity(std::span<const std::size_t> s, const Cnf& k) {
  std::vector<bool> occ(k.n() + 1, false);
  bool neg = false;
  for (std::size_t idx : s) {
    if (idx >= k.m()) {
      throw std::out_of_range("clause index " + std::to_string(idx) + " >= m=" + std::to_string(k.m()));
    }
    const Clause& c = k[idx];
    for (auto v : c.vars) occ[v] = !occ[v];
    neg ^= negation_parity(c);
  }
  return {std::move(occ), neg};
}

// Bitset over a fixed number of bits.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
  void flip(std::size_t i) { w[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    return *this;
  }
  // Index of the lowest set bit, or npos.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    }
    return npos;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

using Candidates = std::vector<std::vector<std::size_t>>;

void dedupe(Candidates& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

Candidates pair_candidates(const Cnf& k, std::size_t cap) {
  std::map<std::array<std::uint32_t, 3>, std::vector<std::size_t>> by_triple;
  for (const auto& c : k.clauses()) by_triple[sorted_vars(c)].push_back(c.index);
  Candidates out;
  for (const auto& [vars, idx] : by_triple) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (negation_parity(k[idx[a]]) != negation_parity(k[idx[b]])) {
          if (out.size() >= cap) return out;
          out.push_back({idx[a], idx[b]});
        }
      }
    }
  }
  return out;
}

constexpr std::size_t kMaxPairs = 4'000'000;

struct PairSig {
  std::uint64_t hash;
  std::size_t i, j;
  bool neg;
};

// Symmetric difference of the two variable sets, sorted, at most 6 entries.
std::vector<std::uint32_t> pair_signature(const Clause& a, const Clause& b) {
  std::vector<std::uint32_t> s;
  const auto va = sorted_vars(a), vb = sorted_vars(b);
  std::set_symmetric_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(s));
  return s;
}

std::uint64_t hash_signature(const std::vector<std::uint32_t>& s) {
  std::uint64_t h = s.size();
  for (auto v : s) h = mix_seed(h, v);
  return h;
}

Candidates quad_candidates(const Cnf& k, std::size_t cap) {
  std::vector<PairSig> pairs;
  for (std::size_t i = 0; i < k.m() && pairs.size() < kMaxPairs; ++i) {
    for (std::size_t j = i + 1; j < k.m() && pairs.size() < kMaxPairs; ++j) {
      pairs.push_back({hash_signature(pair_signature(k[i], k[j])), i, j,
                       negation_parity(k[i]) != negation_parity(k[j])});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairSig& x, const PairSig& y) {
    return std::tie(x.hash, x.i, x.j) < std::tie(y.hash, y.i, y.j);
  });
  Candidates out;
  for (std::size_t lo = 0; lo < pairs.size();) {
    std::size_t hi = lo;
    while (hi < pairs.size() && pairs[hi].hash == pairs[lo].hash) ++hi;
    for (std::size_t a = lo; a < hi; ++a) {
      const auto sig_a = pair_signature(k[pairs[a].i], k[pairs[a].j]);
      for (std::size_t b = a + 1; b < hi; ++b) {
        const PairSig& p = pairs[a];
        const PairSig& q = pairs[b];
        if (p.neg == q.neg) continue;
        if (p.i == q.i || p.i == q.j || p.j == q.i || p.j == q.j) continue;
        if (pair_signature(k[q.i], k[q.j]) != sig_a) continue;  // hash collision
        std::vector<std::size_t> t{p.i, p.j, q.i, q.j};
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
        if (out.size() >= cap) {
          dedupe(out);
          return out;
        }
      }
    }
    lo = hi;
  }
  dedupe(out);
  return out;
}

// One round of incremental elimination: variables join a window in random
// order; a clause enters once all its variables are inside. A clause that
// reduces to zero closes a dependency (an even tuple).
void elimination_round(const Cnf& k, std::size_t k_max, std::uint64_t seed,
                       std::vector<Candidates>& by_length) {
  const std::uint32_t n = k.n();
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t v = 0; v < n; ++v) order[v] = v + 1;
  shuffle_in_place(order, rng);

  std::vector<std::vector<std::size_t>> touching(n + 1);
  for (const auto& c : k.clauses())
    for (auto v : c.vars) touching[v].push_back(c.index);
  std::vector<int> missing(k.m(), 3);

  struct Row {
    Bits occ, combo;
    bool neg = false;
    bool used = false;
  };
  std::vector<Row> basis(n + 1);
  std::size_t misses = 0;
  const std::size_t miss_limit = 8 * k_max + 32;

  for (std::uint32_t v : order) {
    std::vector<std::size_t> ready;
    for (std::size_t ci : touching[v]) {
      if (--missing[ci] == 0) ready.push_back(ci);
    }
    std::sort(ready.begin(), ready.end());
    shuffle_in_place(ready, rng);
    for (std::size_t ci : ready) {
      Row r{Bits(n + 1), Bits(k.m()), negation_parity(k[ci]), true};
      for (auto x : k[ci].vars) r.occ.flip(x);
      r.combo.flip(ci);
      for (std::size_t p = r.occ.lowest(); p != Bits::npos; p = r.occ.lowest()) {
        if (!basis[p].used) {
          basis[p] = std::move(r);
          r.used = false;
          break;
        }
        r.occ ^= basis[p].occ;
        r.combo ^= basis[p].combo;
        r.neg ^= basis[p].neg;
      }
      if (!r.used) continue;
      const std::size_t size = r.combo.count();
      if (size > k_max || !r.neg) {
        if (++misses > miss_limit) return;
        continue;
      }
      misses = 0;
      std::vector<std::size_t> t;
      for (std::size_t i = 0; i < k.m(); ++i)
        if (r.combo.test(i)) t.push_back(i);
      by_length[size].push_back(std::move(t));
    }
  }
}

TupleCollection pack(Candidates cands, std::size_t k, std::size_t d, std::size_t m, std::uint64_t seed) {
  TupleCollection out;
  out.k = k;
  out.d = d;
  std::vector<std::size_t> degree(m, 0);
  for (const auto& t : cands)
    for (auto i : t) ++degree[i];
  struct Keyed {
    std::size_t score;
    std::uint64_t tie;
    std::size_t pos;
  };
  std::mt19937_64 rng(mix_seed(seed, k));
  std::vector<Keyed> keys;
  keys.reserve(cands.size());
  for (std::size_t p = 0; p < cands.size(); ++p) {
    std::size_t score = 0;
    for (auto i : cands[p]) score += degree[i];
    keys.push_back({score, rng(), p});
  }
  std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.score, a.tie, a.pos) < std::tie(b.score, b.tie, b.pos);
  });
  std::vector<std::size_t> load(m, 0);
  for (const auto& key : keys) {
    const auto& t = cands[key.pos];
    if (std::all_of(t.begin(), t.end(), [&](std::size_t i) { return load[i] < d; })) {
      for (auto i : t) ++load[i];
      out.tuples.push_back({t});
    }
  }
  out.t = out.tuples.size();
  return out;
}

}  // namespace

std::vector<bool> parity_vector(const Clause& c, std::uint32_t n) {
  std::vector<bool> out(n + 1, false);
  for (auto v : c.vars) {
    if (v < 1 || v > n) throw std::out_of_range("variable outside 1..n");
    out[v] = !out[v];
  }
  out[0] = negation_parity(c);
  return out;
}

bool is_even_tuple(std::span<const std::size_t> s, const Cnf& k) {
  const auto [occ, neg] = tuple_parity(s, k);
  return std::none_of(occ.begin(), occ.end(), [](bool b) { return b; });
}

bool is_inconsistent_tuple(std::span<const std::size_t> s, const Cnf& k) {
  const auto [occ, neg] = tuple_parity(s, k);
  return neg && std::none_of(occ.begin(), occ.end(), [](bool b) { return b; });
}

const char* to_string(CollViolation v) {
  switch (v) {
    case CollViolation::kNone: return "none";
    case CollViolation::kCount: return "count";
    case CollViolation::kIndex: return "index";
    case CollViolation::kLength: return "length";
    case CollViolation::kNotEven: return "not-even";
    case CollViolation::kConsistent: return "consistent";
    case CollViolation::kReuse: return "reuse";
  }
  return "?";
}

CollCheck check_collection(const TupleCollection& d, const Cnf& k) {
  auto fail = [](CollViolation v, std::size_t where, std::string detail) {
    return CollCheck{false, v, where, std::move(detail)};
  };
  if (d.tuples.size() != d.t) {
    return fail(CollViolation::kCount, 0,
                "t=" + std::to_string(d.t) + " but " + std::to_string(d.tuples.size()) + " tuples");
  }
  std::vector<std::size_t> load(k.m(), 0);
  for (std::size_t i = 0; i < d.tuples.size(); ++i) {
    const auto& s = d.tuples[i].clause_indices;
    for (auto idx : s) {
      if (idx >= k.m()) return fail(CollViolation::kIndex, i, "clause index " + std::to_string(idx));
    }
    if (s.size() != d.k) {
      return fail(CollViolation::kLength, i, "length " + std::to_string(s.size()) + ", k=" + std::to_string(d.k));
    }
    if (!is_even_tuple(s, k)) return fail(CollViolation::kNotEven, i, "odd variable occurrence");
    if (!is_inconsistent_tuple(s, k)) return fail(CollViolation::kConsistent, i, "even negation count");
    for (auto idx : s) ++load[idx];
  }
  for (std::size_t c = 0; c < load.size(); ++c) {
    if (load[c] > d.d) {
      return fail(CollViolation::kReuse, c,
                  "clause " + std::to_string(c) + " used " + std::to_string(load[c]) + " times, d=" +
                      std::to_string(d.d));
    }
  }
  return {};
}

SearchResult find_collection(const Cnf& k, const SearchOptions& opts) {
  if (opts.k_max < 2 || opts.k_max % 2 != 0) throw std::invalid_argument("k_max must be even and >= 2");
  const std::size_t cap = std::max<std::size_t>(1, opts.budget) * 1000;

  std::vector<Candidates> by_length(opts.k_max + 1);
  by_length[2] = pair_candidates(k, cap);
  if (opts.k_max >= 4) by_length[4] = quad_candidates(k, cap);
  if (opts.k_max >= 6 && k.n() > 0) {
    for (std::size_t round = 0; round < opts.budget; ++round) {
      elimination_round(k, opts.k_max, mix_seed(opts.seed, round), by_length);
    }
  }

  TupleCollection best;
  best.k = 2;
  best.d = opts.d;
  for (std::size_t len = 2; len <= opts.k_max; len += 2) {
    auto& c = by_length[len];
    if (c.empty()) continue;
    dedupe(c);
    TupleCollection packed = pack(std::move(c), len, opts.d, k.m(), opts.seed);
    if (packed.t > best.t) best = std::move(packed);
  }
  SearchResult r;
  r.ok = best.t > 0 && best.t >= opts.t_target;
  r.collection = std::move(best);
  return r;
}

}  // namespace fko
