#pragma once

#include "fko/cnf.hpp"
#include "oracles.hpp"

namespace testing_support {

inline fko::Cnf to_cnf(const oracle::Formula& k, std::uint32_t n) {
  std::vector<fko::Clause> cl;
  for (const auto& c : k) cl.push_back(fko::make_clause(c[0], c[1], c[2]));
  return fko::Cnf(n, std::move(cl));
}

inline oracle::Formula to_formula(const fko::Cnf& k) {
  oracle::Formula out;
  for (const auto& c : k.clauses()) {
    oracle::Lits l;
    for (int s = 0; s < 3; ++s) l.push_back((c.pols[s] ? 1 : -1) * static_cast<int>(c.vars[s]));
    out.push_back(l);
  }
  return out;
}

// T disjoint copies of the 8-clause block on (x1,x2,x3), (x4,x5,x6), ...
inline fko::Cnf planted_blocks(int t) {
  oracle::Formula k;
  for (int b = 0; b < t; ++b) {
    const auto blk = oracle::block(3 * b + 1);
    k.insert(k.end(), blk.begin(), blk.end());
  }
  return to_cnf(k, static_cast<std::uint32_t>(3 * t));
}

inline fko::Assignment bits(std::initializer_list<int> values) {
  std::vector<bool> b;
  for (int v : values) b.push_back(v != 0);
  return fko::Assignment(std::move(b));
}

}  // namespace testing_support
