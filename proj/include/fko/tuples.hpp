#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fko/cnf.hpp"

namespace fko {

/// A tuple of clause indices into some Cnf. The same index may repeat.
struct EvenTuple {
  std::vector<std::size_t> clause_indices;

  std::size_t k() const { return clause_indices.size(); }
  friend bool operator==(const EvenTuple&, const EvenTuple&) = default;
  friend auto operator<=>(const EvenTuple&, const EvenTuple&) = default;
};

struct TupleCollection {
  std::vector<EvenTuple> tuples;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t d = 0;

  friend bool operator==(const TupleCollection&, const TupleCollection&) = default;
};

/// Bit 0: parity of negated literals. Bit v (1..n): occurrence parity of x_v.
std::vector<bool> parity_vector(const Clause& c, std::uint32_t n);

/// Throws std::out_of_range for an index >= m.
bool is_even_tuple(std::span<const std::size_t> s, const Cnf& k);
bool is_inconsistent_tuple(std::span<const std::size_t> s, const Cnf& k);

enum class CollViolation {
  kNone,
  kCount,       ///< tuples.size() != t
  kIndex,       ///< clause index >= m
  kLength,      ///< tuple length != k
  kNotEven,     ///< some variable occurs an odd number of times
  kConsistent,  ///< even number of negations
  kReuse,       ///< some clause used more than d times
};

const char* to_string(CollViolation v);

struct CollCheck {
  bool ok = true;
  CollViolation violation = CollViolation::kNone;
  std::size_t tuple = 0;  ///< offending tuple, or offending clause for kReuse
  std::string detail;
};

/// Checks the Coll predicate and reports the first violation in the order
/// count, then per tuple (index, length, even, inconsistent), then reuse.
CollCheck check_collection(const TupleCollection& d, const Cnf& k);

struct SearchOptions {
  std::size_t k_max = 6;
  std::size_t d = 4;
  std::size_t t_target = 0;
  std::uint64_t seed = 0;
  /// Randomized elimination rounds for k >= 6, and 1000x this many
  /// candidates at most per tuple length for k = 2, 4.
  std::size_t budget = 64;
};

struct SearchResult {
  bool ok = false;  ///< collection.t >= t_target and t > 0
  /// On failure, the best collection found.
  TupleCollection collection;
};

/// Builds a (t,k,d)-collection with a single k <= k_max maximising t.
/// Candidates for k = 2 and k = 4 are enumerated exactly (up to the budget);
/// longer ones come from seeded GF(2) elimination over growing variable
/// windows. Candidates are packed greedily under the reuse bound, rarest
/// clauses first. Deterministic in (k, opts). Throws std::invalid_argument
/// if k_max is odd or < 2.
SearchResult find_collection(const Cnf& k, const SearchOptions& opts);

}  // namespace fko
