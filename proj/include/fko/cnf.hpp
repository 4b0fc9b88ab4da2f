#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fko {

/// Raised for malformed 3CNF input or clauses violating the data model.
class CnfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A width-3 clause x_i^l1 v x_j^l2 v x_k^l3. Variables are 1-based,
/// polarity true means a positive literal. `index` is the clause's
/// position in its formula.
struct Clause {
  std::array<std::uint32_t, 3> vars{};
  std::array<bool, 3> pols{};
  std::size_t index = 0;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// A 3CNF over variables 1..n. Clauses are immutable after construction and
/// clause.index always equals the clause's position.
class Cnf {
 public:
  Cnf() = default;
  /// Validates every clause (range, distinct variables) and renumbers
  /// indices to positions. Throws CnfError on violation.
  Cnf(std::uint32_t n, std::vector<Clause> clauses);

  std::uint32_t n() const { return n_; }
  std::size_t m() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  friend bool operator==(const Cnf&, const Cnf&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Clause> clauses_;
};

/// Convenience builder: literals in DIMACS convention (+v / -v).
Clause make_clause(int a, int b, int c);

/// Truth values for variables 1..n; bits[i-1] is A(i).
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> bits) : bits_(std::move(bits)) {}
  /// Bit i-1 of `mask` is A(i). Requires n <= 64.
  static Assignment from_mask(std::uint64_t mask, std::uint32_t n);

  std::size_t size() const { return bits_.size(); }
  /// Value of variable i (1-based).
  bool operator()(std::uint32_t i) const { return bits_.at(i - 1); }
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> bits_;
};

/// a_i = 2 A(i) - 1.
class SignVector {
 public:
  SignVector() = default;
  /// Throws std::invalid_argument if an entry is not +-1.
  explicit SignVector(std::vector<int> entries);
  static SignVector from_assignment(const Assignment& a);
  Assignment to_assignment() const;

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  std::vector<int> entries_;
};

// DIMACS I/O -----------------------------------------------------------------

Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(std::string_view text);
void write_dimacs(std::ostream& out, const Cnf& k);
std::string to_dimacs(const Cnf& k);

// Generation ----------------------------------------------------------------

/// m clauses drawn independently and uniformly (with repetition) from the
/// 8 * C(n,3) clauses on distinct variable triples. Pure in (n, m, seed).
Cnf gen_random_3cnf(std::uint32_t n, std::size_t m, std::uint64_t seed);

// Clause predicates ----------------------------------------------------------

/// Number of literals of `c` made true by `a` (0..3).
int true_literals(const Clause& c, const Assignment& a);
bool not_sat(const Clause& c, const Assignment& a);
bool is_nae(const Clause& c, const Assignment& a);
bool is_3xor(const Clause& c, const Assignment& a);

// Formula-level counts -------------------------------------------------------

/// (clause index, slot) with slot in 1..3.
using LitPosition = std::pair<std::size_t, int>;

std::vector<LitPosition> lit_positions(const Cnf& k, std::uint32_t var, bool positive);
std::size_t count_sat_literals(const Cnf& k, const Assignment& a);
std::size_t count_nae(const Cnf& k, const Assignment& a);
std::size_t count_not_3xor(const Cnf& k, const Assignment& a);
std::size_t count_two_true(const Cnf& k, const Assignment& a);
std::size_t i_imbalance(const Cnf& k, std::uint32_t var);
std::size_t imbalance(const Cnf& k);

// Oracle ---------------------------------------------------------------------

inline constexpr std::uint32_t kDefaultOracleCap = 25;

struct OracleResult {
  bool unsat = false;
  /// A satisfying assignment when !unsat (lowest mask found).
  std::vector<bool> model;
};

/// Exhaustive search over all 2^n assignments, split across `threads`
/// workers (0 = FKO_THREADS / hardware default). The result does not depend
/// on the split. Throws CnfError if n exceeds `cap`.
OracleResult brute_force_sat(const Cnf& k, std::uint32_t cap = kDefaultOracleCap,
                             unsigned threads = 0);
bool brute_force_unsat(const Cnf& k, std::uint32_t cap = kDefaultOracleCap,
                       unsigned threads = 0);

}  // namespace fko
