#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fko/cnf.hpp"

namespace fko {

/// Threshold formula. `index` is the variable number for kVar (1-based) and
/// the threshold i for kTh.
struct TcFormula {
  enum class Kind { kTrue, kFalse, kVar, kNot, kTh };

  Kind kind = Kind::kTrue;
  std::uint32_t index = 0;
  std::vector<TcFormula> children;

  static TcFormula top() { return {Kind::kTrue, 0, {}}; }
  static TcFormula bot() { return {Kind::kFalse, 0, {}}; }
  static TcFormula var(std::uint32_t i) { return {Kind::kVar, i, {}}; }
  static TcFormula neg(TcFormula f) { return {Kind::kNot, 0, {std::move(f)}}; }
  static TcFormula th(std::uint32_t i, std::vector<TcFormula> args) { return {Kind::kTh, i, std::move(args)}; }

  friend bool operator==(const TcFormula&, const TcFormula&) = default;
};

/// Number of connectives.
std::size_t size(const TcFormula& f);
/// Maximal nesting of connectives; atoms have depth 0.
std::size_t depth(const TcFormula& f);
bool has_variables(const TcFormula& f);
/// Largest variable index, 0 if none.
std::uint32_t max_variable(const TcFormula& f);

/// Throws std::out_of_range if a variable is outside the assignment.
bool eval(const TcFormula& f, const Assignment& a);

class TcParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar: T | F | p<idx> | ~f | Th<i>(f,...,f), whitespace ignored.
TcFormula parse_formula(std::string_view text);
std::string to_string(const TcFormula& f);

struct Sequent {
  std::vector<TcFormula> antecedent;
  std::vector<TcFormula> succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string to_string(const Sequent& s);
/// Conjunction of the antecedent implies disjunction of the succedent.
bool eval(const Sequent& s, const Assignment& a);

enum class Rule {
  kAxiom,
  kWeakenLeft,
  kWeakenRight,
  kExchangeLeft,
  kExchangeRight,
  kContractLeft,
  kContractRight,
  kNotLeft,
  kNotRight,
  kAllLeft,
  kAllRight,
  kOneLeft,
  kOneRight,
  kThLeft,
  kThRight,
  kCut,
};

inline constexpr Rule kAllRules[] = {
    Rule::kAxiom,     Rule::kWeakenLeft, Rule::kWeakenRight, Rule::kExchangeLeft, Rule::kExchangeRight,
    Rule::kContractLeft, Rule::kContractRight, Rule::kNotLeft, Rule::kNotRight, Rule::kAllLeft,
    Rule::kAllRight,  Rule::kOneLeft,    Rule::kOneRight,    Rule::kThLeft,       Rule::kThRight,
    Rule::kCut,
};

const char* to_string(Rule r);
/// Throws TcParseError for an unknown name.
Rule parse_rule(std::string_view name);

struct ProofStep {
  std::size_t id = 0;
  Rule rule = Rule::kAxiom;
  /// Ids of earlier steps, in the order the rule lists its premises.
  std::vector<std::size_t> premises;
  Sequent sequent;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct TcProof {
  std::vector<ProofStep> steps;

  friend bool operator==(const TcProof&, const TcProof&) = default;
};

/// Sum of formula sizes over all sequents.
std::size_t size(const TcProof& p);

/// One step per line: `<id>: <rule>(<ids>) |- <G> --> <D>`.
/// Blank lines and lines starting with '#' are skipped.
TcProof parse_proof(std::string_view text);
std::string to_string(const TcProof& p);

struct ProofCheck {
  bool ok = true;
  std::size_t step = 0;  ///< position of the first bad step
  std::string message;
};

/// Structural check of every step against its rule. Axioms are A -> A,
/// F ->, -> T, -> Th0(...), and Thi(A1..An) -> for i > n. With `goal`, the
/// last sequent must also equal it.
ProofCheck check_proof(const TcProof& p, const std::optional<Sequent>& goal = std::nullopt);

/// check_proof with goal `-> phi`.
bool proves(const TcProof& p, const TcFormula& phi);

/// Replaces variables by constants everywhere; unmapped variables stay.
TcFormula substitute(const TcFormula& f, const std::map<std::uint32_t, bool>& values);
TcProof substitute(const TcProof& p, const std::map<std::uint32_t, bool>& values);

/// Proof of `-> phi` if phi is true, else of `-> ~phi`. Size is polynomial
/// in size(phi) since subproofs are shared. Throws std::invalid_argument if
/// phi has variables.
TcProof decide_constant_formula(const TcFormula& phi);

}  // namespace fko
