#include "fko/tc0frege.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace fko {

using Kind = TcFormula::Kind;
using Formulas = std::vector<TcFormula>;

// Formulas ----------------------------------------------------------------------

std::size_t size(const TcFormula& f) {
  std::size_t s = (f.kind == Kind::kNot || f.kind == Kind::kTh) ? 1 : 0;
  for (const auto& c : f.children) s += size(c);
  return s;
}

std::size_t depth(const TcFormula& f) {
  if (f.kind != Kind::kNot && f.kind != Kind::kTh) return 0;
  std::size_t d = 0;
  for (const auto& c : f.children) d = std::max(d, depth(c));
  return d + 1;
}

bool has_variables(const TcFormula& f) { return max_variable(f) != 0; }

std::uint32_t max_variable(const TcFormula& f) {
  std::uint32_t v = f.kind == Kind::kVar ? f.index : 0;
  for (const auto& c : f.children) v = std::max(v, max_variable(c));
  return v;
}

bool eval(const TcFormula& f, const Assignment& a) {
  switch (f.kind) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kVar:
      if (f.index < 1 || f.index > a.size()) {
        throw std::out_of_range("unbound variable p" + std::to_string(f.index));
      }
      return a(f.index);
    case Kind::kNot: return !eval(f.children[0], a);
    case Kind::kTh: {
      std::size_t count = 0;
      for (const auto& c : f.children) count += eval(c, a) ? 1 : 0;
      return count >= f.index;
    }
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  TcFormula formula() {
    skip_ws();
    if (at_end()) fail("expected formula");
    const char c = s_[pos_];
    if (c == '~') {
      ++pos_;
      return TcFormula::neg(formula());
    }
    if (c == 'T' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'h') {
      pos_ += 2;
      const auto i = number();
      expect('(');
      Formulas args;
      skip_ws();
      if (!at_end() && s_[pos_] == ')') {
        ++pos_;
        return TcFormula::th(i, std::move(args));
      }
      for (;;) {
        args.push_back(formula());
        skip_ws();
        if (at_end()) fail("unterminated Th argument list");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        return TcFormula::th(i, std::move(args));
      }
    }
    if (c == 'T') {
      ++pos_;
      return TcFormula::top();
    }
    if (c == 'F') {
      ++pos_;
      return TcFormula::bot();
    }
    if (c == 'p') {
      ++pos_;
      const auto i = number();
      if (i == 0) fail("variables are numbered from 1");
      return TcFormula::var(i);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Formulas list() {
    Formulas out;
    skip_ws();
    if (at_end()) return out;
    for (;;) {
      out.push_back(formula());
      skip_ws();
      if (at_end()) return out;
      expect(',');
    }
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("trailing input");
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint32_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0xffffffffULL) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected number");
    return static_cast<std::uint32_t>(v);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw TcParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(std::ostream& os, const TcFormula& f) {
  switch (f.kind) {
    case Kind::kTrue: os << 'T'; return;
    case Kind::kFalse: os << 'F'; return;
    case Kind::kVar: os << 'p' << f.index; return;
    case Kind::kNot: os << '~'; print(os, f.children[0]); return;
    case Kind::kTh:
      os << "Th" << f.index << '(';
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) os << ',';
        print(os, f.children[i]);
      }
      os << ')';
      return;
  }
}

void print_list(std::ostream& os, const Formulas& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) os << ", ";
    print(os, fs[i]);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

TcFormula parse_formula(std::string_view text) {
  Parser p(text);
  TcFormula f = p.formula();
  p.finish();
  return f;
}

std::string to_string(const TcFormula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::string to_string(const Sequent& s) {
  std::ostringstream os;
  print_list(os, s.antecedent);
  os << (s.antecedent.empty() ? "-->" : " -->");
  if (!s.succedent.empty()) os << ' ';
  print_list(os, s.succedent);
  return os.str();
}

bool eval(const Sequent& s, const Assignment& a) {
  for (const auto& f : s.antecedent)
    if (!eval(f, a)) return true;
  for (const auto& f : s.succedent)
    if (eval(f, a)) return true;
  return false;
}

// Rules -----------------------------------------------------------------------------

namespace {

constexpr std::pair<Rule, const char*> kRuleNames[] = {
    {Rule::kAxiom, "axiom"},
    {Rule::kWeakenLeft, "weaken-left"},
    {Rule::kWeakenRight, "weaken-right"},
    {Rule::kExchangeLeft, "exchange-left"},
    {Rule::kExchangeRight, "exchange-right"},
    {Rule::kContractLeft, "contract-left"},
    {Rule::kContractRight, "contract-right"},
    {Rule::kNotLeft, "not-left"},
    {Rule::kNotRight, "not-right"},
    {Rule::kAllLeft, "all-left"},
    {Rule::kAllRight, "all-right"},
    {Rule::kOneLeft, "one-left"},
    {Rule::kOneRight, "one-right"},
    {Rule::kThLeft, "th-left"},
    {Rule::kThRight, "th-right"},
    {Rule::kCut, "cut"},
};

}  // namespace

const char* to_string(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames)
    if (name == n) return rule;
  throw TcParseError("unknown rule '" + std::string(name) + "'");
}

std::size_t size(const TcProof& p) {
  std::size_t s = 0;
  for (const auto& step : p.steps) {
    for (const auto& f : step.sequent.antecedent) s += size(f);
    for (const auto& f : step.sequent.succedent) s += size(f);
  }
  return s;
}

TcProof parse_proof(std::string_view text) {
  TcProof proof;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) -> TcParseError {
      return TcParseError("line " + std::to_string(line_no) + ": " + what);
    };
    try {
      ProofStep step;
      const auto colon = line.find(':');
      const auto open = line.find('(');
      const auto close = line.find(')', open == std::string_view::npos ? 0 : open);
      const auto turnstile = line.find("|-");
      if (colon == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
          turnstile == std::string_view::npos || !(colon < open && open < close && close < turnstile)) {
        throw fail("expected '<id>: <rule>(<ids>) |- <G> --> <D>'");
      }
      const std::string id_text(trim(line.substr(0, colon)));
      if (id_text.empty() || !std::all_of(id_text.begin(), id_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw fail("bad step id '" + id_text + "'");
      }
      step.id = std::stoull(id_text);
      step.rule = parse_rule(trim(line.substr(colon + 1, open - colon - 1)));
      std::string_view ids = line.substr(open + 1, close - open - 1);
      while (!trim(ids).empty()) {
        const auto comma = ids.find(',');
        const std::string one(trim(ids.substr(0, comma)));
        if (one.empty() || !std::all_of(one.begin(), one.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          throw fail("bad premise id '" + one + "'");
        }
        step.premises.push_back(std::stoull(one));
        if (comma == std::string_view::npos) break;
        ids = ids.substr(comma + 1);
      }
      if (!trim(line.substr(close + 1, turnstile - close - 1)).empty()) throw fail("junk before '|-'");
      const std::string_view seq = line.substr(turnstile + 2);
      const auto arrow = seq.find("-->");
      if (arrow == std::string_view::npos) throw fail("missing '-->'");
      Parser left(seq.substr(0, arrow));
      step.sequent.antecedent = left.list();
      Parser right(seq.substr(arrow + 3));
      step.sequent.succedent = right.list();
      proof.steps.push_back(std::move(step));
    } catch (const TcParseError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw fail(what);
    }
  }
  return proof;
}

std::string to_string(const TcProof& p) {
  std::ostringstream os;
  for (const auto& s : p.steps) {
    os << s.id << ": " << to_string(s.rule) << '(';
    for (std::size_t i = 0; i < s.premises.size(); ++i) {
      if (i) os << ',';
      os << s.premises[i];
    }
    os << ") |- " << to_string(s.sequent) << '\n';
  }
  return os.str();
}

// Checking ----------------------------------------------------------------------------

namespace {

// xs == prefix ++ ys[from..]
bool equals_concat(const Formulas& xs, const Formulas& prefix, const Formulas& ys, std::size_t from) {
  if (from > ys.size() || xs.size() != prefix.size() + ys.size() - from) return false;
  return std::equal(prefix.begin(), prefix.end(), xs.begin()) &&
         std::equal(ys.begin() + static_cast<std::ptrdiff_t>(from), ys.end(),
                    xs.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
}

// `after` is `before` with one adjacent pair swapped.
bool one_adjacent_swap(const Formulas& before, const Formulas& after) {
  if (before.size() != after.size() || before.size() < 2) return false;
  std::size_t j = 0;
  while (j < before.size() && before[j] == after[j]) ++j;
  if (j == before.size()) {
    for (std::size_t i = 0; i + 1 < before.size(); ++i)
      if (before[i] == before[i + 1]) return true;
    return false;
  }
  if (j + 1 >= before.size()) return false;
  if (!(after[j] == before[j + 1] && after[j + 1] == before[j])) return false;
  return std::equal(before.begin() + static_cast<std::ptrdiff_t>(j) + 2, before.end(),
                    after.begin() + static_cast<std::ptrdiff_t>(j) + 2);
}

bool is_th(const TcFormula& f) { return f.kind == Kind::kTh; }

TcFormula th_tail(std::uint32_t i, const TcFormula& th) {
  return TcFormula::th(i, Formulas(th.children.begin() + 1, th.children.end()));
}

// Empty string when the step is a correct application of its rule.
std::string check_step(const ProofStep& step, const std::vector<const Sequent*>& prem) {
  const Sequent& s = step.sequent;
  const Formulas& g = s.antecedent;
  const Formulas& d = s.succedent;
  auto want_premises = [&](std::size_t n) -> std::string {
    if (prem.size() == n) return {};
    return std::string(to_string(step.rule)) + " takes " + std::to_string(n) + " premise(s), got " +
           std::to_string(prem.size());
  };
  std::string err;

  switch (step.rule) {
    case Rule::kAxiom: {
      if (!(err = want_premises(0)).empty()) return err;
      if (g.size() == 1 && d.size() == 1 && g[0] == d[0]) return {};
      if (g.size() == 1 && d.empty() && g[0].kind == Kind::kFalse) return {};
      if (g.empty() && d.size() == 1 && d[0].kind == Kind::kTrue) return {};
      if (g.empty() && d.size() == 1 && is_th(d[0]) && d[0].index == 0) return {};
      if (g.size() == 1 && d.empty() && is_th(g[0]) && g[0].index > g[0].children.size()) return {};
      return "not an axiom";
    }
    case Rule::kWeakenLeft: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (g.empty() || !equals_concat(g, p.antecedent, {g.back()}, 0) || d != p.succedent) {
        return "conclusion is not G, A --> D";
      }
      return {};
    }
    case Rule::kWeakenRight: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (d.empty() || !equals_concat(d, {d.front()}, p.succedent, 0) || g != p.antecedent) {
        return "conclusion is not G --> A, D";
      }
      return {};
    }
    case Rule::kExchangeLeft: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (d != p.succedent || !one_adjacent_swap(p.antecedent, g)) return "not one adjacent swap on the left";
      return {};
    }
    case Rule::kExchangeRight: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (g != p.antecedent || !one_adjacent_swap(p.succedent, d)) return "not one adjacent swap on the right";
      return {};
    }
    case Rule::kContractLeft: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (g.empty() || !equals_concat(p.antecedent, g, {g.back()}, 0) || d != p.succedent) {
        return "premise is not G, A, A --> D";
      }
      return {};
    }
    case Rule::kContractRight: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (d.empty() || !equals_concat(p.succedent, {d.front()}, d, 0) || g != p.antecedent) {
        return "premise is not G --> A, A, D";
      }
      return {};
    }
    case Rule::kNotLeft: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (g.empty() || g.back().kind != Kind::kNot) return "conclusion does not end in ~A on the left";
      const Formulas gamma(g.begin(), g.end() - 1);
      if (p.antecedent != gamma || !equals_concat(p.succedent, {g.back().children[0]}, d, 0)) {
        return "premise is not G --> A, D";
      }
      return {};
    }
    case Rule::kNotRight: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (d.empty() || d.front().kind != Kind::kNot) return "conclusion does not start with ~A on the right";
      if (!equals_concat(p.antecedent, g, {d.front().children[0]}, 0) || !equals_concat(p.succedent, {}, d, 1)) {
        return "premise is not G, A --> D";
      }
      return {};
    }
    case Rule::kAllLeft: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (g.empty() || !is_th(g[0]) || g[0].index != g[0].children.size()) {
        return "conclusion does not start with Thn(A1..An) on the left";
      }
      if (!equals_concat(p.antecedent, g[0].children, g, 1) || p.succedent != d) {
        return "premise is not A1..An, G --> D";
      }
      return {};
    }
    case Rule::kAllRight: {
      if (d.empty() || !is_th(d[0]) || d[0].index != d[0].children.size()) {
        return "conclusion does not start with Thn(A1..An) on the right";
      }
      const Formulas& as = d[0].children;
      if (!(err = want_premises(as.size())).empty()) return err;
      for (std::size_t k = 0; k < as.size(); ++k) {
        if (prem[k]->antecedent != g || !equals_concat(prem[k]->succedent, {as[k]}, d, 1)) {
          return "premise " + std::to_string(k + 1) + " is not G --> A" + std::to_string(k + 1) + ", D";
        }
      }
      return {};
    }
    case Rule::kOneLeft: {
      if (g.empty() || !is_th(g[0]) || g[0].index != 1) return "conclusion does not start with Th1(...) on the left";
      const Formulas& as = g[0].children;
      if (!(err = want_premises(as.size())).empty()) return err;
      for (std::size_t k = 0; k < as.size(); ++k) {
        if (prem[k]->succedent != d || !equals_concat(prem[k]->antecedent, {as[k]}, g, 1)) {
          return "premise " + std::to_string(k + 1) + " is not A" + std::to_string(k + 1) + ", G --> D";
        }
      }
      return {};
    }
    case Rule::kOneRight: {
      if (!(err = want_premises(1)).empty()) return err;
      const Sequent& p = *prem[0];
      if (d.empty() || !is_th(d[0]) || d[0].index != 1) return "conclusion does not start with Th1(...) on the right";
      if (p.antecedent != g || !equals_concat(p.succedent, d[0].children, d, 1)) {
        return "premise is not G --> A1..An, D";
      }
      return {};
    }
    case Rule::kThLeft: {
      if (!(err = want_premises(2)).empty()) return err;
      if (g.empty() || !is_th(g[0]) || g[0].index < 1 || g[0].children.empty()) {
        return "conclusion does not start with Thi(A1..An), i, n >= 1, on the left";
      }
      const TcFormula& th = g[0];
      if (prem[0]->succedent != d || !equals_concat(prem[0]->antecedent, {th_tail(th.index, th)}, g, 1)) {
        return "premise 1 is not Thi(A2..An), G --> D";
      }
      if (prem[1]->succedent != d ||
          !equals_concat(prem[1]->antecedent, {th_tail(th.index - 1, th), th.children[0]}, g, 1)) {
        return "premise 2 is not Th(i-1)(A2..An), A1, G --> D";
      }
      return {};
    }
    case Rule::kThRight: {
      if (!(err = want_premises(2)).empty()) return err;
      if (d.empty() || !is_th(d[0]) || d[0].index < 1 || d[0].children.empty()) {
        return "conclusion does not start with Thi(A1..An), i, n >= 1, on the right";
      }
      const TcFormula& th = d[0];
      if (prem[0]->antecedent != g ||
          !equals_concat(prem[0]->succedent, {th_tail(th.index, th), th.children[0]}, d, 1)) {
        return "premise 1 is not G --> Thi(A2..An), A1, D";
      }
      if (prem[1]->antecedent != g || !equals_concat(prem[1]->succedent, {th_tail(th.index - 1, th)}, d, 1)) {
        return "premise 2 is not G --> Th(i-1)(A2..An), D";
      }
      return {};
    }
    case Rule::kCut: {
      if (!(err = want_premises(2)).empty()) return err;
      const Sequent& p = *prem[0];
      const Sequent& q = *prem[1];
      if (p.antecedent != g || p.succedent.empty() || !equals_concat(p.succedent, {p.succedent[0]}, d, 0)) {
        return "premise 1 is not G --> A, D";
      }
      if (q.succedent != d || !equals_concat(q.antecedent, g, {p.succedent[0]}, 0)) {
        return "premise 2 is not G, A --> D";
      }
      return {};
    }
  }
  return "unknown rule";
}

}  // namespace

ProofCheck check_proof(const TcProof& p, const std::optional<Sequent>& goal) {
  auto bad = [](std::size_t i, std::string msg) { return ProofCheck{false, i, std::move(msg)}; };
  if (p.steps.empty()) return bad(0, "empty proof");
  std::unordered_map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& step = p.steps[i];
    std::vector<const Sequent*> prem;
    for (std::size_t id : step.premises) {
      auto it = position.find(id);
      if (it == position.end()) {
        return bad(i, "step " + std::to_string(step.id) + ": premise " + std::to_string(id) + " is not an earlier step");
      }
      prem.push_back(&p.steps[it->second].sequent);
    }
    const std::string err = check_step(step, prem);
    if (!err.empty()) return bad(i, "step " + std::to_string(step.id) + " (" + to_string(step.rule) + "): " + err);
    if (!position.emplace(step.id, i).second) return bad(i, "duplicate step id " + std::to_string(step.id));
  }
  if (goal && p.steps.back().sequent != *goal) {
    return bad(p.steps.size() - 1, "last sequent is not the goal " + to_string(*goal));
  }
  return {};
}

bool proves(const TcProof& p, const TcFormula& phi) { return check_proof(p, Sequent{{}, {phi}}).ok; }

// Substitution --------------------------------------------------------------------------

TcFormula substitute(const TcFormula& f, const std::map<std::uint32_t, bool>& values) {
  if (f.kind == Kind::kVar) {
    auto it = values.find(f.index);
    if (it == values.end()) return f;
    return it->second ? TcFormula::top() : TcFormula::bot();
  }
  TcFormula out{f.kind, f.index, {}};
  out.children.reserve(f.children.size());
  for (const auto& c : f.children) out.children.push_back(substitute(c, values));
  return out;
}

TcProof substitute(const TcProof& p, const std::map<std::uint32_t, bool>& values) {
  TcProof out = p;
  if (values.empty()) return out;
  for (auto& step : out.steps) {
    for (auto& f : step.sequent.antecedent) f = substitute(f, values);
    for (auto& f : step.sequent.succedent) f = substitute(f, values);
  }
  return out;
}

// Deciding constant formulas -------------------------------------------------------------

namespace {

bool eval_constant(const TcFormula& f) { return eval(f, Assignment{}); }

class Decider {
 public:
  // Id of a step concluding `--> f` if f is true, `f -->` otherwise.
  std::size_t prove(const TcFormula& f) {
    const std::string key = to_string(f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t id = build(f);
    memo_.emplace(key, id);
    return id;
  }

  TcProof take() { return std::move(proof_); }

  std::size_t add(Rule r, std::vector<std::size_t> premises, Formulas g, Formulas d) {
    const std::size_t id = proof_.steps.size() + 1;
    proof_.steps.push_back({id, r, std::move(premises), Sequent{std::move(g), std::move(d)}});
    return id;
  }

 private:
  std::size_t build(const TcFormula& f) {
    const bool value = eval_constant(f);
    switch (f.kind) {
      case Kind::kTrue: return add(Rule::kAxiom, {}, {}, {f});
      case Kind::kFalse: return add(Rule::kAxiom, {}, {f}, {});
      case Kind::kNot: {
        const std::size_t sub = prove(f.children[0]);
        // value: from A --> get --> ~A; else from --> A get ~A -->
        return value ? add(Rule::kNotRight, {sub}, {}, {f}) : add(Rule::kNotLeft, {sub}, {f}, {});
      }
      case Kind::kTh: return build_th(f, value);
      case Kind::kVar: break;
    }
    throw std::invalid_argument("formula has variables");
  }

  std::size_t build_th(const TcFormula& f, bool value) {
    const std::size_t n = f.children.size();
    if (f.index == 0) return add(Rule::kAxiom, {}, {}, {f});
    if (f.index > n) return add(Rule::kAxiom, {}, {f}, {});
    const TcFormula& a1 = f.children[0];
    const TcFormula rest = th_tail(f.index, f);
    const TcFormula rest_lower = th_tail(f.index - 1, f);
    const bool a1_true = eval_constant(a1);
    if (value) {
      // premise 1: --> Th_i(rest), A1
      std::size_t p1;
      if (a1_true) {
        p1 = add(Rule::kWeakenRight, {prove(a1)}, {}, {rest, a1});
      } else {
        const std::size_t w = add(Rule::kWeakenRight, {prove(rest)}, {}, {a1, rest});
        p1 = add(Rule::kExchangeRight, {w}, {}, {rest, a1});
      }
      const std::size_t p2 = prove(rest_lower);
      return add(Rule::kThRight, {p1, p2}, {}, {f});
    }
    const std::size_t p1 = prove(rest);
    // premise 2: Th_{i-1}(rest), A1 -->
    std::size_t p2;
    if (a1_true) {
      p2 = add(Rule::kWeakenLeft, {prove(rest_lower)}, {rest_lower, a1}, {});
    } else {
      const std::size_t w = add(Rule::kWeakenLeft, {prove(a1)}, {a1, rest_lower}, {});
      p2 = add(Rule::kExchangeLeft, {w}, {rest_lower, a1}, {});
    }
    return add(Rule::kThLeft, {p1, p2}, {f}, {});
  }

  TcProof proof_;
  std::unordered_map<std::string, std::size_t> memo_;
};

}  // namespace

TcProof decide_constant_formula(const TcFormula& phi) {
  if (has_variables(phi)) throw std::invalid_argument("decide_constant_formula: formula has variables");
  Decider dec;
  const std::size_t last = dec.prove(phi);
  if (!eval_constant(phi)) dec.add(Rule::kNotRight, {last}, {}, {TcFormula::neg(phi)});
  return dec.take();
}

}  // namespace fko
