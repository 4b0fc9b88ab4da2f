#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fko/parallel.hpp"
#include "fko/tc0frege.hpp"
#include "fko/witness.hpp"
#include "json.hpp"

namespace fko::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("missing input file");
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to cfg.output, or to `out` when no path is set.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + cfg.output + "'");
}

Cnf load_cnf(const RunConfig& cfg) { return parse_dimacs(read_file(cfg.input)); }

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions o;
  o.c = cfg.c;
  o.d = cfg.d;
  o.k_max = cfg.k_max;
  o.budget = cfg.budget;
  o.seed = cfg.seed;
  return o;
}

void require_json(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "json") {
    throw UsageError("--format " + cfg.format + " is only supported by sweep");
  }
}

json build_failure(const BuildResult& r) {
  json j;
  j["ok"] = false;
  j["stage"] = to_string(r.failed);
  j["detail"] = r.detail;
  j["t_found"] = r.witness.collection.t;
  j["t_target"] = r.t_target;
  return j;
}

}  // namespace

std::size_t fko_density(std::uint32_t n, double factor) {
  return static_cast<std::size_t>(std::ceil(factor * std::pow(static_cast<double>(n), 1.4) - 1e-9));
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 3) throw UsageError("gen needs --n >= 3");
  const std::size_t m = cfg.m.value_or(fko_density(cfg.n));
  const Cnf k = gen_random_3cnf(cfg.n, m, cfg.seed);
  emit(cfg, out, to_dimacs(k));
  const double density = static_cast<double>(m) / std::pow(static_cast<double>(cfg.n), 1.4);
  std::ostream& info = cfg.output.empty() || cfg.output == "-" ? err : out;
  info << std::fixed << std::setprecision(3) << "m/n=" << static_cast<double>(m) / cfg.n
       << " m/n^1.4=" << density << (density >= 1.0 ? " (m >= n^1.4)" : " (m < n^1.4)") << '\n';
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_json(cfg);
  const Cnf k = load_cnf(cfg);
  const BuildResult r = build_witness(k, build_options(cfg));
  if (!r.ok) {
    out << build_failure(r).dump() << '\n';
    return kExitRejected;
  }
  emit(cfg, out, witness_to_json(r.witness));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_json(cfg);
  const Cnf k = load_cnf(cfg);
  const FkoWitness w = witness_from_json(read_file(cfg.witness));
  const Verdict v = verify_witness(k, w);
  out << verdict_to_json(v) << '\n';
  return v.accepted ? kExitOk : kExitRejected;
}

int cmd_refute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_json(cfg);
  const Cnf k = load_cnf(cfg);
  const BuildResult r = build_witness(k, build_options(cfg));
  if (!r.ok) {
    out << build_failure(r).dump() << '\n';
    return kExitRejected;
  }
  const Verdict v = verify_witness(k, r.witness);
  json j = json::parse(verdict_to_json(v));
  bool oracle_disagrees = false;
  if (k.n() <= cfg.oracle_cap) {
    const bool unsat = brute_force_unsat(k, cfg.oracle_cap);
    j["oracle_unsat"] = unsat;
    oracle_disagrees = v.accepted && !unsat;
  }
  out << j.dump() << '\n';
  if (oracle_disagrees) {
    err << "error: witness accepted on a satisfiable formula\n";
    return kExitRejected;
  }
  return v.accepted ? kExitOk : kExitRejected;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_json(cfg);
  const Cnf k = load_cnf(cfg);
  if (k.n() > cfg.oracle_cap) {
    throw UsageError("n=" + std::to_string(k.n()) + " exceeds --oracle-cap " + std::to_string(cfg.oracle_cap));
  }
  const OracleResult r = brute_force_sat(k, cfg.oracle_cap);
  json j;
  j["n"] = k.n();
  j["m"] = k.m();
  j["unsat"] = r.unsat;
  if (!r.unsat) {
    json model = json::array();
    for (std::uint32_t v = 1; v <= k.n(); ++v) model.push_back(r.model[v - 1] ? static_cast<int>(v) : -static_cast<int>(v));
    j["model"] = std::move(model);
  }
  out << j.dump() << '\n';
  return r.unsat ? kExitOk : kExitRejected;
}

int cmd_checkproof(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_json(cfg);
  const TcProof p = parse_proof(read_file(cfg.input));
  std::optional<Sequent> goal;
  if (cfg.goal) goal = Sequent{{}, {parse_formula(*cfg.goal)}};
  const ProofCheck c = check_proof(p, goal);
  json j;
  j["valid"] = c.ok;
  j["steps"] = p.steps.size();
  j["size"] = size(p);
  if (!c.ok) {
    j["step"] = c.step;
    j["message"] = c.message;
  } else if (!p.steps.empty()) {
    j["conclusion"] = to_string(p.steps.back().sequent);
  }
  out << j.dump() << '\n';
  return c.ok ? kExitOk : kExitRejected;
}

std::vector<SweepRow> sweep(const RunConfig& cfg) {
  std::vector<std::uint32_t> ns = cfg.ns;
  if (ns.empty() && cfg.n != 0) ns.push_back(cfg.n);
  if (ns.empty()) throw UsageError("sweep needs --ns or --n");
  if (cfg.seeds == 0) throw UsageError("sweep needs --seeds >= 1");
  std::sort(ns.begin(), ns.end());
  for (auto n : ns)
    if (n < 3) throw UsageError("sweep needs every n >= 3");

  std::vector<SweepRow> rows;
  for (auto n : ns)
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      SweepRow row;
      row.n = n;
      row.seed = cfg.seed + s;
      rows.push_back(row);
    }

  parallel_for(rows.size(), worker_count(), [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.m = cfg.m.value_or(fko_density(row.n, cfg.m_factor));
    const Cnf k = gen_random_3cnf(row.n, row.m, row.seed);
    BuildOptions o = build_options(cfg);
    o.seed = row.seed;
    const BuildResult r = build_witness(k, o);
    row.imbalance = r.witness.imbalance;
    row.lambda = r.witness.lambda.to_double();
    row.t_found = r.witness.collection.t;
    if (r.failed != BuildStage::kCertification) row.t_needed = r.t_target;
    row.accepted = r.ok && verify_witness(k, r.witness).accepted;
  });
  return rows;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  const auto rows = sweep(cfg);
  std::ostringstream os;
  if (format == "csv") {
    os << "n,seed,m,t_found,t_needed,lambda,I,accepted\n";
    for (const auto& r : rows) {
      os << r.n << ',' << r.seed << ',' << r.m << ',' << r.t_found << ',';
      if (r.t_needed) os << *r.t_needed;
      os << ',' << std::fixed << std::setprecision(6) << r.lambda << std::defaultfloat << ',' << r.imbalance
         << ',' << (r.accepted ? 1 : 0) << '\n';
    }
  } else {
    for (const auto& r : rows) {
      json j{{"n", r.n}, {"seed", r.seed}, {"m", r.m}, {"t_found", r.t_found}, {"lambda", r.lambda},
             {"I", r.imbalance}, {"accepted", r.accepted}};
      j["t_needed"] = r.t_needed ? json(*r.t_needed) : json(nullptr);
      os << j.dump() << '\n';
    }
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "gen") return cmd_gen(cfg, out, err);
    if (cfg.subcommand == "witness") return cmd_witness(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    if (cfg.subcommand == "refute") return cmd_refute(cfg, out, err);
    if (cfg.subcommand == "oracle") return cmd_oracle(cfg, out, err);
    if (cfg.subcommand == "checkproof") return cmd_checkproof(cfg, out, err);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out, err);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CnfError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const WitnessFormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const TcParseError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace fko::cli
