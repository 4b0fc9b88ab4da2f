#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fko/cnf.hpp"
#include "fko/spectral.hpp"

namespace fko::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string input;    ///< CNF (or proof for checkproof); "-" is stdin
  std::string witness;  ///< witness JSON for verify
  std::string output;   ///< empty: stdout
  std::uint32_t n = 0;
  std::optional<std::size_t> m;  ///< gen/sweep default: ceil(n^1.4)
  std::uint64_t seed = 1;
  unsigned c = kDefaultPrecisionExponent;
  std::size_t d = 4;
  std::size_t k_max = 6;
  std::size_t budget = 64;
  std::uint32_t oracle_cap = kDefaultOracleCap;
  std::string format;  ///< json | csv; empty picks the command's default
  // sweep
  std::vector<std::uint32_t> ns;
  std::size_t seeds = 1;
  double m_factor = 1.0;  ///< m = ceil(m_factor * n^1.4) when m is unset
  // checkproof
  std::optional<std::string> goal;
};

/// ceil(factor * n^1.4).
std::size_t fko_density(std::uint32_t n, double factor = 1.0);

/// Dispatches on cfg.subcommand. Reports go to `out`, diagnostics to `err`.
/// Returns 0 (accepted/valid), 1 (rejected/failure) or 2 (usage/I-O).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_refute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_checkproof(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct SweepRow {
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::size_t t_found = 0;
  std::optional<std::size_t> t_needed;  ///< unset when certification failed
  double lambda = 0;
  std::size_t imbalance = 0;
  bool accepted = false;
};

/// Rows sorted by (n, seed); independent of FKO_THREADS.
std::vector<SweepRow> sweep(const RunConfig& cfg);

}  // namespace fko::cli
