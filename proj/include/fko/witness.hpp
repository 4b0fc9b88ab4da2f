#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fko/cnf.hpp"
#include "fko/exactq.hpp"
#include "fko/spectral.hpp"
#include "fko/tuples.hpp"

namespace fko {

/// Everything the verifier needs to conclude that a 3CNF is unsatisfiable.
/// `m_matrix` may be left empty (0x0); the verifier recomputes M anyway and
/// only compares when it is present.
struct FkoWitness {
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::size_t imbalance = 0;
  QMat m_matrix;
  SpectralCert cert;
  Rat lambda;
  TupleCollection collection;
  Rat epsilon;

  friend bool operator==(const FkoWitness&, const FkoWitness&) = default;
};

/// Conjuncts in the order the verifier checks them.
enum class Conjunct { kNone, k3Cnf, kColl, kImb, kMat, kEigValBound, kLambdaMax, kInequality };

const char* to_string(Conjunct c);

struct Verdict {
  bool accepted = false;
  Conjunct failed = Conjunct::kNone;
  std::string detail;
  // Set on acceptance.
  Rat u;                       ///< lambda n + margin
  std::size_t unsat_lower = 0; ///< ceil(t/d)
  Rat margin;                  ///< max(epsilon, certified slack)

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Re-checks every conjunct from K alone and accepts iff
/// t > d (I + lambda n + margin) / 2 exactly. Never throws on bad witnesses.
Verdict verify_witness(const Cnf& k, const FkoWitness& w);

struct BuildOptions {
  unsigned c = kDefaultPrecisionExponent;
  std::size_t d = 4;
  std::size_t k_max = 6;
  std::size_t budget = 64;
  std::uint64_t seed = 0;
};

enum class BuildStage { kNone, kCertification, kCollection };

const char* to_string(BuildStage s);

struct BuildResult {
  bool ok = false;
  BuildStage failed = BuildStage::kNone;
  std::string detail;
  /// Filled as far as the pipeline got; on collection failure it holds the
  /// best collection found.
  FkoWitness witness;
  std::size_t t_target = 0;
};

/// I, M, certificate, then a collection with t >= t_target, the least t with
/// t > d (I + lambda n + epsilon) / 2. epsilon is the slack rounded up to
/// the grid plus one grid step.
BuildResult build_witness(const Cnf& k, const BuildOptions& opts = {});

/// (lambda n + 3m + slack) / 4 >= count_nae(K, A) for every A.
/// Throws SpectralError if the certificate does not pass.
Rat nae_upper_bound(const FkoWitness& w, const Cnf& k);
/// (I + lambda n + slack) / 2 >= count_two_true(K, A) - 3 count_not_sat(K, A)
/// for every A, so it bounds count_two_true on satisfying assignments.
Rat two_lit_upper_bound(const FkoWitness& w, const Cnf& k);
/// ceil(t/d); 0 for an empty collection. Throws std::invalid_argument when
/// d = 0 and t > 0.
std::size_t unsat3xor_lower_bound(const FkoWitness& w);

// JSON ---------------------------------------------------------------------

class WitnessFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {n, m, c, I, lambda, lambdas[], V[][], D{t,k,d,tuples[][]}, epsilon,
/// K3, K4, K5}; rationals as {"num": "...", "den": "..."}. M is omitted.
std::string witness_to_json(const FkoWitness& w);
/// Throws WitnessFormatError on malformed input.
FkoWitness witness_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v);

}  // namespace fko
