#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fko/cnf.hpp"
#include "fko/exactq.hpp"

namespace fko {

inline constexpr unsigned kDefaultPrecisionExponent = 8;

/// Approximate eigensystem of M on the 1/n^{2c} grid.
///
/// Row i of `vectors` approximates the unit eigenvector for lambdas[i];
/// lambdas are weakly decreasing. k3..k5 scale the residual tolerances
/// checked by certify_eigvalbound.
struct SpectralCert {
  std::vector<Rat> lambdas;
  QMat vectors;
  unsigned c = kDefaultPrecisionExponent;
  Rat k3 = 16;
  Rat k4 = 16;
  Rat k5 = 16;

  friend bool operator==(const SpectralCert&, const SpectralCert&) = default;
};

/// Exact residuals of a certificate and the verdict of each condition.
struct CertReport {
  Rat rho;        ///< max_i ||e~_i - e_i||_inf with e~_i = sum_j v_ji v_j
  Rat gram_off;   ///< max_{i!=j} |<v_i, v_j>|
  Rat gram_diag;  ///< max_i |<v_i, v_i> - 1|
  Rat tau;        ///< max_i ||M v_i - lambda_i v_i||_inf
  Rat slack;      ///< certified bound on max_a a^T M a - lambda_1 n
  /// Conditions 1..5: grid membership, |v_ij| <= 2, basis reconstruction,
  /// near-orthonormality, eigen-residual with descending order.
  std::array<bool, 5> pass{};

  bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3] && pass[4]; }
  /// 1-based index of the first failing condition, 0 when all pass.
  int first_failure() const;
};

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Clause-polarity matrix: M_ij = sum over clauses containing x_i and x_j
/// of +1/2 (different polarity) or -1/2 (same polarity); zero diagonal.
QMat build_m(const Cnf& k);

/// sum_{i<j in clause} 2 E_ij a_i a_j for a single clause: +1 if the clause
/// is NAE under `a`, -3 otherwise.
Rat clause_contribution(const Clause& c, const SignVector& a);

struct EigenOptions {
  unsigned c = kDefaultPrecisionExponent;
  /// Cyclic sweeps before giving up.
  unsigned max_sweeps = 100;
};

/// Cyclic Jacobi at working precision well below n^-(2c+4), then snapping of
/// eigenvalues and eigenvectors to the 1/n^{2c} grid. Deterministic.
/// Throws SpectralError for non-symmetric input or when the off-diagonal
/// mass does not fall below n^-(2c+4) within max_sweeps.
SpectralCert approx_eigen(const QMat& m, const EigenOptions& opts = {});

/// Checks the five certificate conditions exactly and computes the certified
/// slack. Tolerance failures are reported, not thrown; only dimension
/// mismatches throw DimensionError.
CertReport certify_eigvalbound(const QMat& m, const SpectralCert& cert);

/// U = lambda_1 n + slack, an exact upper bound on a^T M a over a in {-1,1}^n.
/// Throws SpectralError if `report` does not pass.
Rat certified_quadform_bound(const QMat& m, const SpectralCert& cert, const CertReport& report);

/// Maximum of the certificate's eigenvalues (lambda_1 when sorted).
Rat max_lambda(const SpectralCert& cert);

}  // namespace fko
