#include "fko/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fko {

namespace {

// n^e for a possibly negative exponent.
Rat int_pow(std::size_t n, long e) {
  mpz_class p;
  mpz_class base(static_cast<unsigned long>(n));
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rat(mpz_class(1), p) : Rat(p);
}

mpz_class common_denominator(const std::vector<const Rat*>& xs) {
  mpz_class l = 1;
  for (const Rat* x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->raw().get_den_mpz_t());
  return l;
}

// Integer matrix Z with M = Z / den.
struct ScaledMat {
  std::size_t n = 0;
  mpz_class den;
  std::vector<mpz_class> z;
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return z[i * n + j]; }
};

ScaledMat scale_to_integers(const QMat& m) {
  std::vector<const Rat*> ptrs;
  ptrs.reserve(m.n() * m.n());
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) ptrs.push_back(&m(i, j));
  ScaledMat s;
  s.n = m.n();
  s.den = common_denominator(ptrs);
  s.z.resize(m.n() * m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      const mpq_class& q = m(i, j).raw();
      mpz_class f = s.den / q.get_den();
      s.z[i * s.n + j] = q.get_num() * f;
    }
  }
  return s;
}

Rat max_row_abs_sum(const ScaledMat& s) {
  mpz_class best = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < s.n; ++j) row += abs(s(i, j));
    if (row > best) best = row;
  }
  return Rat(best, s.den);
}

mpfr_prec_t working_bits(const QMat& m, unsigned c) {
  const double n = static_cast<double>(std::max<std::size_t>(m.n(), 2));
  double max_abs = 0;
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) max_abs = std::max(max_abs, std::fabs(m(i, j).to_double()));
  const double bits = std::log2(n) * (2.0 * c + 8.0) + std::log2(1.0 + max_abs * n) + 64.0;
  return static_cast<mpfr_prec_t>(std::ceil(bits));
}

}  // namespace

int CertReport::first_failure() const {
  for (int i = 0; i < 5; ++i) {
    if (!pass[static_cast<std::size_t>(i)]) return i + 1;
  }
  return 0;
}

QMat build_m(const Cnf& k) {
  const std::size_t n = k.n();
  // Counts of half-units.
  std::vector<long> halves(n * n, 0);
  for (const auto& c : k.clauses()) {
    for (int s = 0; s < 3; ++s) {
      for (int t = s + 1; t < 3; ++t) {
        const std::size_t i = c.vars[s] - 1, j = c.vars[t] - 1;
        const long e = c.pols[s] == c.pols[t] ? -1 : 1;
        halves[i * n + j] += e;
        halves[j * n + i] += e;
      }
    }
  }
  QMat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (halves[i * n + j] != 0) m(i, j) = Rat(halves[i * n + j], 2);
  return m;
}

Rat clause_contribution(const Clause& c, const SignVector& a) {
  Rat sum;
  for (int s = 0; s < 3; ++s) {
    for (int t = s + 1; t < 3; ++t) {
      const Rat e = c.pols[s] == c.pols[t] ? Rat(-1, 2) : Rat(1, 2);
      sum += Rat(2) * e * Rat(a[c.vars[s] - 1] * a[c.vars[t] - 1]);
    }
  }
  return sum;
}

Rat max_lambda(const SpectralCert& cert) {
  if (cert.lambdas.empty()) return Rat();
  return *std::max_element(cert.lambdas.begin(), cert.lambdas.end());
}

// Jacobi ----------------------------------------------------------------------

SpectralCert approx_eigen(const QMat& m, const EigenOptions& opts) {
  if (!m.is_symmetric()) throw SpectralError("approx_eigen: matrix is not symmetric");
  if (opts.c < 1) throw SpectralError("approx_eigen: precision exponent must be >= 1");
  const std::size_t n = m.n();
  SpectralCert cert;
  cert.c = opts.c;
  cert.vectors = QMat::identity(n);
  if (n == 0) return cert;
  if (n == 1) {
    cert.lambdas = {snap_to_grid(m(0, 0), 1, opts.c)};
    return cert;
  }

  const mpfr_prec_t bits = working_bits(m, opts.c);
  std::vector<Real> a;
  std::vector<Real> v;
  a.reserve(n * n);
  v.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.emplace_back(bits, m(i, j));
      v.emplace_back(bits, i == j ? 1L : 0L);
    }
  }
  auto at = [n](std::vector<Real>& x, std::size_t i, std::size_t j) -> Real& { return x[i * n + j]; };

  const Real threshold(bits, int_pow(n, -(2L * opts.c + 4)));
  Real threshold_sq(bits);
  mpfr_sqr(threshold_sq.get(), threshold.get(), MPFR_RNDN);

  Real off(bits), tmp(bits), theta(bits), t(bits), cs(bits), sn(bits), x(bits), y(bits);
  auto off_diagonal_mass = [&]() {
    mpfr_set_zero(off.get(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        mpfr_sqr(tmp.get(), at(a, i, j).get(), MPFR_RNDN);
        mpfr_add(off.get(), off.get(), tmp.get(), MPFR_RNDN);
      }
    }
  };

  bool converged = false;
  for (unsigned sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    off_diagonal_mass();
    if (mpfr_less_p(off.get(), threshold_sq.get())) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Real& apq = at(a, p, q);
        if (mpfr_zero_p(apq.get())) continue;
        // theta = (a_qq - a_pp) / (2 a_pq); t = sgn(theta) / (|theta| + sqrt(theta^2 + 1))
        mpfr_sub(theta.get(), at(a, q, q).get(), at(a, p, p).get(), MPFR_RNDN);
        mpfr_div(theta.get(), theta.get(), apq.get(), MPFR_RNDN);
        mpfr_div_2ui(theta.get(), theta.get(), 1, MPFR_RNDN);
        mpfr_sqr(tmp.get(), theta.get(), MPFR_RNDN);
        mpfr_add_ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
        mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
        mpfr_abs(t.get(), theta.get(), MPFR_RNDN);
        mpfr_add(t.get(), t.get(), tmp.get(), MPFR_RNDN);
        mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDN);
        if (mpfr_sgn(theta.get()) < 0) mpfr_neg(t.get(), t.get(), MPFR_RNDN);
        // c = 1 / sqrt(t^2 + 1), s = t c
        mpfr_sqr(cs.get(), t.get(), MPFR_RNDN);
        mpfr_add_ui(cs.get(), cs.get(), 1, MPFR_RNDN);
        mpfr_rec_sqrt(cs.get(), cs.get(), MPFR_RNDN);
        mpfr_mul(sn.get(), t.get(), cs.get(), MPFR_RNDN);

        auto rotate = [&](Real& first, Real& second) {
          // (first, second) <- (c first - s second, s first + c second)
          mpfr_mul(x.get(), cs.get(), first.get(), MPFR_RNDN);
          mpfr_mul(tmp.get(), sn.get(), second.get(), MPFR_RNDN);
          mpfr_sub(x.get(), x.get(), tmp.get(), MPFR_RNDN);
          mpfr_mul(y.get(), sn.get(), first.get(), MPFR_RNDN);
          mpfr_mul(tmp.get(), cs.get(), second.get(), MPFR_RNDN);
          mpfr_add(y.get(), y.get(), tmp.get(), MPFR_RNDN);
          mpfr_swap(first.get(), x.get());
          mpfr_swap(second.get(), y.get());
        };
        for (std::size_t k = 0; k < n; ++k) rotate(at(a, k, p), at(a, k, q));
        for (std::size_t k = 0; k < n; ++k) rotate(at(a, p, k), at(a, q, k));
        for (std::size_t k = 0; k < n; ++k) rotate(at(v, k, p), at(v, k, q));
        mpfr_set_zero(at(a, p, q).get(), 1);
        mpfr_set_zero(at(a, q, p).get(), 1);
      }
    }
  }
  if (!converged) {
    throw SpectralError("approx_eigen: off-diagonal mass above n^-(2c+4) after " +
                        std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return mpfr_greater_p(at(a, i, i).get(), at(a, j, j).get()) != 0;
  });

  cert.lambdas.clear();
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t col = order[r];
    cert.lambdas.push_back(snap_to_grid(at(a, col, col), n, opts.c));
    for (std::size_t k = 0; k < n; ++k) cert.vectors(r, k) = snap_to_grid(at(v, k, col), n, opts.c);
  }
  return cert;
}

// Certification -------------------------------------------------------------------

CertReport certify_eigvalbound(const QMat& m, const SpectralCert& cert) {
  const std::size_t n = m.n();
  if (cert.vectors.n() != n || cert.lambdas.size() != n) {
    throw DimensionError("certify_eigvalbound: certificate dimension does not match M");
  }
  CertReport rep;
  if (n == 0) {
    rep.pass.fill(true);
    return rep;
  }

  // Condition 1: grid membership.
  const mpz_class grid = cert.c >= 1 ? grid_denominator(n, cert.c) : mpz_class(1);
  bool grid_ok = cert.c >= 1;
  for (const auto& l : cert.lambdas) grid_ok = grid_ok && on_grid(l, grid);
  for (std::size_t i = 0; i < n && grid_ok; ++i)
    for (std::size_t j = 0; j < n && grid_ok; ++j) grid_ok = on_grid(cert.vectors(i, j), grid);
  rep.pass[0] = grid_ok;

  // Condition 2: |v_ij| <= 2.
  bool small = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) small = small && abs(cert.vectors(i, j)) <= Rat(2);
  rep.pass[1] = small;

  const ScaledMat vs = scale_to_integers(cert.vectors);
  const mpz_class den2 = vs.den * vs.den;

  // Condition 3: e~_i = sum_j v_ji v_j, i.e. V^T V = I + R.
  // Condition 4: Gram matrix of rows V V^T.
  mpz_class rho_num = 0, off_num = 0, diag_num = 0;
  mpz_class acc, dev;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = i; l < n; ++l) {
      acc = 0;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(acc.get_mpz_t(), vs(j, i).get_mpz_t(), vs(j, l).get_mpz_t());
      dev = i == l ? acc - den2 : acc;
      dev = abs(dev);
      if (dev > rho_num) rho_num = dev;

      acc = 0;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(acc.get_mpz_t(), vs(i, j).get_mpz_t(), vs(l, j).get_mpz_t());
      if (i == l) {
        dev = abs(mpz_class(acc - den2));
        if (dev > diag_num) diag_num = dev;
      } else {
        dev = abs(acc);
        if (dev > off_num) off_num = dev;
      }
    }
  }
  rep.rho = Rat(rho_num, den2);
  rep.gram_off = Rat(off_num, den2);
  rep.gram_diag = Rat(diag_num, den2);

  // Condition 5: t_i = M v_i - lambda_i v_i.
  const ScaledMat ms = scale_to_integers(m);
  const mpz_class mv_den = ms.den * vs.den;
  Rat tau;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (ms(l, j) != 0) mpz_addmul(acc.get_mpz_t(), ms(l, j).get_mpz_t(), vs(i, j).get_mpz_t());
      }
      Rat r = abs(Rat(acc, mv_den) - cert.lambdas[i] * cert.vectors(i, l));
      if (r > tau) tau = std::move(r);
    }
  }
  rep.tau = tau;

  const bool descending =
      std::is_sorted(cert.lambdas.begin(), cert.lambdas.end(), [](const Rat& x, const Rat& y) { return x > y; });
  const long c = static_cast<long>(cert.c);
  const Rat tol34 = int_pow(n, -(c - 1));
  const Rat tol5 = int_pow(n, -(c - 3));
  rep.pass[2] = rep.rho <= cert.k3 * tol34;
  rep.pass[3] = rep.gram_off <= cert.k4 * tol34 && rep.gram_diag <= cert.k4 * tol34;
  rep.pass[4] = descending && rep.tau <= cert.k5 * tol5;

  // Certified slack; see certified_quadform_bound.
  const Rat nn(static_cast<unsigned long>(n));
  const Rat n2 = nn * nn;
  const Rat lambda1 = max_lambda(cert);
  Rat lambda_abs_max;
  for (const auto& l : cert.lambdas) lambda_abs_max = std::max(lambda_abs_max, abs(l));
  const Rat v_row = max_row_abs_sum(vs);
  const Rat m_row = max_row_abs_sum(ms);
  const Rat g = std::max(rep.gram_off, rep.gram_diag);
  const Rat& rho = rep.rho;

  rep.slack = abs(lambda1) * n2 * rho                       // lambda_1 a^T R a
              + lambda_abs_max * g * n2 * v_row * v_row     // off-orthonormal rows
              + n2 * (Rat(1) + nn * rho) * rep.tau * v_row  // eigen-residual term
              + Rat(2) * n2 * m_row * rho                   // 2 a^T M r
              + n2 * nn * m_row * rho * rho;                // r^T M r
  return rep;
}

// For a in {-1,1}^n let r = R a with V^T V = I + R, a~ = a + r and y = V a:
//   a^T M a  = a~^T M a~ - 2 a^T M r - r^T M r
//   a~^T M a~ = y^T (G Lambda + V T) y,   G = V V^T, T = M V^T - V^T Lambda
//   y^T G Lambda y <= lambda_1 |y|^2 + Lmax g (sum |y_j|)^2,  |y|^2 = n + a^T R a
// Each cross term is bounded with |r_l| <= n rho, |y_j| <= Vrow, |a~_l| <= 1 + n rho.
Rat certified_quadform_bound(const QMat& m, const SpectralCert& cert, const CertReport& report) {
  if (!report.all_pass()) {
    throw SpectralError("certified_quadform_bound: certificate fails condition " +
                        std::to_string(report.first_failure()));
  }
  return max_lambda(cert) * Rat(static_cast<unsigned long>(m.n())) + report.slack;
}

}  // namespace fko
