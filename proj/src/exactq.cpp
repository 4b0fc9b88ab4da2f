#include "fko/exactq.hpp"

#include <ostream>

namespace fko {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (num.empty() || n.set_str(num, 10) != 0) throw std::invalid_argument("bad numerator '" + num + "'");
  if (den.empty() || d.set_str(den, 10) != 0) throw std::invalid_argument("bad denominator '" + den + "'");
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rat(n, d);
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

// QMat -------------------------------------------------------------------------

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) : n_(rows.size()), e_() {
  e_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionError("QMat rows must form a square matrix");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVec QMat::row(std::size_t i) const {
  return QVec(std::vector<Rat>(e_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                               e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)));
}

void QMat::set_row(std::size_t i, const QVec& v) {
  if (v.size() != n_) throw DimensionError("row length mismatch");
  for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = v[j];
}

bool QMat::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

// Vector algebra ---------------------------------------------------------------

Rat inner_prod(const QVec& u, const QVec& v) {
  if (u.size() != v.size()) throw DimensionError("inner_prod: length mismatch");
  mpq_class acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i].raw() * v[i].raw();
  return Rat(acc);
}

QVec mat_vec(const QMat& m, const QVec& v) {
  if (m.n() != v.size()) throw DimensionError("mat_vec: dimension mismatch");
  QVec out(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    mpq_class acc;
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (m(i, j).sign() != 0) acc += m(i, j).raw() * v[j].raw();
    }
    out[i] = Rat(acc);
  }
  return out;
}

Rat quadratic_form(const QVec& a, const QMat& m) {
  if (m.n() != a.size()) throw DimensionError("quadratic_form: dimension mismatch");
  mpq_class acc;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (m(i, j).sign() != 0) acc += m(i, j).raw() * a[i].raw() * a[j].raw();
    }
  }
  return Rat(acc);
}

Rat norm_inf(const QVec& v) {
  Rat best;
  for (const auto& x : v.entries()) {
    Rat ax = abs(x);
    if (ax > best) best = std::move(ax);
  }
  return best;
}

GramDeviation gram_dev(const QMat& v) {
  GramDeviation g;
  const std::size_t n = v.n();
  std::vector<QVec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(v.row(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rat ip = inner_prod(rows[i], rows[j]);
      if (i == j) {
        Rat dev = abs(ip - 1);
        if (dev > g.diag_max_dev) g.diag_max_dev = std::move(dev);
      } else {
        Rat dev = abs(ip);
        if (dev > g.offdiag_max) g.offdiag_max = std::move(dev);
      }
    }
  }
  return g;
}

// Real ---------------------------------------------------------------------------

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(mpfr_prec_t bits, long v) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(mpfr_prec_t bits, const Rat& q) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(mpfr_prec_t bits, const std::string& decimal) {
  mpfr_init2(v_, bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("bad decimal '" + decimal + "'");
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

// Grid -------------------------------------------------------------------------------

mpz_class grid_denominator(std::uint64_t n, unsigned c) {
  mpz_class base(static_cast<unsigned long>(n));
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), 2ul * c);
  return out;
}

bool on_grid(const Rat& x, const mpz_class& grid_den) {
  return mpz_divisible_p(grid_den.get_mpz_t(), x.raw().get_den_mpz_t()) != 0;
}

Rat snap_to_grid(const Real& x, std::uint64_t n, unsigned c) {
  if (c < 1 || n < 1) throw std::invalid_argument("snap_to_grid needs n >= 1 and c >= 1");
  const mpz_class den = grid_denominator(n, c);
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(den.get_mpz_t(), 2)) + x.precision() + 8;
  Real scaled(bits);
  mpfr_mul_z(scaled.get(), x.get(), den.get_mpz_t(), MPFR_RNDN);
  mpz_class numer;
  mpfr_get_z(numer.get_mpz_t(), scaled.get(), MPFR_RNDN);
  return Rat(numer, den);
}

Rat snap_to_grid(const Rat& x, std::uint64_t n, unsigned c) {
  if (c < 1 || n < 1) throw std::invalid_argument("snap_to_grid needs n >= 1 and c >= 1");
  const mpz_class den = grid_denominator(n, c);
  // round-half-up of x * den
  const Rat scaled = x * Rat(den) + Rat(1, 2);
  return Rat(scaled.floor(), den);
}

}  // namespace fko
