#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fko {

/// Exact rational in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(unsigned v) : q_(v) {}       // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& num, const mpz_class& den = 1);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses decimal numerator/denominator strings. Throws std::invalid_argument.
  static Rat from_strings(const std::string& num, const std::string& den);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }
  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  mpz_class floor() const;
  mpz_class ceil() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat abs(const Rat& x);
std::ostream& operator<<(std::ostream& os, const Rat& x);

/// Exact rational vector.
class QVec {
 public:
  QVec() = default;
  explicit QVec(std::size_t n) : e_(n) {}
  QVec(std::initializer_list<Rat> init) : e_(init) {}
  explicit QVec(std::vector<Rat> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  Rat& operator[](std::size_t i) { return e_[i]; }
  const Rat& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Rat>& entries() const { return e_; }

  friend bool operator==(const QVec&, const QVec&) = default;

 private:
  std::vector<Rat> e_;
};

/// Exact square rational matrix, row-major.
class QMat {
 public:
  QMat() = default;
  explicit QMat(std::size_t n) : n_(n), e_(n * n) {}
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);
  static QMat identity(std::size_t n);

  std::size_t n() const { return n_; }
  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  QVec row(std::size_t i) const;
  void set_row(std::size_t i, const QVec& v);
  bool is_symmetric() const;

  friend bool operator==(const QMat&, const QMat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rat> e_;
};

/// Raised on length/dimension mismatches.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rat inner_prod(const QVec& u, const QVec& v);
QVec mat_vec(const QMat& m, const QVec& v);
/// sum_ij M_ij a_i a_j.
Rat quadratic_form(const QVec& a, const QMat& m);
Rat norm_inf(const QVec& v);

struct GramDeviation {
  Rat offdiag_max;  ///< max |<v_i, v_j>|, i != j
  Rat diag_max_dev; ///< max |<v_i, v_i> - 1|
};

/// Gram deviation of the rows of `v` from orthonormality.
GramDeviation gram_dev(const QMat& v);

// High-precision scalar -------------------------------------------------------

/// Owning MPFR value with an explicit bit precision. Precision is a property
/// of each value, never of global state.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(mpfr_prec_t bits, long v);
  Real(mpfr_prec_t bits, const Rat& q);
  /// Parses a decimal string at the given precision.
  Real(mpfr_prec_t bits, const std::string& decimal);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Nearest integer multiple of 1/n^{2c}; the error is at most 1/(2 n^{2c}).
/// Requires c >= 1 and n >= 1.
Rat snap_to_grid(const Real& x, std::uint64_t n, unsigned c);
Rat snap_to_grid(const Rat& x, std::uint64_t n, unsigned c);

/// n^{2c}, the shared grid denominator.
mpz_class grid_denominator(std::uint64_t n, unsigned c);
/// True iff x * n^{2c} is an integer.
bool on_grid(const Rat& x, const mpz_class& grid_den);

}  // namespace fko
