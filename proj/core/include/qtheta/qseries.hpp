#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtheta/exprat.hpp"

namespace qtheta {

using Integer = mpz_class;

/// Truncated formal series in q with exponents on the lattice (1/D)Z and exact integer
/// coefficients. The series is known modulo q^precision().
///
/// Storage is dense from the lowest nonzero exponent: coeffs()[i] multiplies
/// q^{(val + i)/D}. A series that is zero to its precision stores no coefficients.
/// After construction the lattice denominator is reduced to the smallest D that still
/// represents every stored exponent and the precision exactly.
class QSeries {
 public:
  /// The zero series known to precision 0 (i.e. nothing is known).
  QSeries() = default;

  /// Raw constructor; exponents are (val + i)/lattice_den, precision is prec/lattice_den.
  /// Coefficients at or above the precision are discarded.
  QSeries(std::int64_t lattice_den, std::int64_t val, std::vector<Integer> coeffs, std::int64_t prec);

  static QSeries zero(const ExpRat& prec);
  static QSeries one(const ExpRat& prec) { return monomial(1, 0, prec); }
  static QSeries monomial(const Integer& coeff, const ExpRat& exponent, const ExpRat& prec);

  /// Ordinary power series sum_{n < coeffs.size()} coeffs[n] q^n known to q^{coeffs.size()}.
  static QSeries from_integer_coeffs(std::vector<Integer> coeffs);

  std::int64_t lattice_den() const { return den_; }
  /// Numerator (over lattice_den) of the lowest stored exponent; meaningless for zero.
  std::int64_t val() const { return val_; }
  /// Numerator (over lattice_den) of the precision.
  std::int64_t prec() const { return prec_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  ExpRat precision() const { return ExpRat(prec_, den_); }
  /// Lowest exponent with a nonzero coefficient; the precision for the zero series.
  ExpRat valuation() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^exponent. Throws DomainError when exponent >= precision.
  Integer coeff(const ExpRat& exponent) const;
  const Integer& leading_coeff() const;

  /// Number of stored nonzero terms.
  std::size_t nonzero_terms() const;

  /// Same series, known only below min(precision, p).
  QSeries truncated(const ExpRat& p) const;
  /// Multiply by q^e.
  QSeries shifted(const ExpRat& e) const;
  /// Re-express on lattice d (a multiple of lattice_den()); used by serialization and tests.
  std::vector<Integer> dense_on(std::int64_t d, std::int64_t from, std::int64_t to) const;

  /// First n coefficients of an ordinary power series (lattice 1, valuation >= 0).
  /// Throws LatticeError on fractional exponents, DomainError if n exceeds the precision.
  std::vector<Integer> integer_coeffs(std::size_t n) const;

  QSeries operator-() const;
  QSeries& operator*=(const Integer& c);

  /// Equality modulo q^{min(precision)}.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  /// Lowest exponent below min(precision) where a and b differ.
  friend std::optional<ExpRat> first_difference(const QSeries& a, const QSeries& b);

 private:
  void normalize();

  std::int64_t den_ = 1;
  std::int64_t val_ = 0;
  std::vector<Integer> coeffs_;
  std::int64_t prec_ = 0;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
/// Precision of the product is min(val(a) + prec(b), val(b) + prec(a)).
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_pow(const QSeries& a, unsigned k);
/// Inverse to precision min(prec, what a's own precision supports).
/// Throws NonUnitLeading unless the leading coefficient is +1 or -1.
QSeries qs_inv(const QSeries& a, const ExpRat& prec);
QSeries qs_div(const QSeries& a, const QSeries& b);
/// Substitution q -> q^k.
QSeries qs_rescale(const QSeries& s, std::int64_t k);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return qs_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return qs_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }
inline QSeries operator*(const Integer& c, QSeries s) { return s *= c; }

std::ostream& operator<<(std::ostream& os, const QSeries& s);
std::string to_string(const QSeries& s);

// ---- builders -------------------------------------------------------------

/// (q^a; q^step)_inf = prod_{n >= 0} (1 - q^{a + n step}) modulo q^prec.
/// Throws ZeroFactor if a <= 0 and DomainError if step <= 0.
QSeries pochhammer(const ExpRat& a, const ExpRat& step, const ExpRat& prec);

/// Dedekind eta: q^{1/24} (q;q)_inf.
QSeries eta(const ExpRat& prec);

/// Klein form t_{a,0} = -q^{a^2/2 - a/2 + 1/12} (q^a;q)(q^{1-a};q) / (q;q)^2, for 0 < a < 1.
QSeries klein(const ExpRat& a, const ExpRat& prec);

/// Canonical residue a' in [0, m] with a = +-a' (mod 2m).
std::int64_t theta_normalize(std::int64_t m, std::int64_t a);

/// theta_{m,a}(scale * tau) = sum_n q^{scale (2mn + a)^2 / 4m}.
QSeries theta_series(std::int64_t m, std::int64_t a, std::int64_t scale, const ExpRat& prec);

/// theta_{m,b} as an infinite product. For 0 < b < m this is the triple product
///   q^{b^2/4m} (q^{2m};q^{2m}) (-q^{m-b};q^{2m}) (-q^{m+b};q^{2m})
/// with (-x;q) rewritten as (x^2;q^2)/(x;q). For b in {0, m} the series is summed directly.
/// Throws DomainError for b outside [0, m].
QSeries theta_product(std::int64_t m, std::int64_t b, std::int64_t scale, const ExpRat& prec);

/// theta_{m,b} through Klein forms:
///   q^{m/12} (q^{4m};q^{4m})^2 / (q^{2m};q^{2m}) * t_{x,0}(4m tau) / t_{x,0}(2m tau),
/// x = 1/2 + b/2m, valid for 0 <= b < m.
QSeries theta_klein(std::int64_t m, std::int64_t b, std::int64_t scale, const ExpRat& prec);

}  // namespace qtheta
