#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qtheta/halfint.hpp"
#include "qtheta/qseries.hpp"

namespace qtheta {

/// Two-variable truncated expansion sum_r c_r(q) zeta^r with r in (1/2)Z.
///
/// Every coefficient is known modulo q^qprec(); exponents whose coefficient is zero to
/// that precision are not stored, so the stored window is finite and shrinks with qprec.
class ZetaQSeries {
 public:
  explicit ZetaQSeries(ExpRat qprec) : qprec_(qprec) {}

  const ExpRat& qprec() const { return qprec_; }
  /// Keyed by twice the zeta exponent.
  const std::map<std::int64_t, QSeries>& terms() const { return terms_; }

  /// Adds s * zeta^r, truncating to qprec().
  void add(HalfInt r, const QSeries& s);
  /// Coefficient of zeta^r (zero to qprec() when absent).
  QSeries coeff(HalfInt r) const;

  /// Minimum over stored coefficients of their valuation, capped at qprec().
  ExpRat min_valuation() const;

 private:
  ExpRat qprec_;
  std::map<std::int64_t, QSeries> terms_;
};

struct ZetaDifference {
  HalfInt zeta_exponent;
  ExpRat q_exponent;
  Integer lhs;
  Integer rhs;
};

/// First (zeta, q) position, in increasing zeta then q order, where a and b differ
/// below min(qprec).
std::optional<ZetaDifference> first_difference(const ZetaQSeries& a, const ZetaQSeries& b);
bool operator==(const ZetaQSeries& a, const ZetaQSeries& b);

ZetaQSeries zq_add(const ZetaQSeries& a, const ZetaQSeries& b);
ZetaQSeries zq_mul(const ZetaQSeries& a, const ZetaQSeries& b);
ZetaQSeries zq_scale(const ZetaQSeries& f, const QSeries& s);
ZetaQSeries zq_pow(const ZetaQSeries& f, unsigned k);
QSeries coeff_zeta(const ZetaQSeries& f, HalfInt r);

/// -theta(z + 1/2; tau) = sum_n q^{(n + 1/2)^2 / 2} zeta^{n + 1/2}.
ZetaQSeries jtheta_half(const ExpRat& qprec);

/// The same function from the product side:
///   q^{1/8} zeta^{1/2} (q;q)_inf (-zeta q;q)_inf (-zeta^{-1};q)_inf.
ZetaQSeries jtheta_triple_product(const ExpRat& qprec);

/// theta_{m,a}(z;tau) = sum_n q^{(2mn + a)^2 / 4m} zeta^{2mn + a}.
/// Throws GridMismatch unless m and a are both integers or both in 1/2 + Z.
ZetaQSeries theta_component(HalfInt m, HalfInt a, const ExpRat& qprec);

/// (-zeta q;q)_inf^k (-zeta^{-1};q)_inf^k; its zeta^0 coefficient is the k-colored
/// Frobenius partition generating function.
ZetaQSeries andrews_product(unsigned k, const ExpRat& qprec);

}  // namespace qtheta
