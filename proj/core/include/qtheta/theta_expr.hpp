#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtheta/qseries.hpp"

namespace qtheta {

/// The theta nullwert theta_{m,a}(scale * tau).
struct ThetaSymbol {
  std::int64_t m = 1;
  std::int64_t a = 0;
  std::int64_t scale = 1;

  /// theta_{m,a}(k tau) = theta_{km,ka}(tau), then a reduced into [0, m].
  ThetaSymbol canonical() const;

  friend auto operator<=>(const ThetaSymbol&, const ThetaSymbol&) = default;
};

std::string to_string(const ThetaSymbol& s);

/// Integer combination of products of theta nullwerte. Atoms are always stored in
/// canonical form (scale 1, 0 <= a <= m), sorted by (m, a); equal products are merged
/// and zero terms dropped, so structural equality is equality of canonical forms.
class ThetaExpr {
 public:
  using Monomial = std::vector<ThetaSymbol>;

  ThetaExpr() = default;
  static ThetaExpr constant(std::int64_t c);
  static ThetaExpr theta(std::int64_t m, std::int64_t a, std::int64_t scale = 1);

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial; the monomial must already be canonical and sorted.
  void add_term(Monomial mono, std::int64_t c);

  ThetaExpr& operator+=(const ThetaExpr& o);
  ThetaExpr& operator-=(const ThetaExpr& o);
  ThetaExpr& operator*=(std::int64_t c);

  friend ThetaExpr operator+(ThetaExpr a, const ThetaExpr& b) { return a += b; }
  friend ThetaExpr operator-(ThetaExpr a, const ThetaExpr& b) { return a -= b; }
  friend ThetaExpr operator*(const ThetaExpr& a, const ThetaExpr& b);
  friend ThetaExpr operator*(std::int64_t c, ThetaExpr e) { return e *= c; }
  friend bool operator==(const ThetaExpr&, const ThetaExpr&) = default;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

std::string to_string(const ThetaExpr& e);

/// An identity lhs = rhs between theta expressions, used as an opt-in rewrite.
struct RewriteRule {
  std::string name;
  ThetaExpr lhs;
  ThetaExpr rhs;
};

/// Replaces lambda * R * lhs by lambda * R * rhs wherever every monomial of lhs occurs
/// with the same cofactor R and the same scalar lambda. Repeats until nothing matches.
ThetaExpr apply_rewrites(ThetaExpr e, const std::vector<RewriteRule>& rules);

/// The two level-2 product identities:
///   theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3}
///   theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} = theta_{2,1}(theta_{6,1} + theta_{6,5})
std::vector<RewriteRule> level2_product_rules();

/// Evaluates theta expressions to a fixed q-precision, caching atom series.
class ThetaEvaluator {
 public:
  explicit ThetaEvaluator(ExpRat prec) : prec_(prec) {}

  const ExpRat& precision() const { return prec_; }
  const QSeries& atom(const ThetaSymbol& s);
  QSeries eval(const ThetaExpr& e);

 private:
  ExpRat prec_;
  std::map<ThetaSymbol, QSeries> cache_;
};

QSeries eval_theta_expr(const ThetaExpr& e, const ExpRat& prec);

}  // namespace qtheta
