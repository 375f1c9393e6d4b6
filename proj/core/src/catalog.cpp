#include <sstream>

#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/frobenius.hpp"

namespace qtheta {

namespace {

ThetaExpr T(std::int64_t m, std::int64_t a, std::int64_t scale = 1) { return ThetaExpr::theta(m, a, scale); }

std::vector<DisplayTerm> display6() {
  // Both theta_{2,1}(3t) terms; the printed theta_{3,1}(3t) is off the lattice of the rest.
  return {
      {"6 θ_{1,1}^2 θ_{1,0} θ_{2,1}(3τ) θ_{2,1}", 6, T(1, 1) * T(1, 1) * T(1, 0) * T(2, 1, 3) * T(2, 1)},
      {"θ_{1,0}^3 (θ_{1,1}(6τ) θ_{1,1}(2τ) + θ_{1,0}(6τ) θ_{1,0}(2τ))", 1,
       T(1, 0) * T(1, 0) * T(1, 0) * (T(1, 1, 6) * T(1, 1, 2) + T(1, 0, 6) * T(1, 0, 2))},
  };
}

std::vector<DisplayTerm> display7() {
  ThetaExpr t10 = T(1, 0), t11 = T(1, 1);
  ThetaExpr t10c = t10 * t10 * t10, t11c = t11 * t11 * t11;
  return {
      {"6 θ_{1,0}θ_{1,1}θ_{2,1}(θ_{6,3}(θ_{1,0}θ_{21,21} + θ_{1,1}θ_{21,0}) + (θ_{1,1}θ_{21,14} + "
       "θ_{1,0}θ_{21,7})(θ_{6,1} + θ_{6,5}))",
       6,
       t10 * t11 * T(2, 1) *
           (T(6, 3) * (t10 * T(21, 21) + t11 * T(21, 0)) + (t11 * T(21, 14) + t10 * T(21, 7)) * (T(6, 1) + T(6, 5)))},
      {"(θ_{1,0}^3θ_{21,0} + θ_{1,1}^3θ_{21,21})(θ_{2,0}θ_{6,0} + θ_{2,2}θ_{6,6})", 1,
       (t10c * T(21, 0) + t11c * T(21, 21)) * (T(2, 0) * T(6, 0) + T(2, 2) * T(6, 6))},
      {"2 (θ_{1,0}^3θ_{21,14} + θ_{1,1}^3θ_{21,7})(θ_{2,0}θ_{6,4} + θ_{2,2}θ_{6,2})", 2,
       (t10c * T(21, 14) + t11c * T(21, 7)) * (T(2, 0) * T(6, 4) + T(2, 2) * T(6, 2))},
  };
}

std::vector<DisplayTerm> display8() {
  ThetaExpr s10 = T(1, 0) * T(1, 0), s11 = T(1, 1) * T(1, 1);
  ThetaExpr first = s11 * T(2, 0) + s10 * T(2, 2);
  ThetaExpr last = s11 * T(2, 2) + s10 * T(2, 0);
  const std::string B1 = " (θ_{1,1}^2θ_{2,0} + θ_{1,0}^2θ_{2,2})";
  const std::string B3 = " (θ_{1,1}^2θ_{2,2} + θ_{1,0}^2θ_{2,0})";
  return {
      {"θ_{1,1}^2θ_{12,12}θ_{6,0}" + B1, 1, s11 * T(12, 12) * T(6, 0) * first},
      {"2θ_{1,0}^2θ_{12,8}θ_{6,2}" + B1, 2, s10 * T(12, 8) * T(6, 2) * first},
      {"2θ_{1,1}^2θ_{12,4}θ_{6,4}" + B1, 2, s11 * T(12, 4) * T(6, 4) * first},
      {"2θ_{1,0}^2θ_{12,0}θ_{6,6}" + B1, 2, s10 * T(12, 0) * T(6, 6) * first},
      {"4θ_{1,0}^2θ_{1,1}^2θ_{2,1}((θ_{12,0} + θ_{12,12})θ_{6,3} + (θ_{12,8} + θ_{12,4})(θ_{6,1} + θ_{6,5}))", 4,
       s10 * s11 * T(2, 1) * ((T(12, 0) + T(12, 12)) * T(6, 3) + (T(12, 8) + T(12, 4)) * (T(6, 1) + T(6, 5)))},
      {"θ_{1,1}^2θ_{12,12}θ_{6,6}" + B3, 1, s11 * T(12, 12) * T(6, 6) * last},
      {"2θ_{1,0}^2θ_{12,8}θ_{6,4}" + B3, 2, s10 * T(12, 8) * T(6, 4) * last},
      {"2θ_{1,1}^2θ_{12,4}θ_{6,2}" + B3, 2, s11 * T(12, 4) * T(6, 2) * last},
      {"θ_{1,0}^2θ_{12,0}θ_{6,0}" + B3, 1, s10 * T(12, 0) * T(6, 0) * last},
  };
}

QSeries over_euler(const QSeries& h, unsigned k, const ExpRat& prec) {
  return qs_mul(h, qs_inv(qs_pow(pochhammer(1, 1, prec), k), prec));
}

}  // namespace

bool in_catalog(unsigned k) { return k == 2 || k == 3 || k == 6 || k == 7 || k == 8; }

std::vector<DisplayTerm> catalog_display(unsigned k) {
  switch (k) {
    case 6: return display6();
    case 7: return display7();
    case 8: return display8();
    default: throw DomainError("no displayed h formula for k = " + std::to_string(k));
  }
}

ThetaExpr display_expr(const std::vector<DisplayTerm>& d) {
  ThetaExpr e;
  for (const auto& t : d) e += t.coeff * t.unit;
  return e;
}

CPhiSeries catalog_formula(unsigned k, std::size_t n_terms) {
  if (!in_catalog(k)) throw DomainError("k = " + std::to_string(k) + " is not in the catalog (2, 3, 6, 7, 8)");
  const ExpRat prec(static_cast<std::int64_t>(n_terms));
  QSeries s;
  if (k == 2) {
    ProductTerm t;
    t.multiply({2, 4, 1});
    t.multiply({1, 2, -4});
    t.multiply({4, 4, -1});
    s = eval_products({t}, prec);
  } else if (k == 3) {
    ProductTerm a, b;
    a.multiply({12, 12, 1});
    a.multiply({6, 12, 3});
    a.multiply({1, 6, -5});
    a.multiply({5, 6, -5});
    a.multiply({4, 4, -2});
    a.multiply({3, 6, -7});
    b.coeff = 4;
    b.q_power = 1;
    b.multiply({12, 12, 1});
    b.multiply({4, 4, 1});
    b.multiply({6, 12, -1});
    b.multiply({2, 4, -1});
    b.multiply({1, 1, -3});
    s = eval_products({a, b}, prec);
  } else {
    s = over_euler(eval_theta_expr(display_expr(catalog_display(k)), prec), k, prec);
  }
  return CPhiSeries{k, CPhiMethod::catalog, s.integer_coeffs(n_terms)};
}

Report catalog_report(unsigned k, std::size_t n_terms) {
  Report r{"cphi_" + std::to_string(k) + ": recursion = closed formula", "first " + std::to_string(n_terms) +
                                                                              " coefficients"};
  CPhiSeries rec = cphi_recursion(k, n_terms);
  CPhiSeries cat = catalog_formula(k, n_terms);
  std::size_t i = 0;
  while (i < n_terms && rec.coeffs[i] == cat.coeffs[i]) ++i;
  if (i == n_terms) return r;

  std::ostringstream first;
  first << "cphi_" << k << "(" << i << "): recursion " << rec.coeffs[i] << ", formula " << cat.coeffs[i];
  r.passed = false;
  r.first_failure = first.str();
  if (k < 6) return r;

  // Try to pin the whole difference on one display term.
  const ExpRat prec(static_cast<std::int64_t>(n_terms));
  auto display = catalog_display(k);
  ThetaEvaluator ev(prec);
  QSeries h = ev.eval(h_table(k).at(HalfInt::from_twice(k)));
  QSeries diff = qs_sub(ev.eval(display_expr(display)), h);
  for (const auto& term : display) {
    QSeries u = ev.eval(term.unit);
    if (u.is_zero() || diff.is_zero()) continue;
    ExpRat v = diff.valuation();
    Integer uc = u.coeff(v);
    if (sgn(uc) == 0 || !mpz_divisible_p(diff.leading_coeff().get_mpz_t(), uc.get_mpz_t())) continue;
    Integer lambda = diff.leading_coeff() / uc;
    if (!(qs_sub(diff, lambda * u).is_zero())) continue;
    Integer fixed = Integer(static_cast<long>(term.coeff)) - lambda;
    std::ostringstream os;
    os << "display term \"" << term.label << "\" carries coefficient " << term.coeff << "; the recursion requires "
       << fixed << " (the rest of the display agrees to q^" << to_string(prec) << ")";
    r.passed = true;
    r.discrepancy = os.str();
    r.notes.push_back("as printed: " + *r.first_failure);
    r.first_failure.reset();
    return r;
  }
  r.notes.push_back("no single display term accounts for the difference");
  return r;
}

std::vector<ProductTerm> cphi_formula(unsigned k) {
  if (k < 1) throw DomainError("k must be >= 1");
  auto terms = product_terms(h_table(k).at(HalfInt::from_twice(k)));
  for (auto& t : terms) t.multiply(PochFactor{1, 1, -static_cast<std::int64_t>(k)});
  return terms;
}

std::string cphi_formula_text(unsigned k) { return render_formula("CPhi_" + std::to_string(k) + "(q)", cphi_formula(k)); }

}  // namespace qtheta
