#include "qtheta/frobenius.hpp"

#include <sstream>

#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/identities.hpp"
#include "qtheta/jacobi.hpp"

namespace qtheta {

std::string to_string(CPhiMethod m) {
  switch (m) {
    case CPhiMethod::recursion: return "recursion";
    case CPhiMethod::product: return "product";
    case CPhiMethod::enumeration: return "enumerate";
    case CPhiMethod::catalog: return "catalog";
  }
  return "?";
}

CPhiMethod parse_method(const std::string& s) {
  if (s == "recursion") return CPhiMethod::recursion;
  if (s == "product") return CPhiMethod::product;
  if (s == "enumerate" || s == "enumeration") return CPhiMethod::enumeration;
  if (s == "catalog") return CPhiMethod::catalog;
  throw DomainError("unknown method '" + s + "'");
}

namespace {

std::vector<Integer> checked_counts(const QSeries& s, std::size_t n, const char* route) {
  auto c = s.integer_coeffs(n);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) < 0)
      throw std::logic_error(std::string(route) + " produced a negative count at n = " + std::to_string(i));
  return c;
}

}  // namespace

CPhiSeries cphi_recursion(unsigned k, std::size_t n_terms) {
  if (k < 1) throw DomainError("k must be >= 1");
  const ExpRat prec(static_cast<std::int64_t>(n_terms));
  HTable t = h_table(k);
  QSeries h = eval_theta_expr(t.at(HalfInt::from_twice(k)), prec);
  QSeries euler = qs_pow(pochhammer(1, 1, prec), k);
  QSeries c = qs_mul(h, qs_inv(euler, prec));
  return CPhiSeries{k, CPhiMethod::recursion, checked_counts(c, n_terms, "recursion")};
}

CPhiSeries cphi_product(unsigned k, std::size_t n_terms) {
  if (k < 1) throw DomainError("k must be >= 1");
  ZetaQSeries p = andrews_product(k, ExpRat(static_cast<std::int64_t>(n_terms)));
  return CPhiSeries{k, CPhiMethod::product, checked_counts(coeff_zeta(p, HalfInt::integer(0)), n_terms, "product")};
}

std::vector<Report> verify_bs_identities(const ExpRat& qprec) {
  const std::int64_t n = ceil(qprec) + 1;
  // Both sides summed straight from their definitions.
  std::vector<Integer> phi(static_cast<std::size_t>(n)), psi(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j * j < n; ++j) phi[static_cast<std::size_t>(j * j)] += j == 0 ? 1 : 2;
  for (std::int64_t j = 0; j * (j + 1) / 2 < n; ++j) psi[static_cast<std::size_t>(j * (j + 1) / 2)] += 1;
  QSeries phi_s = QSeries::from_integer_coeffs(phi);
  QSeries psi_s = QSeries::from_integer_coeffs(psi);
  auto psi_at = [&](std::int64_t k) { return qs_rescale(psi_s, k); };
  auto th = [&](std::int64_t m, std::int64_t a, std::int64_t s) { return theta_series(m, a, s, qprec + 1); };
  std::string range = "below q^" + to_string(qprec);

  std::vector<Report> out;
  out.push_back(compare_series("phi(q) = theta_{1,0}", range, phi_s, th(1, 0, 1), qprec));
  out.push_back(compare_series("2 q^{1/4} psi(q^2) = theta_{1,1}", range,
                               (Integer(2) * psi_at(2)).shifted(ExpRat(1, 4)), th(1, 1, 1), qprec));

  QSeries lhs = (Integer(4) * qs_mul(qs_mul(qs_pow(psi_s, 3), psi_at(2)), psi_at(3))).shifted(1);
  QSeries printed = th(1, 1, 1) * th(1, 0, 1) * th(2, 1, 1) * th(2, 1, 3);
  QSeries squared = th(1, 1, 1) * th(1, 1, 1) * th(1, 0, 1) * th(2, 1, 1) * th(2, 1, 3);
  Report r = compare_series("4q psi(q)^3 psi(q^2) psi(q^3) = theta_{1,1}^2 theta_{1,0} theta_{2,1} theta_{2,1}(3t)",
                            range, lhs, squared, qprec);
  Report single = compare_series("with a single theta_{1,1}", range, lhs, printed, qprec);
  if (!single.passed)
    r.notes.push_back("with theta_{1,1} to the first power the identity fails, " + *single.first_failure);
  out.push_back(std::move(r));
  return out;
}

Report congruence_scan(const CPhiSeries& s, std::int64_t modulus, const std::function<bool(std::int64_t)>& in_class,
                       const std::string& class_desc) {
  Report r{"cphi_" + std::to_string(s.k) + "(n) = 0 mod " + std::to_string(modulus) + " for " + class_desc,
           "n <= " + std::to_string(static_cast<std::int64_t>(s.coeffs.size()) - 1)};
  std::vector<std::int64_t> bad;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    auto n = static_cast<std::int64_t>(i);
    if (!in_class(n)) continue;
    if (!mpz_divisible_ui_p(s.coeffs[i].get_mpz_t(), static_cast<unsigned long>(modulus))) bad.push_back(n);
  }
  if (!bad.empty()) {
    r.passed = false;
    std::ostringstream os;
    os << "violations at n =";
    for (auto n : bad) os << " " << n;
    os << " (first: cphi(" << bad.front() << ") = " << s.coeffs[static_cast<std::size_t>(bad.front())] << ")";
    r.first_failure = os.str();
  }
  return r;
}

Report congruence_scan(const CPhiSeries& s, std::int64_t modulus, std::int64_t a, std::int64_t b) {
  std::string desc = "n = " + std::to_string(a) + "j + " + std::to_string(b);
  return congruence_scan(
      s, modulus, [=](std::int64_t n) { return n >= b && (n - b) % a == 0; }, desc);
}

}  // namespace qtheta
