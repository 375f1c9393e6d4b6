#include <sstream>

#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/identities.hpp"

namespace qtheta {

const Report& Report::require() const {
  if (!passed) throw VerificationFailure(claim + ": " + first_failure.value_or("failed"));
  return *this;
}

namespace {

Report fail(Report r, std::string why) {
  r.passed = false;
  if (!r.first_failure) r.first_failure = std::move(why);
  return r;
}

// Folds a sub-check into an aggregate report; keeps the first failure.
void absorb(Report& into, const Report& part) {
  if (part.passed) return;
  into.passed = false;
  if (!into.first_failure) into.first_failure = part.claim + ": " + part.first_failure.value_or("failed");
}

std::string range_upto(const ExpRat& p) { return "below q^" + to_string(p); }

}  // namespace

Report compare_series(std::string claim, std::string range, const QSeries& lhs, const QSeries& rhs,
                      const ExpRat& target) {
  Report r{std::move(claim), std::move(range)};
  if (lhs.precision() < target || rhs.precision() < target)
    return fail(std::move(r), "precision lost: lhs known below q^" + to_string(lhs.precision()) +
                                  ", rhs below q^" + to_string(rhs.precision()));
  if (auto e = first_difference(lhs.truncated(target), rhs.truncated(target))) {
    std::ostringstream os;
    os << "coefficient of q^" << to_string(*e) << ": lhs " << lhs.coeff(*e) << ", rhs " << rhs.coeff(*e);
    return fail(std::move(r), os.str());
  }
  return r;
}

Report compare_zeta(std::string claim, std::string range, const ZetaQSeries& lhs, const ZetaQSeries& rhs,
                    const ExpRat& target) {
  Report r{std::move(claim), std::move(range)};
  if (lhs.qprec() < target || rhs.qprec() < target)
    return fail(std::move(r), "precision lost: lhs known below q^" + to_string(lhs.qprec()) + ", rhs below q^" +
                                  to_string(rhs.qprec()));
  ZetaQSeries a = zq_add(lhs, ZetaQSeries(target));
  ZetaQSeries b = zq_add(rhs, ZetaQSeries(target));
  if (auto d = first_difference(a, b)) {
    std::ostringstream os;
    os << "coefficient of zeta^" << to_string(d->zeta_exponent) << " q^" << to_string(d->q_exponent) << ": lhs "
       << d->lhs << ", rhs " << d->rhs;
    return fail(std::move(r), os.str());
  }
  return r;
}

Report verify_jtp(const ExpRat& qprec) {
  return compare_zeta("triple product at z+1/2: sum side = product side", range_upto(qprec), jtheta_half(qprec),
                      jtheta_triple_product(qprec), qprec);
}

Report verify_theta_eta(const ExpRat& prec) {
  Report out{"theta_{1,0} and theta_{1,1} as eta quotients", range_upto(prec)};
  const ExpRat work = prec + 1;
  auto eta_at = [&](std::int64_t k) { return qs_rescale(eta(work / k), k); };
  QSeries e1 = eta_at(1), e2 = eta_at(2), e4 = eta_at(4);
  QSeries q10 = qs_div(qs_pow(e2, 5), qs_mul(qs_pow(e1, 2), qs_pow(e4, 2)));
  QSeries q11 = Integer(2) * qs_div(qs_pow(e4, 2), e2);
  absorb(out, compare_series("theta_{1,0} = eta(2t)^5/(eta(t)^2 eta(4t)^2)", range_upto(prec),
                             theta_series(1, 0, 1, prec), q10, prec));
  absorb(out, compare_series("theta_{1,1} = 2 eta(4t)^2/eta(2t)", range_upto(prec), theta_series(1, 1, 1, prec), q11,
                             prec));
  return out;
}

Report verify_theta_products(std::int64_t m_max, const ExpRat& prec) {
  Report out{"theta_{m,b} product form = defining series", "0 <= b <= m <= " + std::to_string(m_max) + ", " +
                                                               range_upto(prec)};
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (std::int64_t b = 0; b <= m; ++b)
      absorb(out, compare_series("theta_{" + std::to_string(m) + "," + std::to_string(b) + "}", range_upto(prec),
                                 theta_series(m, b, 1, prec), theta_product(m, b, 1, prec), prec));
  return out;
}

Report verify_theta_klein(std::int64_t m_max, const ExpRat& prec) {
  Report out{"theta_{m,b} via Klein forms = defining series", "0 <= b < m <= " + std::to_string(m_max) + ", " +
                                                                  range_upto(prec)};
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (std::int64_t b = 0; b < m; ++b)
      absorb(out, compare_series("theta_{" + std::to_string(m) + "," + std::to_string(b) + "}", range_upto(prec),
                                 theta_series(m, b, 1, prec), theta_klein(m, b, 1, prec), prec));
  return out;
}

Report verify_decomposition(unsigned k, const ExpRat& qprec) {
  ZetaQSeries lhs = zq_pow(jtheta_half(qprec), k);
  ZetaQSeries rhs = decomposition_series(h_table(k), qprec);
  return compare_zeta("(-theta(z+1/2))^" + std::to_string(k) + " = sum_b h_{" + to_string(HalfInt::from_twice(k)) +
                          ",b} theta_{" + to_string(HalfInt::from_twice(k)) + ",b}(z)",
                      range_upto(qprec), lhs, rhs, qprec);
}

Report verify_lemma_onemore(std::int64_t l, std::int64_t c, const ExpRat& qprec) {
  if (l < 1 || c < 0 || c >= l) throw DomainError("lemma needs l > c >= 0");
  ZetaQSeries lhs = zq_mul(jtheta_half(qprec), theta_component(HalfInt::integer(l), HalfInt::integer(c), qprec));
  ZetaQSeries rhs(qprec);
  const HalfInt level = HalfInt::from_twice(2 * l + 1);
  for (std::int64_t a = 0; a <= 2 * l; ++a) {
    QSeries coeff = theta_series(l * (2 * l + 1), c - 2 * l * a - l, 1, qprec);
    rhs = zq_add(rhs, zq_scale(theta_component(level, HalfInt::from_twice(2 * (a + c) + 1), qprec), coeff));
  }
  return compare_zeta("-theta(z+1/2) theta_{" + std::to_string(l) + "," + std::to_string(c) +
                          "}(z) = sum_a theta_{l(2l+1),c-2la-l} theta_{l+1/2,a+c+1/2}(z)",
                      range_upto(qprec), lhs, rhs, qprec);
}

Report verify_lemma_theta1eps(int eps, std::int64_t l, std::int64_t c, const ExpRat& qprec) {
  if (eps != 0 && eps != 1) throw DomainError("eps must be 0 or 1");
  if (l < 1 || c < 0 || c >= l) throw DomainError("lemma needs l > c >= 0");
  ZetaQSeries lhs = zq_mul(theta_component(HalfInt::integer(1), HalfInt::integer(eps), qprec),
                           theta_component(HalfInt::integer(l), HalfInt::integer(c), qprec));
  ZetaQSeries rhs(qprec);
  for (std::int64_t a = 0; a <= l; ++a) {
    QSeries coeff = theta_series(l * (l + 1), (2 * a + eps) * l - c, 1, qprec);
    rhs = zq_add(rhs, zq_scale(theta_component(HalfInt::integer(l + 1), HalfInt::integer(2 * a + c + eps), qprec),
                               coeff));
  }
  return compare_zeta("theta_{1," + std::to_string(eps) + "}(z) theta_{" + std::to_string(l) + "," +
                          std::to_string(c) + "}(z) = sum_a theta_{l(l+1),(2a+eps)l-c} theta_{l+1,2a+c+eps}(z)",
                      range_upto(qprec), lhs, rhs, qprec);
}

std::vector<Report> verify_lemma42(const ExpRat& prec) {
  auto t = [&](std::int64_t m, std::int64_t a) { return theta_series(m, a, 1, prec); };
  std::vector<Report> out;
  out.push_back(compare_series("theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3}",
                               range_upto(prec), t(2, 2) * t(6, 0) + t(2, 0) * t(6, 6),
                               Integer(2) * (t(2, 1) * t(6, 3)), prec));
  out.push_back(compare_series("theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} = theta_{2,1}(theta_{6,1} + theta_{6,5})",
                               range_upto(prec), t(2, 2) * t(6, 4) + t(2, 0) * t(6, 2),
                               t(2, 1) * (t(6, 1) + t(6, 5)), prec));
  return out;
}

Report verify_symmetry(const HTable& t, const ExpRat& prec) {
  Report out{"h_{l,c} = h_{l,2l-c} at level " + to_string(t.level), range_upto(prec)};
  auto hs = eval_table(t, prec);
  std::size_t structural = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    HalfInt c = t.residue(i);
    HalfInt partner = HalfInt::from_twice(t.level.twice * 2 - c.twice);
    const ThetaExpr& other = t.at(partner);
    if (other == t.entries[i]) ++structural;
    std::size_t j = static_cast<std::size_t>(&other - t.entries.data());
    absorb(out, compare_series("h_{" + to_string(t.level) + "," + to_string(c) + "} = h_{" + to_string(t.level) +
                                   "," + to_string(partner) + "}",
                               range_upto(prec), hs[i], hs[j], prec));
  }
  out.notes.push_back(std::to_string(structural) + " of " + std::to_string(t.size()) +
                      " residues agree as canonical theta expressions");
  return out;
}

Report verify_route_independence(std::int64_t level, const ExpRat& prec) {
  if (level < 1) throw DomainError("route check needs level >= 1");
  HTable t = h_table(static_cast<unsigned>(2 * level));
  HTable via_half = h_step_half_to_int(h_step_odd(t));
  HTable direct = h_step_even(t);
  Report out{"level " + std::to_string(level) + " -> " + std::to_string(level + 1) +
                 ": through level " + to_string(HalfInt::from_twice(2 * level + 1)) + " = direct step",
             range_upto(prec)};
  auto a = eval_table(via_half, prec);
  auto b = eval_table(direct, prec);
  for (std::size_t i = 0; i < a.size(); ++i)
    absorb(out, compare_series("h_{" + std::to_string(level + 1) + "," + std::to_string(i) + "}", range_upto(prec),
                               a[i], b[i], prec));
  return out;
}

Report verify_grouping(std::int64_t level) {
  if (level < 1) throw DomainError("grouping check needs level >= 1");
  HTable t = h_table(static_cast<unsigned>(2 * level));
  HTable grouped = h_step_even(t);
  HTable plain = h_step_even_ungrouped(t);
  Report out{"grouped even step = ungrouped sum, level " + std::to_string(level) + " -> " +
                 std::to_string(level + 1),
             "exact theta expressions"};
  for (std::size_t i = 0; i < grouped.size(); ++i)
    if (!(grouped.entries[i] == plain.entries[i]))
      return fail(std::move(out), "h_{" + std::to_string(level + 1) + "," + std::to_string(i) + "}: grouped " +
                                      to_string(grouped.entries[i]) + ", ungrouped " + to_string(plain.entries[i]));
  return out;
}

}  // namespace qtheta
