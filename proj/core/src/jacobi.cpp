#include "qtheta/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "qtheta/errors.hpp"

namespace qtheta {

void ZetaQSeries::add(HalfInt r, const QSeries& s) {
  auto it = terms_.find(r.twice);
  QSeries sum = (it == terms_.end()) ? s.truncated(qprec_) : qs_add(it->second, s).truncated(qprec_);
  if (sum.precision() < qprec_)
    throw DomainError("coefficient of zeta^" + to_string(r) + " is known only to q^" +
                      to_string(sum.precision()) + ", below the series precision " + to_string(qprec_));
  if (sum.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(r.twice, std::move(sum));
  } else {
    it->second = std::move(sum);
  }
}

QSeries ZetaQSeries::coeff(HalfInt r) const {
  auto it = terms_.find(r.twice);
  return it == terms_.end() ? QSeries::zero(qprec_) : it->second;
}

ExpRat ZetaQSeries::min_valuation() const {
  ExpRat v = qprec_;
  for (const auto& [_, s] : terms_) v = std::min(v, s.valuation());
  return v;
}

std::optional<ZetaDifference> first_difference(const ZetaQSeries& a, const ZetaQSeries& b) {
  ExpRat p = std::min(a.qprec(), b.qprec());
  std::vector<std::int64_t> keys;
  for (const auto& [k, _] : a.terms()) keys.push_back(k);
  for (const auto& [k, _] : b.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (std::int64_t k : keys) {
    HalfInt r = HalfInt::from_twice(k);
    QSeries ca = a.coeff(r).truncated(p);
    QSeries cb = b.coeff(r).truncated(p);
    if (auto e = first_difference(ca, cb)) return ZetaDifference{r, *e, ca.coeff(*e), cb.coeff(*e)};
  }
  return std::nullopt;
}

bool operator==(const ZetaQSeries& a, const ZetaQSeries& b) { return !first_difference(a, b).has_value(); }

ZetaQSeries zq_add(const ZetaQSeries& a, const ZetaQSeries& b) {
  ZetaQSeries out(std::min(a.qprec(), b.qprec()));
  for (const auto& [k, s] : a.terms()) out.add(HalfInt::from_twice(k), s);
  for (const auto& [k, s] : b.terms()) out.add(HalfInt::from_twice(k), s);
  return out;
}

ZetaQSeries zq_mul(const ZetaQSeries& a, const ZetaQSeries& b) {
  // Absent coefficients are O(q^qprec); they meet the other factor's lowest valuation.
  ZetaQSeries out(std::min(a.qprec() + b.min_valuation(), b.qprec() + a.min_valuation()));
  for (const auto& [ka, sa] : a.terms())
    for (const auto& [kb, sb] : b.terms()) out.add(HalfInt::from_twice(ka + kb), qs_mul(sa, sb));
  return out;
}

ZetaQSeries zq_scale(const ZetaQSeries& f, const QSeries& s) {
  ExpRat vs = std::min(s.valuation(), s.precision());
  ZetaQSeries out(std::min(f.qprec() + vs, s.precision() + f.min_valuation()));
  for (const auto& [k, c] : f.terms()) out.add(HalfInt::from_twice(k), qs_mul(c, s));
  return out;
}

ZetaQSeries zq_pow(const ZetaQSeries& f, unsigned k) {
  if (k == 0) throw DomainError("zq_pow needs k >= 1");
  std::optional<ZetaQSeries> result;
  ZetaQSeries base = f;
  while (k > 0) {
    if (k & 1u) result = result ? zq_mul(*result, base) : base;
    k >>= 1;
    if (k > 0) base = zq_mul(base, base);
  }
  return *result;
}

QSeries coeff_zeta(const ZetaQSeries& f, HalfInt r) { return f.coeff(r); }

ZetaQSeries jtheta_half(const ExpRat& qprec) {
  ZetaQSeries out(qprec);
  // zeta^{t/2} with t = 2n + 1 odd carries q^{t^2/8}.
  for (std::int64_t t = 1; ExpRat(t * t, 8) < qprec; t += 2) {
    out.add(HalfInt::from_twice(t), QSeries::monomial(1, ExpRat(t * t, 8), qprec));
    out.add(HalfInt::from_twice(-t), QSeries::monomial(1, ExpRat(t * t, 8), qprec));
  }
  return out;
}

ZetaQSeries theta_component(HalfInt m, HalfInt a, const ExpRat& qprec) {
  if (m.twice <= 0) throw DomainError("theta component needs m > 0");
  if (m.is_integer() != a.is_integer())
    throw GridMismatch("theta component (" + to_string(m) + ", " + to_string(a) +
                       ") mixes integer and half-integer grids");
  ZetaQSeries out(qprec);
  // zeta exponent r = 2mn + a, twice r = 2 * (2m) n + 2a; q exponent r^2/4m = (2r)^2 / (8 * 2m).
  const std::int64_t step = 2 * m.twice;
  const std::int64_t den = 8 * m.twice;
  auto exponent = [&](std::int64_t t) { return ExpRat(t * t, den); };
  std::int64_t t0 = a.twice % step;
  if (t0 > step / 2) t0 -= step;
  if (t0 < -step / 2) t0 += step;
  for (std::int64_t t = t0; exponent(t) < qprec; t += step)
    out.add(HalfInt::from_twice(t), QSeries::monomial(1, exponent(t), qprec));
  for (std::int64_t t = t0 - step; exponent(t) < qprec; t -= step)
    out.add(HalfInt::from_twice(t), QSeries::monomial(1, exponent(t), qprec));
  return out;
}

ZetaQSeries andrews_product(unsigned k, const ExpRat& qprec) {
  if (k == 0) throw DomainError("andrews_product needs k >= 1");
  ZetaQSeries out(qprec);
  const std::int64_t n_max = ceil(qprec);
  if (n_max <= 0) return out;
  const auto kk = static_cast<std::int64_t>(k);
  const auto N = static_cast<std::size_t>(n_max);

  // zeta^r has q-valuation >= (r^2 + kr)/2k, so |r| > window is zero below q^n_max.
  const std::int64_t window =
      static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * kk * n_max + kk * kk / 4.0))) + kk;
  const std::int64_t reach = window + n_max + kk + 1;
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(2 * reach + 1));
  auto row = [&](std::int64_t r) -> std::vector<Integer>& { return rows[static_cast<std::size_t>(r + reach)]; };
  for (auto& r : rows) r.resize(N);
  row(0)[0] = 1;
  std::int64_t lo = 0, hi = 0;

  // Multiply by (1 + zeta^dir q^n).
  auto factor = [&](int dir, std::int64_t n) {
    if (n >= n_max) return;
    const auto sh = static_cast<std::size_t>(n);
    if (dir > 0) {
      for (std::int64_t r = hi + 1; r >= lo + 1; --r) {
        auto& dst = row(r);
        const auto& src = row(r - 1);
        for (std::size_t i = N; i-- > sh;) dst[i] += src[i - sh];
      }
      ++hi;
    } else {
      for (std::int64_t r = lo - 1; r <= hi - 1; ++r) {
        auto& dst = row(r);
        const auto& src = row(r + 1);
        for (std::size_t i = N; i-- > sh;) dst[i] += src[i - sh];
      }
      --lo;
    }
  };

  for (unsigned c = 0; c < k; ++c) factor(-1, 0);
  for (std::int64_t n = 1; n < n_max; ++n) {
    for (unsigned c = 0; c < k; ++c) factor(+1, n);
    for (unsigned c = 0; c < k; ++c) factor(-1, n);
    // Remaining factors each cost at least q^{n+1}; a term outside the window must
    // pay (|r| - window) of them to come back.
    for (std::int64_t r = lo; r <= hi; ++r) {
      std::int64_t excess = std::abs(r) - window;
      if (excess <= 0) continue;
      std::int64_t floor_cost = excess * (n + 1);
      auto& v = row(r);
      for (std::int64_t i = std::max<std::int64_t>(0, n_max - floor_cost); i < n_max; ++i)
        v[static_cast<std::size_t>(i)] = 0;
    }
    while (lo < -window && std::all_of(row(lo).begin(), row(lo).end(), [](const Integer& x) { return sgn(x) == 0; })) ++lo;
    while (hi > window && std::all_of(row(hi).begin(), row(hi).end(), [](const Integer& x) { return sgn(x) == 0; })) --hi;
  }

  for (std::int64_t r = std::max(lo, -window); r <= std::min(hi, window); ++r) {
    QSeries s(1, 0, row(r), n_max);
    if (!s.is_zero()) out.add(HalfInt::integer(r), s);
  }
  return out;
}

ZetaQSeries jtheta_triple_product(const ExpRat& qprec) {
  const ExpRat lead(1, 8);
  const ExpRat inner = qprec - lead;
  ZetaQSeries prod = andrews_product(1, inner);
  QSeries euler = pochhammer(1, 1, std::max(inner, ExpRat(1)));
  ZetaQSeries out(qprec);
  for (const auto& [twice, s] : prod.terms())
    out.add(HalfInt::from_twice(twice + 1), qs_mul(s, euler).shifted(lead));
  return out;
}

}  // namespace qtheta
