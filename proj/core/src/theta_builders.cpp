#include <cmath>
#include <numeric>

#include "qtheta/errors.hpp"
#include "qtheta/qseries.hpp"

namespace qtheta {

__extension__ using Wide = __int128;

QSeries pochhammer(const ExpRat& a, const ExpRat& step, const ExpRat& prec) {
  if (a <= 0) throw ZeroFactor("(q^a;q^step) needs a > 0, got a = " + to_string(a));
  if (step <= 0) throw DomainError("(q^a;q^step) needs step > 0");
  std::int64_t d = std::lcm(std::lcm(a.denominator(), step.denominator()), prec.denominator());
  std::int64_t top = prec.numerator() * (d / prec.denominator());
  if (top <= 0) return QSeries::zero(prec);

  std::int64_t first = a.numerator() * (d / a.denominator());
  std::int64_t stride = step.numerator() * (d / step.denominator());
  std::vector<Integer> c(static_cast<std::size_t>(top));
  c[0] = 1;
  std::int64_t reach = 0;  // highest index that can be nonzero so far
  for (std::int64_t e = first; e < top; e += stride) {
    reach = std::min(top - 1, reach + e);
    for (std::int64_t i = reach; i >= e; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - e)];
  }
  return QSeries(d, 0, std::move(c), top);
}

QSeries eta(const ExpRat& prec) {
  const ExpRat shift(1, 24);
  return pochhammer(1, 1, prec - shift).shifted(shift);
}

QSeries klein(const ExpRat& a, const ExpRat& prec) {
  if (a <= 0 || a >= 1) throw DomainError("Klein form t_{a,0} needs 0 < a < 1, got " + to_string(a));
  const ExpRat lead = a * a / 2 - a / 2 + ExpRat(1, 12);
  const ExpRat inner = prec - lead;
  QSeries num = qs_mul(pochhammer(a, 1, inner), pochhammer(1 - a, 1, inner));
  QSeries den = qs_pow(pochhammer(1, 1, inner), 2);
  return (-qs_div(num, den)).shifted(lead);
}

std::int64_t theta_normalize(std::int64_t m, std::int64_t a) {
  if (m < 1) throw DomainError("theta index m must be positive");
  std::int64_t r = a % (2 * m);
  if (r < 0) r += 2 * m;
  return r > m ? 2 * m - r : r;
}

QSeries theta_series(std::int64_t m, std::int64_t a, std::int64_t scale, const ExpRat& prec) {
  if (m < 1) throw DomainError("theta index m must be positive");
  if (scale < 1) throw DomainError("theta scale must be positive");
  // Exponent scale * (2mn + a)^2 / 4m < prec  <=>  (2mn + a)^2 * scale * den < 4m * num.
  std::int64_t d = std::lcm(4 * m, prec.denominator());
  std::int64_t top = prec.numerator() * (d / prec.denominator());
  if (top <= 0) return QSeries::zero(prec);
  const Wide bound = static_cast<Wide>(4 * m) * prec.numerator();
  auto inside = [&](std::int64_t n) {
    Wide r = static_cast<Wide>(2 * m) * n + a;
    return r * r * scale * prec.denominator() < bound;
  };
  std::vector<Integer> c(static_cast<std::size_t>(top));
  auto add = [&](std::int64_t n) {
    Wide r = static_cast<Wide>(2 * m) * n + a;
    auto e = static_cast<std::int64_t>(r * r * scale * (d / (4 * m)));
    c[static_cast<std::size_t>(e)] += 1;
  };
  // Start at the n minimizing |2mn + a| and walk outwards.
  std::int64_t centre = static_cast<std::int64_t>(std::llround(-static_cast<double>(a) / (2.0 * static_cast<double>(m))));
  for (std::int64_t n = centre; inside(n); ++n) add(n);
  for (std::int64_t n = centre - 1; inside(n); --n) add(n);
  return QSeries(d, 0, std::move(c), top);
}

QSeries theta_product(std::int64_t m, std::int64_t b, std::int64_t scale, const ExpRat& prec) {
  if (m < 1 || scale < 1) throw DomainError("theta_product needs m >= 1 and scale >= 1");
  if (b < 0 || b > m)
    throw DomainError("theta_product needs 0 <= b <= m, got b = " + std::to_string(b));
  if (b == 0 || b == m) return theta_series(m, b, scale, prec);

  const ExpRat p = prec / scale;
  const ExpRat lead(b * b, 4 * m);
  const ExpRat inner = p - lead;
  QSeries num = pochhammer(2 * m, 2 * m, inner);
  num = qs_mul(num, pochhammer(2 * m - 2 * b, 4 * m, inner));
  num = qs_mul(num, pochhammer(2 * m + 2 * b, 4 * m, inner));
  QSeries den = qs_mul(pochhammer(m - b, 2 * m, inner), pochhammer(m + b, 2 * m, inner));
  return qs_rescale(qs_div(num, den).shifted(lead), scale);
}

QSeries theta_klein(std::int64_t m, std::int64_t b, std::int64_t scale, const ExpRat& prec) {
  if (m < 1 || scale < 1) throw DomainError("theta_klein needs m >= 1 and scale >= 1");
  if (b < 0 || b >= m) throw DomainError("theta_klein needs 0 <= b < m, got b = " + std::to_string(b));

  const ExpRat p = prec / scale;
  const ExpRat x = ExpRat(1, 2) + ExpRat(b, 2 * m);
  // Every factor has |valuation| < m, so a margin of 4m keeps the final precision >= p.
  const ExpRat work = p + 4 * m;
  QSeries t4 = qs_rescale(klein(x, work / (4 * m)), 4 * m);
  QSeries t2 = qs_rescale(klein(x, work / (2 * m)), 2 * m);
  QSeries eta4 = qs_pow(pochhammer(4 * m, 4 * m, work), 2);
  QSeries eta2 = pochhammer(2 * m, 2 * m, work);
  QSeries r = qs_div(qs_mul(eta4, t4), qs_mul(eta2, t2)).shifted(ExpRat(m, 12));
  if (r.precision() < p) throw std::logic_error("theta_klein: insufficient working precision");
  return qs_rescale(r.truncated(p), scale);
}

}  // namespace qtheta
