#include "qtheta/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qtheta/errors.hpp"

namespace qtheta {

std::string to_string(const ExpRat& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

ExpRat parse_exprat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExpRat(std::stoll(text));
    return ExpRat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// Nonzero positions of a dense coefficient vector.
std::vector<std::size_t> support(const std::vector<Integer>& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) out.push_back(i);
  return out;
}

}  // namespace

QSeries::QSeries(std::int64_t lattice_den, std::int64_t val, std::vector<Integer> coeffs,
                 std::int64_t prec)
    : den_(lattice_den), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
  if (den_ <= 0) throw DomainError("lattice denominator must be positive");
  normalize();
}

void QSeries::normalize() {
  // Drop coefficients at or above the precision.
  if (val_ >= prec_) {
    coeffs_.clear();
  } else if (static_cast<std::int64_t>(coeffs_.size()) > prec_ - val_) {
    coeffs_.resize(static_cast<std::size_t>(prec_ - val_));
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = 0;
  } else {
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      val_ += static_cast<std::int64_t>(lead);
    }
    while (sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::int64_t g = std::gcd(den_, prec_);
  if (!coeffs_.empty()) {
    g = std::gcd(g, val_);
    for (std::size_t i = 1; i < coeffs_.size() && g > 1; ++i)
      if (sgn(coeffs_[i]) != 0) g = std::gcd(g, static_cast<std::int64_t>(i));
  }
  if (g <= 1) return;
  if (!coeffs_.empty()) {
    std::vector<Integer> packed((coeffs_.size() - 1) / static_cast<std::size_t>(g) + 1);
    for (std::size_t i = 0; i < packed.size(); ++i)
      packed[i] = std::move(coeffs_[i * static_cast<std::size_t>(g)]);
    coeffs_ = std::move(packed);
    val_ /= g;
  }
  den_ /= g;
  prec_ /= g;
}

QSeries QSeries::zero(const ExpRat& prec) {
  return QSeries(prec.denominator(), 0, {}, prec.numerator());
}

QSeries QSeries::monomial(const Integer& coeff, const ExpRat& exponent, const ExpRat& prec) {
  std::int64_t d = lcm64(exponent.denominator(), prec.denominator());
  return QSeries(d, exponent.numerator() * (d / exponent.denominator()), {coeff},
                 prec.numerator() * (d / prec.denominator()));
}

QSeries QSeries::from_integer_coeffs(std::vector<Integer> coeffs) {
  auto n = static_cast<std::int64_t>(coeffs.size());
  return QSeries(1, 0, std::move(coeffs), n);
}

ExpRat QSeries::valuation() const {
  return is_zero() ? precision() : ExpRat(val_, den_);
}

Integer QSeries::coeff(const ExpRat& exponent) const {
  if (exponent >= precision())
    throw DomainError("coefficient of q^" + to_string(exponent) + " is beyond precision " +
                      to_string(precision()));
  ExpRat scaled = exponent * den_;
  if (scaled.denominator() != 1) return 0;
  std::int64_t idx = scaled.numerator() - val_;
  if (idx < 0 || idx >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

const Integer& QSeries::leading_coeff() const {
  if (is_zero()) throw DomainError("zero series has no leading coefficient");
  return coeffs_.front();
}

std::size_t QSeries::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

QSeries QSeries::truncated(const ExpRat& p) const {
  if (p >= precision()) return *this;
  std::int64_t d = lcm64(den_, p.denominator());
  std::int64_t s = d / den_;
  std::vector<Integer> spread(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * s + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[i * s] = coeffs_[i];
  return QSeries(d, val_ * s, std::move(spread), p.numerator() * (d / p.denominator()));
}

QSeries QSeries::shifted(const ExpRat& e) const {
  std::int64_t d = lcm64(den_, e.denominator());
  std::int64_t s = d / den_;
  std::int64_t off = e.numerator() * (d / e.denominator());
  std::vector<Integer> spread(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * s + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[i * s] = coeffs_[i];
  return QSeries(d, val_ * s + off, std::move(spread), prec_ * s + off);
}

std::vector<Integer> QSeries::dense_on(std::int64_t d, std::int64_t from, std::int64_t to) const {
  if (d % den_ != 0) throw DomainError("target lattice must refine the series lattice");
  std::int64_t s = d / den_;
  std::vector<Integer> out(static_cast<std::size_t>(std::max<std::int64_t>(0, to - from)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t e = (val_ + static_cast<std::int64_t>(i)) * s;
    if (e >= from && e < to) out[static_cast<std::size_t>(e - from)] = coeffs_[i];
  }
  return out;
}

std::vector<Integer> QSeries::integer_coeffs(std::size_t n) const {
  if (!is_zero() && (den_ != 1 || val_ < 0))
    throw LatticeError("series " + to_string(*this) + " is not an ordinary power series");
  if (ExpRat(static_cast<std::int64_t>(n)) > precision())
    throw DomainError("requested " + std::to_string(n) + " coefficients but series is known only to q^" +
                      to_string(precision()));
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    auto e = static_cast<std::size_t>(val_) + i;
    if (e < n) out[e] = coeffs_[i];
  }
  return out;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::optional<ExpRat> first_difference(const QSeries& a, const QSeries& b) {
  std::int64_t d = lcm64(a.den_, b.den_);
  ExpRat p = std::min(a.precision(), b.precision());
  std::int64_t top = ceil_scaled(p, d);
  std::int64_t lo = std::min(a.is_zero() ? top : a.val_ * (d / a.den_),
                             b.is_zero() ? top : b.val_ * (d / b.den_));
  auto da = a.dense_on(d, lo, top);
  auto db = b.dense_on(d, lo, top);
  for (std::size_t i = 0; i < da.size(); ++i)
    if (da[i] != db[i]) return ExpRat(lo + static_cast<std::int64_t>(i), d);
  return std::nullopt;
}

bool operator==(const QSeries& a, const QSeries& b) { return !first_difference(a, b).has_value(); }

namespace {

QSeries add_scaled(const QSeries& a, const QSeries& b, int sign) {
  std::int64_t d = lcm64(a.lattice_den(), b.lattice_den());
  std::int64_t sa = d / a.lattice_den(), sb = d / b.lattice_den();
  std::int64_t prec = std::min(a.prec() * sa, b.prec() * sb);
  std::int64_t lo = prec;
  if (!a.is_zero()) lo = std::min(lo, a.val() * sa);
  if (!b.is_zero()) lo = std::min(lo, b.val() * sb);
  std::vector<Integer> out(static_cast<std::size_t>(prec - lo));
  const auto& ca = a.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    std::int64_t e = (a.val() + static_cast<std::int64_t>(i)) * sa;
    if (e < prec) out[static_cast<std::size_t>(e - lo)] += ca[i];
  }
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < cb.size(); ++i) {
    std::int64_t e = (b.val() + static_cast<std::int64_t>(i)) * sb;
    if (e >= prec) continue;
    if (sign > 0)
      out[static_cast<std::size_t>(e - lo)] += cb[i];
    else
      out[static_cast<std::size_t>(e - lo)] -= cb[i];
  }
  return QSeries(d, lo, std::move(out), prec);
}

}  // namespace

QSeries qs_add(const QSeries& a, const QSeries& b) { return add_scaled(a, b, +1); }
QSeries qs_sub(const QSeries& a, const QSeries& b) { return add_scaled(a, b, -1); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  std::int64_t d = lcm64(a.lattice_den(), b.lattice_den());
  std::int64_t sa = d / a.lattice_den(), sb = d / b.lattice_den();
  // Valuation of a zero series is its precision.
  std::int64_t va = (a.is_zero() ? a.prec() : a.val()) * sa;
  std::int64_t vb = (b.is_zero() ? b.prec() : b.val()) * sb;
  std::int64_t prec = std::min(va + b.prec() * sb, vb + a.prec() * sa);
  if (a.is_zero() || b.is_zero() || va + vb >= prec) return QSeries(d, 0, {}, prec);

  std::int64_t lo = va + vb;
  std::vector<Integer> out(static_cast<std::size_t>(prec - lo));
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  auto sup_a = support(ca);
  auto sup_b = support(cb);
  for (std::size_t i : sup_a) {
    std::int64_t ea = static_cast<std::int64_t>(i) * sa;
    for (std::size_t j : sup_b) {
      std::int64_t e = ea + static_cast<std::int64_t>(j) * sb;
      if (e >= prec - lo) break;
      mpz_addmul(out[static_cast<std::size_t>(e)].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  return QSeries(d, lo, std::move(out), prec);
}

QSeries qs_pow(const QSeries& a, unsigned k) {
  if (k == 0) return QSeries::one(a.precision() - std::min(a.valuation(), a.precision()));
  QSeries result;
  QSeries base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : qs_mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = qs_mul(base, base);
  }
  return result;
}

QSeries qs_inv(const QSeries& a, const ExpRat& prec) {
  if (a.is_zero()) throw NonUnitLeading("cannot invert a series that is zero to its precision");
  const Integer& u = a.leading_coeff();
  if (u != 1 && u != -1)
    throw NonUnitLeading("leading coefficient " + u.get_str() + " is not a unit");

  std::int64_t d = lcm64(a.lattice_den(), prec.denominator());
  std::int64_t s = d / a.lattice_den();
  std::int64_t v = a.val() * s;
  // a = q^{v/d} u (1 + ...), known to relative length (prec(a) - v).
  std::int64_t rel = a.prec() * s - v;
  std::int64_t want = prec.numerator() * (d / prec.denominator()) + v;  // relative length requested
  std::int64_t n = std::max<std::int64_t>(0, std::min(rel, want));

  const auto& ca = a.coeffs();
  std::vector<std::pair<std::int64_t, const Integer*>> terms;  // a_i for i >= 1, relative index
  for (std::size_t i = 1; i < ca.size(); ++i)
    if (sgn(ca[i]) != 0) terms.emplace_back(static_cast<std::int64_t>(i) * s, &ca[i]);

  std::vector<Integer> out(static_cast<std::size_t>(n));
  Integer acc;
  for (std::int64_t k = 0; k < n; ++k) {
    if (k == 0) {
      out[0] = u;
      continue;
    }
    acc = 0;
    for (const auto& [off, c] : terms) {
      if (off > k) break;
      mpz_addmul(acc.get_mpz_t(), c->get_mpz_t(), out[static_cast<std::size_t>(k - off)].get_mpz_t());
    }
    // b_k = -u * sum; since u = +-1, u^{-1} = u.
    out[static_cast<std::size_t>(k)] = (u > 0) ? Integer(-acc) : acc;
  }
  return QSeries(d, -v, std::move(out), n - v);
}

QSeries qs_div(const QSeries& a, const QSeries& b) {
  // Enough precision in 1/b that the product is limited only by the operands.
  ExpRat need = a.precision() - b.valuation() - std::min(a.valuation(), a.precision());
  return qs_mul(a, qs_inv(b, need));
}

QSeries qs_rescale(const QSeries& s, std::int64_t k) {
  if (k < 1) throw DomainError("rescale factor must be positive");
  std::int64_t g = std::gcd(k, s.lattice_den());
  std::int64_t spread = k / g;
  std::vector<Integer> c(s.coeffs().empty() ? 0 : (s.coeffs().size() - 1) * spread + 1);
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) c[i * spread] = s.coeffs()[i];
  return QSeries(s.lattice_den() / g, s.val() * spread, std::move(c), s.prec() * spread);
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
  bool first = true;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    const Integer& c = s.coeffs()[i];
    if (sgn(c) == 0) continue;
    ExpRat e(s.val() + static_cast<std::int64_t>(i), s.lattice_den());
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == ExpRat(0)) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != ExpRat(1)) os << "^" << (e.denominator() == 1 ? to_string(e) : "(" + to_string(e) + ")");
  }
  if (!first) os << " + ";
  os << "O(q^" << (s.precision().denominator() == 1 ? to_string(s.precision())
                                                      : "(" + to_string(s.precision()) + ")")
     << ")";
  return os;
}

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace qtheta
