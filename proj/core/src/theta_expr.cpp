#include "qtheta/theta_expr.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("theta expression coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("theta expression coefficient overflow");
  return r;
}

}  // namespace

ThetaSymbol ThetaSymbol::canonical() const {
  if (m < 1 || scale < 1) throw DomainError("theta symbol needs m >= 1 and scale >= 1");
  std::int64_t mm = m * scale;
  return ThetaSymbol{mm, theta_normalize(mm, a * scale), 1};
}

std::string to_string(const ThetaSymbol& s) {
  std::string out = "θ_{" + std::to_string(s.m) + "," + std::to_string(s.a) + "}";
  if (s.scale != 1) out += "(" + std::to_string(s.scale) + "τ)";
  return out;
}

ThetaExpr ThetaExpr::constant(std::int64_t c) {
  ThetaExpr e;
  e.add_term({}, c);
  return e;
}

ThetaExpr ThetaExpr::theta(std::int64_t m, std::int64_t a, std::int64_t scale) {
  ThetaExpr e;
  e.add_term({ThetaSymbol{m, a, scale}.canonical()}, 1);
  return e;
}

void ThetaExpr::add_term(Monomial mono, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

ThetaExpr& ThetaExpr::operator+=(const ThetaExpr& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

ThetaExpr& ThetaExpr::operator-=(const ThetaExpr& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, checked_mul(c, -1));
  return *this;
}

ThetaExpr& ThetaExpr::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v = checked_mul(v, c);
  return *this;
}

ThetaExpr operator*(const ThetaExpr& a, const ThetaExpr& b) {
  ThetaExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ThetaExpr::Monomial mono;
      mono.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
      out.add_term(std::move(mono), checked_mul(ca, cb));
    }
  }
  return out;
}

std::string to_string(const ThetaExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : e.terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || mono.empty()) os << mag;
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      os << to_string(mono[i]);
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

const QSeries& ThetaEvaluator::atom(const ThetaSymbol& s) {
  auto it = cache_.find(s);
  if (it == cache_.end()) it = cache_.emplace(s, theta_series(s.m, s.a, s.scale, prec_)).first;
  return it->second;
}

QSeries ThetaEvaluator::eval(const ThetaExpr& e) {
  QSeries total = QSeries::zero(prec_);
  for (const auto& [mono, c] : e.terms()) {
    QSeries term = QSeries::monomial(c, 0, prec_);
    for (const auto& s : mono) term = qs_mul(term, atom(s));
    total = qs_add(total, term);
  }
  return total.truncated(prec_);
}

QSeries eval_theta_expr(const ThetaExpr& e, const ExpRat& prec) {
  ThetaEvaluator ev(prec);
  return ev.eval(e);
}

namespace {

std::optional<ThetaExpr::Monomial> divide(const ThetaExpr::Monomial& m, const ThetaExpr::Monomial& d) {
  if (!std::includes(m.begin(), m.end(), d.begin(), d.end())) return std::nullopt;
  ThetaExpr::Monomial r;
  std::set_difference(m.begin(), m.end(), d.begin(), d.end(), std::back_inserter(r));
  return r;
}

ThetaExpr monomial(const ThetaExpr::Monomial& m) {
  ThetaExpr e;
  e.add_term(m, 1);
  return e;
}

// One rewrite of rule somewhere in e, or nullopt.
std::optional<ThetaExpr> rewrite_once(const ThetaExpr& e, const RewriteRule& rule) {
  const auto& [l1, c1] = *rule.lhs.terms().begin();
  for (const auto& [mono, c] : e.terms()) {
    auto cof = divide(mono, l1);
    if (!cof || c % c1 != 0) continue;
    const std::int64_t lambda = c / c1;
    ThetaExpr r = monomial(*cof);
    ThetaExpr matched = lambda * (r * rule.lhs);
    bool all = true;
    for (const auto& [lm, lc] : matched.terms()) {
      auto it = e.terms().find(lm);
      if (it == e.terms().end() || it->second != lc) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    return e - matched + lambda * (r * rule.rhs);
  }
  return std::nullopt;
}

}  // namespace

ThetaExpr apply_rewrites(ThetaExpr e, const std::vector<RewriteRule>& rules) {
  for (const auto& rule : rules)
    if (rule.lhs.is_zero()) throw DomainError("rewrite rule " + rule.name + " has an empty left side");
  // each rewrite removes at least one lhs term; the cap only guards against cyclic rule sets
  for (int guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    for (const auto& rule : rules) {
      if (auto next = rewrite_once(e, rule)) {
        e = std::move(*next);
        changed = true;
      }
    }
    if (!changed) return e;
  }
  throw DomainError("rewrite rules did not terminate");
}

std::vector<RewriteRule> level2_product_rules() {
  auto t = [](std::int64_t m, std::int64_t a) { return ThetaExpr::theta(m, a); };
  return {
      {"theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} -> 2 theta_{2,1}theta_{6,3}",
       t(2, 2) * t(6, 0) + t(2, 0) * t(6, 6), 2 * (t(2, 1) * t(6, 3))},
      {"theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} -> theta_{2,1}(theta_{6,1} + theta_{6,5})",
       t(2, 2) * t(6, 4) + t(2, 0) * t(6, 2), t(2, 1) * (t(6, 1) + t(6, 5))},
  };
}

}  // namespace qtheta
