#include "qtheta/decomp.hpp"

#include "qtheta/errors.hpp"

namespace qtheta {

HalfInt HTable::residue(std::size_t i) const {
  auto n = static_cast<std::int64_t>(i);
  return level.is_integer() ? HalfInt::integer(n) : HalfInt::from_twice(2 * n + 1);
}

namespace {

std::size_t residue_index(const HTable& t, HalfInt c) {
  if (c.is_integer() != t.level.is_integer())
    throw GridMismatch("residue " + to_string(c) + " is not on the grid of level " + to_string(t.level));
  const std::int64_t modulus = t.level.twice;  // 2l residues
  std::int64_t idx = c.is_integer() ? c.twice / 2 : (c.twice - 1) / 2;
  idx %= modulus;
  if (idx < 0) idx += modulus;
  return static_cast<std::size_t>(idx);
}

ThetaExpr th(std::int64_t m, std::int64_t a) { return ThetaExpr::theta(m, a); }

void require_integer_level(const HTable& t, const char* what) {
  if (!t.level.is_integer() || t.level.twice < 2)
    throw DomainError(std::string(what) + " needs an integer level >= 1, got " + to_string(t.level));
}

}  // namespace

const ThetaExpr& HTable::at(HalfInt c) const { return entries[residue_index(*this, c)]; }
ThetaExpr& HTable::at(HalfInt c) { return entries[residue_index(*this, c)]; }

ThetaExpr h_one(std::int64_t j) { return th(1, j + 1); }

HTable h_base() { return HTable{HalfInt::integer(1), {h_one(0), h_one(1)}}; }

HTable h_half_base() { return HTable{HalfInt::from_twice(1), {ThetaExpr::constant(1)}}; }

HTable h_step_even(const HTable& t) {
  require_integer_level(t, "h_step_even");
  const std::int64_t l = t.level.twice / 2;
  const std::int64_t m = l * (l + 1);
  HTable out{HalfInt::integer(l + 1), {}};
  for (std::int64_t b = 0; b < 2 * (l + 1); ++b) {
    ThetaExpr e = h_one(b) * th(m, b * l) * t.entries[0];
    e += h_one(b - l) * th(m, b * l - m) * t.entries[static_cast<std::size_t>(l)];
    for (std::int64_t c = 1; c < l; ++c)
      e += h_one(b - c) * (th(m, b * l - c * (l + 1)) + th(m, b * l + c * (l + 1))) *
           t.entries[static_cast<std::size_t>(c)];
    out.entries.push_back(std::move(e));
  }
  return out;
}

HTable h_step_even_ungrouped(const HTable& t) {
  require_integer_level(t, "h_step_even_ungrouped");
  const std::int64_t l = t.level.twice / 2;
  const std::int64_t m = l * (l + 1);
  HTable out{HalfInt::integer(l + 1), {}};
  for (std::int64_t b = 0; b < 2 * (l + 1); ++b) {
    ThetaExpr e;
    for (std::int64_t c = 0; c < 2 * l; ++c)
      e += h_one(b - c) * th(m, b * l - c * (l + 1)) * t.entries[static_cast<std::size_t>(c)];
    out.entries.push_back(std::move(e));
  }
  return out;
}

HTable h_step_odd(const HTable& t) {
  require_integer_level(t, "h_step_odd");
  const std::int64_t l = t.level.twice / 2;
  const std::int64_t m = l * (2 * l + 1);
  HTable out{HalfInt::from_twice(2 * l + 1), {}};
  for (std::int64_t b = 0; b <= 2 * l; ++b) {
    ThetaExpr e;
    for (std::int64_t c = 0; c < 2 * l; ++c)
      e += t.entries[static_cast<std::size_t>(c)] * th(m, c * (2 * l + 1) - l * (2 * b + 1));
    out.entries.push_back(std::move(e));
  }
  return out;
}

HTable h_step_half_to_int(const HTable& t) {
  if (t.level.is_integer()) throw DomainError("h_step_half_to_int needs a half-integer level");
  const std::int64_t l = (t.level.twice - 1) / 2;  // level is l + 1/2
  const std::int64_t m = (2 * l + 1) * (l + 1);
  HTable out{HalfInt::integer(l + 1), {}};
  for (std::int64_t b = 0; b < 2 * (l + 1); ++b) {
    ThetaExpr e;
    for (std::int64_t c = 0; c <= 2 * l; ++c)
      e += t.entries[static_cast<std::size_t>(c)] * th(m, (2 * c + 1) * (l + 1) - (2 * l + 1) * b);
    out.entries.push_back(std::move(e));
  }
  return out;
}

HTable h_table(unsigned k) {
  if (k == 0) throw DomainError("h_table needs k >= 1");
  if (k == 1) return h_half_base();
  if (k % 2 == 1) return h_step_odd(h_table(k - 1));
  HTable t = h_base();
  for (unsigned level = 1; level < k / 2; ++level) t = h_step_even(t);
  return t;
}

std::vector<QSeries> eval_table(const HTable& t, const ExpRat& prec) {
  ThetaEvaluator ev(prec);
  std::vector<QSeries> out;
  out.reserve(t.size());
  for (const auto& e : t.entries) out.push_back(ev.eval(e));
  return out;
}

ZetaQSeries decomposition_series(const HTable& t, const ExpRat& qprec) {
  auto hs = eval_table(t, qprec);
  ZetaQSeries out(qprec);
  for (std::size_t i = 0; i < t.size(); ++i) out = zq_add(out, zq_scale(theta_component(t.level, t.residue(i), qprec), hs[i]));
  return out;
}

}  // namespace qtheta
