#include "qtheta/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qtheta/errors.hpp"

namespace qtheta {

void ProductTerm::multiply(PochFactor f) {
  if (f.exp == 0) return;
  auto key = [](const PochFactor& x) { return std::pair(x.step, x.base); };
  auto it = std::lower_bound(factors.begin(), factors.end(), f,
                             [&](const PochFactor& a, const PochFactor& b) { return key(a) < key(b); });
  if (it != factors.end() && key(*it) == key(f)) {
    it->exp += f.exp;
    if (it->exp == 0) factors.erase(it);
  } else {
    factors.insert(it, f);
  }
}

void ProductTerm::multiply(const ProductTerm& t) {
  coeff *= t.coeff;
  q_power += t.q_power;
  for (const auto& f : t.factors) multiply(f);
}

ProductTerm theta_product_term(std::int64_t m, std::int64_t a) {
  if (m < 1 || a < 0 || a > m) throw DomainError("theta_product_term needs a canonical atom");
  ProductTerm t;
  if (a == 0) {
    // theta_{1,0}(m tau) = eta(2m)^5 / (eta(m)^2 eta(4m)^2)
    t.multiply({2 * m, 2 * m, 5});
    t.multiply({m, m, -2});
    t.multiply({4 * m, 4 * m, -2});
  } else if (a == m) {
    // theta_{1,1}(m tau) = 2 eta(4m)^2 / eta(2m)
    t.coeff = 2;
    t.q_power = ExpRat(m, 4);
    t.multiply({4 * m, 4 * m, 2});
    t.multiply({2 * m, 2 * m, -1});
  } else {
    t.q_power = ExpRat(a * a, 4 * m);
    t.multiply({2 * m, 2 * m, 1});
    t.multiply({2 * m - 2 * a, 4 * m, 1});
    t.multiply({2 * m + 2 * a, 4 * m, 1});
    t.multiply({m - a, 2 * m, -1});
    t.multiply({m + a, 2 * m, -1});
  }
  return t;
}

std::vector<ProductTerm> product_terms(const ThetaExpr& e) {
  std::vector<ProductTerm> out;
  for (const auto& [mono, c] : e.terms()) {
    ProductTerm t;
    t.coeff = Integer(static_cast<long>(c));
    for (const auto& s : mono) t.multiply(theta_product_term(s.m, s.a));
    auto same = std::find_if(out.begin(), out.end(), [&](const ProductTerm& o) {
      return o.q_power == t.q_power && o.factors == t.factors;
    });
    if (same == out.end()) {
      out.push_back(std::move(t));
    } else {
      same->coeff += t.coeff;
      if (sgn(same->coeff) == 0) out.erase(same);
    }
  }
  return out;
}

namespace {

std::string q_to(std::int64_t e) { return e == 1 ? "q" : "q^" + std::to_string(e); }

std::string render_factor(const PochFactor& f) {
  std::string s = "(" + q_to(f.base) + ";" + q_to(f.step) + ")";
  std::int64_t e = f.exp < 0 ? -f.exp : f.exp;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// Term without its sign.
std::string render_magnitude(const ProductTerm& t) {
  std::string num, den;
  std::size_t n_den = 0;
  for (const auto& f : t.factors) {
    if (f.exp > 0) {
      num += render_factor(f);
    } else {
      den += render_factor(f);
      ++n_den;
    }
  }
  std::vector<std::string> pieces;
  Integer mag = abs(t.coeff);
  bool has_q = t.q_power != ExpRat(0);
  if (mag != 1 || (!has_q && num.empty())) pieces.push_back(mag.get_str());
  if (has_q) {
    if (t.q_power.denominator() == 1)
      pieces.push_back(q_to(t.q_power.numerator()));
    else
      pieces.push_back("q^{" + std::to_string(t.q_power.numerator()) + "/" +
                       std::to_string(t.q_power.denominator()) + "}");
  }
  if (!num.empty()) pieces.push_back(num);
  std::string s;
  for (std::size_t i = 0; i < pieces.size(); ++i) s += (i ? " " : "") + pieces[i];
  if (n_den == 1) s += "/" + den;
  if (n_den > 1) s += "/(" + den + ")";
  return s;
}

}  // namespace

std::string render_term(const ProductTerm& t) { return (sgn(t.coeff) < 0 ? "-" : "") + render_magnitude(t); }

std::string render_products(const ThetaExpr& e) {
  auto terms = product_terms(e);
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool neg = sgn(terms[i].coeff) < 0;
    if (i == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += render_magnitude(terms[i]);
  }
  return s;
}

std::string render_formula(const std::string& name, const std::vector<ProductTerm>& terms) {
  std::string s = name + " =\n";
  if (terms.empty()) return s + "  0\n";
  for (const auto& t : terms) s += std::string("  ") + (sgn(t.coeff) < 0 ? "- " : "+ ") + render_magnitude(t) + "\n";
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    if (auto eq = s_.find('='); eq != std::string::npos) pos_ = eq + 1;
  }

  std::vector<ProductTerm> parse() {
    std::vector<ProductTerm> out;
    if (peek() == '0' && pos_ + 1 == s_.size()) return out;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      ProductTerm t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    }
    if (out.empty()) fail("empty formula");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("product formula: " + what + " at offset " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end");
    return s_[pos_++];
  }
  void expect(char c) {
    if (get() != c) {
      --pos_;
      fail(std::string("expected '") + c + "'");
    }
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  // q, q^n
  std::int64_t q_exponent() {
    expect('q');
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }

  PochFactor factor() {
    expect('(');
    PochFactor f;
    f.base = q_exponent();
    expect(';');
    f.step = q_exponent();
    expect(')');
    f.exp = 1;
    if (peek() == '^') {
      ++pos_;
      f.exp = integer();
    }
    return f;
  }

  ProductTerm term() {
    ProductTerm t;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      t.coeff = Integer(s_.substr(start, pos_ - start));
      any = true;
    }
    if (peek() == 'q') {
      ++pos_;
      if (peek() != '^') {
        t.q_power = 1;
      } else {
        ++pos_;
        if (peek() == '{') {
          ++pos_;
          std::int64_t p = integer(), r = 1;
          if (peek() == '/') {
            ++pos_;
            r = integer();
          }
          expect('}');
          if (r == 0) fail("zero denominator");
          t.q_power = ExpRat(p, r);
        } else {
          t.q_power = integer();
        }
      }
      any = true;
    }
    while (peek() == '(') {
      t.multiply(factor());
      any = true;
    }
    if (!any) fail("empty term");
    if (peek() == '/') {
      ++pos_;
      auto inv = [&](PochFactor f) {
        f.exp = -f.exp;
        t.multiply(f);
      };
      if (peek() == '(' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
        ++pos_;
        while (peek() == '(') inv(factor());
        expect(')');
      } else {
        inv(factor());
      }
    }
    return t;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ProductTerm> parse_products(const std::string& text) { return Parser(text).parse(); }

QSeries eval_products(const std::vector<ProductTerm>& terms, const ExpRat& prec) {
  QSeries total = QSeries::zero(prec);
  for (const auto& t : terms) {
    const ExpRat inner = prec - t.q_power;
    if (inner <= 0) continue;
    QSeries s = QSeries::monomial(t.coeff, 0, inner);
    for (const auto& f : t.factors) {
      QSeries p = qs_pow(pochhammer(f.base, f.step, inner), static_cast<unsigned>(f.exp < 0 ? -f.exp : f.exp));
      s = f.exp > 0 ? qs_mul(s, p) : qs_mul(s, qs_inv(p, inner));
    }
    total = qs_add(total, s.shifted(t.q_power));
  }
  return total.truncated(prec);
}

}  // namespace qtheta
