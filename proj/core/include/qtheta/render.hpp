#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtheta/qseries.hpp"
#include "qtheta/theta_expr.hpp"

namespace qtheta {

/// (q^base; q^step)_inf^exp; a negative exponent puts the factor in the denominator.
struct PochFactor {
  std::int64_t base = 1;
  std::int64_t step = 1;
  std::int64_t exp = 1;

  friend bool operator==(const PochFactor&, const PochFactor&) = default;
};

/// coeff * q^{q_power} * prod factors.
struct ProductTerm {
  Integer coeff = 1;
  ExpRat q_power = 0;
  std::vector<PochFactor> factors;

  /// Multiplies in a factor, merging with an equal (base, step) and dropping zero powers.
  /// Factors are kept sorted by (step, base).
  void multiply(PochFactor f);
  void multiply(const ProductTerm& t);

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

/// Product form of a single canonical nullwert theta_{m,a}.
ProductTerm theta_product_term(std::int64_t m, std::int64_t a);

/// Each term of e turned into a product of Pochhammer symbols. Terms that become equal
/// are merged.
std::vector<ProductTerm> product_terms(const ThetaExpr& e);

std::string render_term(const ProductTerm& t);
/// One-line rendering, terms joined by " + " / " - ".
std::string render_products(const ThetaExpr& e);
/// Multi-line rendering: a "name =" header followed by one signed term per line.
std::string render_formula(const std::string& name, const std::vector<ProductTerm>& terms);

/// Parses either rendering back into terms. A leading "name =" is skipped.
/// Throws std::invalid_argument on malformed text.
std::vector<ProductTerm> parse_products(const std::string& text);

QSeries eval_products(const std::vector<ProductTerm>& terms, const ExpRat& prec);

}  // namespace qtheta
