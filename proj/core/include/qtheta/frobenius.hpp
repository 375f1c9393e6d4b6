#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtheta/qseries.hpp"
#include "qtheta/render.hpp"
#include "qtheta/report.hpp"
#include "qtheta/theta_expr.hpp"

namespace qtheta {

/// A nonnegative integer carrying one of k colors. Ordered by value, then color.
struct ColoredPart {
  std::int64_t value = 0;
  int color = 1;

  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Two strictly decreasing rows of colored parts of equal length.
struct FrobeniusArray {
  std::vector<ColoredPart> top;
  std::vector<ColoredPart> bottom;

  /// m + sum of all part values.
  std::int64_t weight() const;
  bool valid(unsigned k) const;
};

enum class CPhiMethod { recursion, product, enumeration, catalog };

std::string to_string(CPhiMethod m);
/// Accepts "recursion", "product", "enumerate"/"enumeration", "catalog".
CPhiMethod parse_method(const std::string& s);

struct CPhiSeries {
  unsigned k = 1;
  CPhiMethod method = CPhiMethod::recursion;
  std::vector<Integer> coeffs;  // cphi_k(0), cphi_k(1), ...
};

// ---- enumeration ----------------------------------------------------------

/// Cap on generated arrays: QTHETA_ENUM_CAP if set, otherwise 10^7.
std::uint64_t enumeration_cap();

/// Exact number of arrays of weight <= n_max, computed from row counts without
/// generating the arrays.
std::uint64_t count_frobenius_arrays(unsigned k, std::int64_t n_max);

/// Calls f once for every k-colored array of weight <= n_max.
/// Throws CapExceeded before generating anything if the count exceeds cap.
void for_each_frobenius_array(unsigned k, std::int64_t n_max, const std::function<void(const FrobeniusArray&)>& f,
                              std::uint64_t cap);

/// cphi_k(0..n_max) by exhaustive generation.
CPhiSeries cphi_enumerate(unsigned k, std::int64_t n_max, std::uint64_t cap = enumeration_cap());

// ---- series routes --------------------------------------------------------

/// h_{k/2,k/2} / (q;q)^k from the recursion, first n_terms coefficients.
CPhiSeries cphi_recursion(unsigned k, std::size_t n_terms);
/// Constant zeta-term of (-zeta q;q)^k (-zeta^{-1};q)^k.
CPhiSeries cphi_product(unsigned k, std::size_t n_terms);
/// Known closed formulas for k in {2, 3, 6, 7, 8}.
CPhiSeries catalog_formula(unsigned k, std::size_t n_terms);
bool in_catalog(unsigned k);

/// One named term coeff * unit of a displayed formula for h_{k/2,k/2}.
struct DisplayTerm {
  std::string label;
  std::int64_t coeff;
  ThetaExpr unit;
};

/// Displayed expression for h_{k/2,k/2} (k in {6, 7, 8}) as a list of named terms.
std::vector<DisplayTerm> catalog_display(unsigned k);
ThetaExpr display_expr(const std::vector<DisplayTerm>& d);

/// catalog_formula(k) against cphi_recursion(k). For a displayed h formula that disagrees,
/// looks for the single display term whose coefficient explains the whole difference and
/// names it in first_failure / notes.
Report catalog_report(unsigned k, std::size_t n_terms);

/// The cphi_k formula as a sum of Pochhammer products.
std::vector<ProductTerm> cphi_formula(unsigned k);
std::string cphi_formula_text(unsigned k);

// ---- phi/psi identities and congruences ------------------------------------

/// phi(q) = theta_{1,0}, 2 q^{1/4} psi(q^2) = theta_{1,1}, and the product identity for
/// 4 q psi(q)^3 psi(q^2) psi(q^3).
std::vector<Report> verify_bs_identities(const ExpRat& qprec);

/// Lists every n in the class with cphi(n) not divisible by modulus.
Report congruence_scan(const CPhiSeries& s, std::int64_t modulus, const std::function<bool(std::int64_t)>& in_class,
                       const std::string& class_desc);
/// Class a n + b.
Report congruence_scan(const CPhiSeries& s, std::int64_t modulus, std::int64_t a, std::int64_t b);

}  // namespace qtheta
