#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qtheta/halfint.hpp"
#include "qtheta/jacobi.hpp"
#include "qtheta/report.hpp"
#include "qtheta/theta_expr.hpp"

namespace qtheta {

/// Theta-decomposition coefficients {h_{l,c}} at one level l in (1/2)N, so that
///   (-theta(z + 1/2; tau))^{2l} = sum_{c mod 2l} h_{l,c}(tau) theta_{l,c}(z; tau).
/// Residues run over c in Z (integral l) or c in 1/2 + Z (half-integral l); entry i holds
/// residue c = i (+ 1/2).
struct HTable {
  HalfInt level;
  std::vector<ThetaExpr> entries;

  std::size_t size() const { return entries.size(); }
  HalfInt residue(std::size_t i) const;
  /// Entry for residue c, reduced mod 2l. Throws GridMismatch for a residue off the grid.
  const ThetaExpr& at(HalfInt c) const;
  ThetaExpr& at(HalfInt c);
};

/// h_{1,j} = theta_{1,j+1} for any integer j.
ThetaExpr h_one(std::int64_t j);

/// Level 1: h_{1,0} = theta_{1,1}, h_{1,1} = theta_{1,0}.
HTable h_base();
/// Level 1/2: the single entry h_{1/2,1/2} = 1.
HTable h_half_base();

/// Integer level l -> l + 1, three-term grouped recursion (uses h_{l,c} for 0 <= c <= l).
HTable h_step_even(const HTable& t);
/// Integer level l -> l + 1, plain sum over all c mod 2l.
HTable h_step_even_ungrouped(const HTable& t);
/// Integer level l -> l + 1/2.
HTable h_step_odd(const HTable& t);
/// Half-integer level l + 1/2 -> l + 1.
HTable h_step_half_to_int(const HTable& t);

/// The table at level k/2.
HTable h_table(unsigned k);

std::vector<QSeries> eval_table(const HTable& t, const ExpRat& prec);

/// The right-hand side sum_c h_{l,c} theta_{l,c}(z;tau) as a two-variable series.
ZetaQSeries decomposition_series(const HTable& t, const ExpRat& qprec);

// ---- verification ---------------------------------------------------------

/// (-theta(z+1/2))^k against sum_b h_{k/2,b} theta_{k/2,b}(z).
Report verify_decomposition(unsigned k, const ExpRat& qprec);
/// -theta(z+1/2) theta_{l,c}(z) = sum_{a mod 2l+1} theta_{l(2l+1), c-2la-l} theta_{l+1/2, a+c+1/2}(z).
Report verify_lemma_onemore(std::int64_t l, std::int64_t c, const ExpRat& qprec);
/// theta_{1,eps}(z) theta_{l,c}(z) = sum_{a mod l+1} theta_{l(l+1), (2a+eps)l-c} theta_{l+1, 2a+c+eps}(z).
Report verify_lemma_theta1eps(int eps, std::int64_t l, std::int64_t c, const ExpRat& qprec);
/// theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3} and its companion.
std::vector<Report> verify_lemma42(const ExpRat& prec);
/// h_{l,c} = h_{l,2l-c} for every residue, as evaluated series.
Report verify_symmetry(const HTable& t, const ExpRat& prec);
/// h_step_half_to_int(h_step_odd(t)) against h_step_even(t), evaluated.
Report verify_route_independence(std::int64_t level, const ExpRat& prec);
/// Grouped and ungrouped even steps agree as canonical theta expressions.
Report verify_grouping(std::int64_t level);

}  // namespace qtheta
