#pragma once

#include <nlohmann/json.hpp>

#include "qtheta/frobenius.hpp"
#include "qtheta/jacobi.hpp"
#include "qtheta/report.hpp"
#include "qtheta/theta_expr.hpp"

namespace qtheta {

using Json = nlohmann::ordered_json;

/// {lattice_den, val, prec, coeffs: [decimal strings]}
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {qprec, terms: [{zeta_num_over_2, qseries}]}
Json to_json(const ZetaQSeries& f);
ZetaQSeries zeta_from_json(const Json& j);

/// {terms: [{coeff, atoms: [{m, a, scale}]}]}
Json to_json(const ThetaExpr& e);
ThetaExpr theta_expr_from_json(const Json& j);

/// {k, method, coeffs: [decimal strings]}
Json to_json(const CPhiSeries& s);
CPhiSeries cphi_from_json(const Json& j);

/// {claim, range, status, first_failure?, discrepancy?, notes?}
Json to_json(const Report& r);

}  // namespace qtheta
