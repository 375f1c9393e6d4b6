#pragma once

#include <cstdint>
#include <string>

#include "qtheta/jacobi.hpp"
#include "qtheta/report.hpp"

namespace qtheta {

/// Report comparing two one-variable series below `target`. Fails if either side is
/// known to less than the target precision.
Report compare_series(std::string claim, std::string range, const QSeries& lhs, const QSeries& rhs,
                      const ExpRat& target);
/// Same for two-variable series.
Report compare_zeta(std::string claim, std::string range, const ZetaQSeries& lhs, const ZetaQSeries& rhs,
                    const ExpRat& target);

/// Sum side against product side of the triple product at z + 1/2.
Report verify_jtp(const ExpRat& qprec);
/// theta_{1,0} = eta(2t)^5/(eta(t)^2 eta(4t)^2) and theta_{1,1} = 2 eta(4t)^2/eta(2t), below q^prec.
Report verify_theta_eta(const ExpRat& prec);
/// theta_product against theta_series for all 0 <= b <= m <= m_max.
Report verify_theta_products(std::int64_t m_max, const ExpRat& prec);
/// The Klein form route against theta_series for 0 <= b < m <= m_max.
Report verify_theta_klein(std::int64_t m_max, const ExpRat& prec);

}  // namespace qtheta
