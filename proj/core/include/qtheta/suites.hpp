#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtheta/report.hpp"

namespace qtheta {

/// Names accepted by run_suite: all, jtp, lemmas, decomposition, lemma42, bs, catalog,
/// congruences, routes.
const std::vector<std::string>& suite_names();

/// Runs one verification suite. `k` narrows suites that range over k; `terms` is the
/// q-precision (or number of coefficients for one-variable series).
/// Throws DomainError for an unknown suite.
std::vector<Report> run_suite(const std::string& suite, std::optional<unsigned> k, std::int64_t terms);

}  // namespace qtheta
