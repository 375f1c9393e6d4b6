#include "qtheta/suites.hpp"

#include <algorithm>

#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/frobenius.hpp"
#include "qtheta/identities.hpp"

namespace qtheta {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",     "jtp", "lemmas",  "decomposition", "lemma42",
                                              "bs",      "catalog", "congruences", "routes"};
  return names;
}

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
const Pairs kLemmaPairs{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};

void jtp(std::vector<Report>& out, std::int64_t terms) { out.push_back(verify_jtp(terms)); }

void lemmas(std::vector<Report>& out, std::int64_t terms) {
  Report sq = verify_decomposition(2, terms);
  sq.claim = "square: " + sq.claim;
  out.push_back(std::move(sq));
  for (auto [l, c] : kLemmaPairs) out.push_back(verify_lemma_onemore(l, c, terms));
  for (int eps : {0, 1})
    for (auto [l, c] : kLemmaPairs) out.push_back(verify_lemma_theta1eps(eps, l, c, terms));
}

void decomposition(std::vector<Report>& out, std::optional<unsigned> k, std::int64_t terms) {
  if (k) {
    out.push_back(verify_decomposition(*k, terms));
    return;
  }
  for (unsigned j = 1; j <= 8; ++j) out.push_back(verify_decomposition(j, terms));
}

void lemma42(std::vector<Report>& out, std::int64_t terms) {
  for (auto& r : verify_lemma42(terms)) out.push_back(std::move(r));
}

void bs(std::vector<Report>& out, std::int64_t terms) {
  for (auto& r : verify_bs_identities(terms)) out.push_back(std::move(r));
}

void catalog(std::vector<Report>& out, std::optional<unsigned> k, std::int64_t terms) {
  auto n = static_cast<std::size_t>(terms);
  if (k) {
    out.push_back(catalog_report(*k, n));
    return;
  }
  for (unsigned j : {2u, 3u, 6u, 7u, 8u}) out.push_back(catalog_report(j, n));
}

void congruences(std::vector<Report>& out, std::int64_t terms) {
  auto n = static_cast<std::size_t>(terms);
  for (std::int64_t p : {2, 3, 5, 7})
    out.push_back(congruence_scan(cphi_recursion(static_cast<unsigned>(p), n), p * p,
                                  [p](std::int64_t m) { return m % p != 0; },
                                  "n not divisible by " + std::to_string(p)));
  out.push_back(congruence_scan(cphi_recursion(6, n), 5, 5, 4));
}

void routes(std::vector<Report>& out, std::optional<unsigned> k, std::int64_t terms) {
  const ExpRat prec(terms);
  for (std::int64_t l = 1; l <= 3; ++l) out.push_back(verify_route_independence(l, prec));
  for (std::int64_t l = 1; l <= 3; ++l) out.push_back(verify_grouping(l));
  for (unsigned j = 1; j <= 8; ++j) out.push_back(verify_symmetry(h_table(j), prec));
  out.push_back(verify_theta_eta(prec));
  out.push_back(verify_theta_products(24, prec));
  out.push_back(verify_theta_klein(8, prec));

  std::vector<unsigned> ks;
  if (k)
    ks.push_back(*k);
  else
    for (unsigned j = 1; j <= 8; ++j) ks.push_back(j);
  auto n = static_cast<std::size_t>(terms);
  for (unsigned j : ks) {
    Report r{"cphi_" + std::to_string(j) + ": recursion = constant term of the product",
             "first " + std::to_string(n) + " coefficients"};
    auto a = cphi_recursion(j, n).coeffs;
    auto b = cphi_product(j, n).coeffs;
    auto mm = std::mismatch(a.begin(), a.end(), b.begin());
    if (mm.first != a.end()) {
      r.passed = false;
      auto i = mm.first - a.begin();
      r.first_failure = "cphi(" + std::to_string(i) + "): recursion " + mm.first->get_str() + ", product " +
                        mm.second->get_str();
    }
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<Report> run_suite(const std::string& suite, std::optional<unsigned> k, std::int64_t terms) {
  if (terms < 1) throw DomainError("terms must be >= 1");
  std::vector<Report> out;
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown suite '" + suite + "'");
  if (all || suite == "jtp") jtp(out, terms);
  if (all || suite == "lemmas") lemmas(out, terms);
  if (all || suite == "decomposition") decomposition(out, k, terms);
  if (all || suite == "lemma42") lemma42(out, terms);
  if (all || suite == "bs") bs(out, terms);
  if (all || suite == "catalog") catalog(out, all ? std::nullopt : k, terms);
  if (all || suite == "congruences") congruences(out, terms);
  if (all || suite == "routes") routes(out, k, terms);
  return out;
}

}  // namespace qtheta
