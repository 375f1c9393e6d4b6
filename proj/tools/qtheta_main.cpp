// qtheta: k-colored Frobenius partition generating functions and theta decompositions.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/frobenius.hpp"
#include "qtheta/serialize.hpp"
#include "qtheta/suites.hpp"

using namespace qtheta;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

struct Options {
  unsigned k = 0;
  std::optional<std::int64_t> terms;
  std::string method = "recursion";
  std::string suite = "all";
  std::string output = "json";
  bool list = false;
  bool rewrite = false;
};

bool text(const Options& o) { return o.output == "text"; }

int usage(const std::string& msg) {
  std::cerr << "qtheta: " << msg << "\n";
  return kUsage;
}

int cmd_cphi(const Options& o) {
  const std::int64_t n = o.terms.value_or(30);
  CPhiMethod m = parse_method(o.method);
  if (m == CPhiMethod::catalog && !in_catalog(o.k)) return usage("--method catalog needs k in {2, 3, 6, 7, 8}");
  CPhiSeries s;
  auto count = static_cast<std::size_t>(n);
  switch (m) {
    case CPhiMethod::recursion: s = cphi_recursion(o.k, count); break;
    case CPhiMethod::product: s = cphi_product(o.k, count); break;
    case CPhiMethod::enumeration: s = cphi_enumerate(o.k, n - 1); break;
    case CPhiMethod::catalog: s = catalog_formula(o.k, count); break;
  }
  if (text(o)) {
    std::cout << "cphi_" << s.k << " (" << to_string(s.method) << ")\n";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) std::cout << std::setw(6) << i << "  " << s.coeffs[i] << "\n";
  } else {
    std::cout << to_json(s).dump(2) << "\n";
  }
  return kOk;
}

int cmd_htable(const Options& o) {
  HTable t = h_table(o.k);
  if (o.rewrite)
    for (auto& e : t.entries) e = apply_rewrites(e, level2_product_rules());
  if (text(o)) {
    for (std::size_t i = 0; i < t.size(); ++i)
      std::cout << "h_{" << to_string(t.level) << "," << to_string(t.residue(i)) << "} = " << to_string(t.entries[i])
                << "\n";
    return kOk;
  }
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    entries.push_back(Json{{"residue", to_string(t.residue(i))}, {"text", to_string(t.entries[i])},
                           {"expr", to_json(t.entries[i])}});
  std::cout << Json{{"level", to_string(t.level)}, {"entries", entries}}.dump(2) << "\n";
  return kOk;
}

int cmd_formula(const Options& o) {
  if (o.k < 2) return usage("formula needs --k >= 2");
  std::string f = cphi_formula_text(o.k);
  if (text(o))
    std::cout << f;
  else
    std::cout << Json{{"k", o.k}, {"formula", f}}.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  std::optional<unsigned> k;
  if (o.k > 0) k = o.k;
  if (o.suite == "catalog" && k && !in_catalog(*k)) return usage("catalog suite needs k in {2, 3, 6, 7, 8}");
  auto reports = run_suite(o.suite, k, o.terms.value_or(20));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;
  if (text(o)) {
    for (const auto& r : reports) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.claim << "  [" << r.range << "]\n";
      if (r.first_failure) std::cout << "      first difference: " << *r.first_failure << "\n";
      if (r.discrepancy) std::cout << "      discrepancy: " << *r.discrepancy << "\n";
      for (const auto& n : r.notes) std::cout << "      note: " << n << "\n";
    }
    std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
  } else {
    Json checks = Json::array();
    for (const auto& r : reports) checks.push_back(to_json(r));
    std::cout << Json{{"suite", o.suite}, {"passed", ok}, {"checks", checks}}.dump(2) << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_enumerate(const Options& o) {
  const std::int64_t n_max = o.terms.value_or(8) - 1;
  if (o.list) {
    for_each_frobenius_array(
        o.k, n_max,
        [](const FrobeniusArray& a) {
          auto row = [](const std::vector<ColoredPart>& r) {
            std::string s;
            for (const auto& p : r) s += (s.empty() ? "" : " ") + std::to_string(p.value) + "_" + std::to_string(p.color);
            return s;
          };
          std::cout << a.weight() << ": (" << row(a.top) << " / " << row(a.bottom) << ")\n";
        },
        enumeration_cap());
    return kOk;
  }
  Options c = o;
  c.method = "enumerate";
  return cmd_cphi(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta decompositions and k-colored Frobenius partition generating functions"};
  app.require_subcommand(1);
  Options o;

  auto add_k = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--k", o.k, "number of colors / twice the level")->check(CLI::Range(1u, 64u));
    if (required) opt->required();
  };
  auto add_terms = [&](CLI::App* s) {
    s->add_option("--terms", o.terms, "q-precision (number of coefficients)")->check(CLI::Range(1, 100000));
  };
  auto add_output = [&](CLI::App* s) {
    s->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* cphi = app.add_subcommand("cphi", "coefficients of the generating function CPhi_k");
  add_k(cphi, true);
  add_terms(cphi);
  cphi->add_option("--method", o.method, "recursion, product, enumerate or catalog")
      ->check(CLI::IsMember({"recursion", "product", "enumerate", "catalog"}));
  add_output(cphi);

  auto* htable = app.add_subcommand("htable", "decomposition coefficients h_{k/2,c} as theta expressions");
  add_k(htable, true);
  htable->add_flag("--rewrite", o.rewrite, "apply the level-2 product identities");
  add_output(htable);

  auto* formula = app.add_subcommand("formula", "CPhi_k as a sum of Pochhammer products");
  add_k(formula, true);
  add_output(formula);

  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", o.suite, "all, jtp, lemmas, decomposition, lemma42, bs, catalog, congruences, routes")
      ->check(CLI::IsMember(suite_names()));
  add_k(verify, false);
  add_terms(verify);
  add_output(verify);

  auto* enumerate = app.add_subcommand("enumerate", "count (or list) k-colored Frobenius partitions by brute force");
  add_k(enumerate, true);
  add_terms(enumerate);
  enumerate->add_flag("--list", o.list, "print every array instead of the counts");
  add_output(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (cphi->parsed()) return cmd_cphi(o);
    if (htable->parsed()) return cmd_htable(o);
    if (formula->parsed()) return cmd_formula(o);
    if (verify->parsed()) return cmd_verify(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
  } catch (const CapExceeded& e) {
    std::cerr << "qtheta: " << e.what() << "\n";
    return kCap;
  } catch (const DomainError& e) {
    return usage(e.what());
  } catch (const VerificationFailure& e) {
    std::cerr << "qtheta: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
