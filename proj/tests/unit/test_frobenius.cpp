#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/frobenius.hpp"

using namespace qtheta;

namespace {

std::vector<Integer> big(const oracle::Poly& p) { return {p.begin(), p.end()}; }
std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
ThetaExpr T(std::int64_t m, std::int64_t a, std::int64_t s = 1) { return ThetaExpr::theta(m, a, s); }

}  // namespace

TEST(Frobenius, ColoredOrder) {
  EXPECT_LT((ColoredPart{1, 2}), (ColoredPart{2, 1}));
  EXPECT_LT((ColoredPart{2, 1}), (ColoredPart{2, 2}));
  FrobeniusArray a{{{3, 1}, {3, 0 + 1}}, {{1, 1}, {0, 1}}};
  EXPECT_FALSE(a.valid(2));
  FrobeniusArray b{{{3, 2}, {3, 1}}, {{1, 1}, {0, 2}}};
  EXPECT_TRUE(b.valid(2));
  EXPECT_FALSE(b.valid(1));
  EXPECT_EQ(b.weight(), 2 + 3 + 3 + 1 + 0);
}

TEST(Frobenius, EnumerateOneColorIsPartitions) {
  EXPECT_EQ(cphi_enumerate(1, 10).coeffs, big(oracle::partitions(11)));
  EXPECT_EQ(cphi_enumerate(1, 10).coeffs, ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
}

TEST(Frobenius, EnumerateTwoColors) {
  EXPECT_EQ(cphi_enumerate(2, 3).coeffs, ints({1, 4, 9, 20}));
  EXPECT_EQ(cphi_enumerate(2, 8).coeffs, big(oracle::cphi2(9)));
}

TEST(Frobenius, EnumerateThreeColors) {
  auto c = cphi_enumerate(3, 6).coeffs;
  EXPECT_EQ(c[1] % 9, 0);
  EXPECT_EQ(c, big(oracle::cphi3(7)));
}

TEST(Frobenius, ArraysAreDistinctAndValid) {
  std::set<std::pair<std::vector<ColoredPart>, std::vector<ColoredPart>>> seen;
  std::uint64_t n = 0;
  for_each_frobenius_array(
      3, 5,
      [&](const FrobeniusArray& a) {
        EXPECT_TRUE(a.valid(3));
        EXPECT_LE(a.weight(), 5);
        seen.insert({a.top, a.bottom});
        ++n;
      },
      1'000'000);
  EXPECT_EQ(seen.size(), n);
  EXPECT_EQ(n, count_frobenius_arrays(3, 5));
}

TEST(Frobenius, EnumerationCap) {
  EXPECT_THROW(cphi_enumerate(5, 8, 100), CapExceeded);
  setenv("QTHETA_ENUM_CAP", "1234", 1);
  EXPECT_EQ(enumeration_cap(), 1234u);
  EXPECT_THROW(cphi_enumerate(4, 8), CapExceeded);
  unsetenv("QTHETA_ENUM_CAP");
  EXPECT_EQ(enumeration_cap(), 10'000'000u);
}

TEST(Frobenius, RecursionSmallK) {
  EXPECT_EQ(cphi_recursion(1, 30).coeffs, big(oracle::partitions(30)));
  EXPECT_EQ(cphi_recursion(2, 50).coeffs, big(oracle::cphi2(50)));
  EXPECT_EQ(cphi_recursion(3, 40).coeffs, big(oracle::cphi3(40)));
  EXPECT_EQ(cphi_recursion(3, 1).coeffs, ints({1}));
}

TEST(Frobenius, TripleRouteEquality) {
  for (unsigned k = 1; k <= 5; ++k) {
    auto e = cphi_enumerate(k, 7).coeffs;
    EXPECT_EQ(e, cphi_product(k, 8).coeffs) << k;
    EXPECT_EQ(e, cphi_recursion(k, 8).coeffs) << k;
  }
  for (unsigned k = 1; k <= 8; ++k) EXPECT_EQ(cphi_product(k, 30).coeffs, cphi_recursion(k, 30).coeffs) << k;
}

TEST(Frobenius, MonotoneInK) {
  for (unsigned k = 2; k <= 8; ++k) {
    auto a = cphi_recursion(k - 1, 20).coeffs, b = cphi_recursion(k, 20).coeffs;
    EXPECT_EQ(b[0], 1);
    for (std::size_t n = 0; n < a.size(); ++n) EXPECT_GE(b[n], a[n]) << k << " " << n;
  }
}

TEST(Frobenius, Catalog) {
  EXPECT_EQ(catalog_formula(2, 3).coeffs, ints({1, 4, 9}));
  EXPECT_EQ(catalog_formula(2, 40).coeffs, big(oracle::cphi2(40)));
  for (auto& c : catalog_formula(3, 40).coeffs) EXPECT_GE(c, 0);
  for (unsigned k : {2u, 3u, 6u, 7u})
    EXPECT_EQ(catalog_formula(k, 50).coeffs, cphi_recursion(k, 50).coeffs) << k;
  EXPECT_THROW(catalog_formula(4, 5), DomainError);
}

TEST(Frobenius, SixColorsPrintedAtomIsOffLattice) {
  // theta_{3,1}(3t) in place of theta_{2,1}(3t) puts the series off the integer lattice
  ThetaExpr printed = 6 * T(1, 1) * T(1, 1) * T(1, 0) * T(3, 1, 3) * T(2, 1);
  QSeries s = eval_theta_expr(printed, 10);
  EXPECT_NE(s.valuation().denominator(), 1);
  EXPECT_THROW(s.integer_coeffs(5), LatticeError);
}

TEST(Frobenius, EightColorDisplayTermIsNamed) {
  Report r = catalog_report(8, 30);
  EXPECT_TRUE(r.passed);
  ASSERT_TRUE(r.discrepancy.has_value());
  EXPECT_NE(r.discrepancy->find("θ_{1,0}^2θ_{12,0}θ_{6,6}"), std::string::npos);
  EXPECT_NE(r.discrepancy->find("carries coefficient 2; the recursion requires 1"), std::string::npos);
  // with that coefficient set to 1 the display is exact
  auto d = catalog_display(8);
  d[3].coeff = 1;
  EXPECT_EQ(display_expr(d), h_table(8).at(HalfInt::integer(4)));
}

TEST(Frobenius, FormulaRoundTrip) {
  for (unsigned k = 2; k <= 6; ++k) {
    std::string text = cphi_formula_text(k);
    EXPECT_EQ(text, cphi_formula_text(k));
    QSeries s = eval_products(parse_products(text), 30);
    EXPECT_EQ(s.integer_coeffs(30), cphi_recursion(k, 30).coeffs) << k;
  }
  EXPECT_EQ(cphi_formula_text(2), "CPhi_2(q) =\n  + (q^2;q^2)^5/((q;q)^4(q^4;q^4)^2)\n");
}

TEST(Frobenius, PhiPsiIdentities) {
  for (const auto& r : verify_bs_identities(100)) EXPECT_TRUE(r.passed) << r.claim;
  auto reports = verify_bs_identities(20);
  ASSERT_EQ(reports.size(), 3u);
  ASSERT_EQ(reports[2].notes.size(), 1u);
  EXPECT_NE(reports[2].notes[0].find("first power"), std::string::npos);
}

TEST(Frobenius, Congruences) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    Report r = congruence_scan(cphi_recursion(static_cast<unsigned>(p), 51), p * p,
                               [p](std::int64_t n) { return n % p != 0; }, "p does not divide n");
    EXPECT_TRUE(r.passed) << p << ": " << r.first_failure.value_or("");
  }
  EXPECT_TRUE(congruence_scan(cphi_recursion(6, 55), 5, 5, 4).passed);
  // a class where the congruence does not hold is reported
  Report bad = congruence_scan(cphi_recursion(2, 10), 4, 2, 0);
  EXPECT_FALSE(bad.passed);
  EXPECT_NE(bad.first_failure->find("n = 0"), std::string::npos);
}

TEST(Frobenius, MethodNames) {
  for (auto m : {CPhiMethod::recursion, CPhiMethod::product, CPhiMethod::enumeration, CPhiMethod::catalog})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("magic"), DomainError);
}

TEST(Frobenius, RewrittenRecursionIsTheDisplay) {
  auto rules = level2_product_rules();
  for (unsigned k : {6u, 7u}) {
    ThetaExpr h = h_table(k).at(HalfInt::from_twice(static_cast<std::int64_t>(k)));
    EXPECT_NE(h, display_expr(catalog_display(k)));
    EXPECT_EQ(apply_rewrites(h, rules), display_expr(catalog_display(k))) << k;
  }
  EXPECT_EQ(to_string(apply_rewrites(h_table(6).at(HalfInt::integer(3)), rules)),
            "θ_{1,0}^3θ_{2,0}θ_{6,0} + θ_{1,0}^3θ_{2,2}θ_{6,6} + 6θ_{1,0}θ_{1,1}^2θ_{2,1}θ_{6,3}");
}
