#include <random>

#include <gtest/gtest.h>

#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/render.hpp"

using namespace qtheta;

namespace {

ThetaExpr T(std::int64_t m, std::int64_t a, std::int64_t s = 1) { return ThetaExpr::theta(m, a, s); }
ThetaExpr K(std::int64_t c) { return ThetaExpr::constant(c); }
HalfInt I(std::int64_t n) { return HalfInt::integer(n); }
HalfInt H(std::int64_t twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST(ThetaExpr, Canonicalization) {
  EXPECT_EQ(T(1, 2), T(1, 0));
  EXPECT_EQ(T(21, -21), T(21, 21));
  EXPECT_EQ(T(1, 1, 3), T(3, 3));
  EXPECT_EQ(T(2, 1, 3), T(6, 3));
  EXPECT_EQ(T(1, 0) * T(2, 1), T(2, 1) * T(1, 0));
  EXPECT_TRUE((T(1, 0) - T(1, 2)).is_zero());
  EXPECT_EQ(to_string(2 * T(1, 0) * T(1, 1) * T(1, 1)), "2θ_{1,0}θ_{1,1}^2");
  EXPECT_THROW(T(0, 0), DomainError);
}

TEST(ThetaExpr, EvalLeadingTerm) {
  QSeries s = eval_theta_expr(2 * T(1, 0) * T(1, 1) * T(2, 1), 5);
  EXPECT_EQ(s.valuation(), ExpRat(3, 8));
  EXPECT_EQ(s.leading_coeff(), 4);
  EXPECT_EQ(eval_theta_expr(T(1, 0), 9), theta_series(1, 0, 1, 9));
}

TEST(ThetaExpr, EvalIsRingHomomorphism) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> m(1, 6), c(-3, 3), n(1, 3);
  auto random_expr = [&] {
    ThetaExpr e;
    for (int i = n(rng); i > 0; --i) {
      ThetaExpr t = K(c(rng));
      for (int j = n(rng); j > 0; --j) {
        int mm = m(rng);
        t = t * T(mm, c(rng) + mm);
      }
      e += t;
    }
    return e;
  };
  const ExpRat p = 8;
  for (int trial = 0; trial < 40; ++trial) {
    ThetaExpr a = random_expr(), b = random_expr();
    EXPECT_EQ(eval_theta_expr(a * b, p), qs_mul(eval_theta_expr(a, p), eval_theta_expr(b, p)));
    EXPECT_EQ(eval_theta_expr(a + b, p), qs_add(eval_theta_expr(a, p), eval_theta_expr(b, p)));
  }
}

TEST(Decomp, BaseTables) {
  HTable one = h_base();
  EXPECT_EQ(one.level, I(1));
  EXPECT_EQ(one.at(I(0)), T(1, 1));
  EXPECT_EQ(one.at(I(1)), T(1, 0));
  EXPECT_EQ(one.at(I(2)), T(1, 1));
  EXPECT_EQ(h_one(3), T(1, 0));
  HTable half = h_half_base();
  EXPECT_EQ(half.size(), 1u);
  EXPECT_EQ(half.at(H(1)), K(1));
  EXPECT_THROW(half.at(I(0)), GridMismatch);
  EXPECT_THROW(one.at(H(1)), GridMismatch);
}

TEST(Decomp, LevelTwo) {
  HTable t = h_table(4);
  ThetaExpr s10 = T(1, 0) * T(1, 0), s11 = T(1, 1) * T(1, 1);
  EXPECT_EQ(t.at(I(0)), s11 * T(2, 0) + s10 * T(2, 2));
  EXPECT_EQ(t.at(I(1)), 2 * T(1, 0) * T(1, 1) * T(2, 1));
  EXPECT_EQ(t.at(I(2)), s11 * T(2, 2) + s10 * T(2, 0));
  EXPECT_EQ(t.at(I(3)), t.at(I(1)));
}

TEST(Decomp, LevelThree) {
  HTable h2 = h_table(4), h3 = h_table(6);
  ThetaExpr a = h2.at(I(0)), b = h2.at(I(1)), c = h2.at(I(2));
  EXPECT_EQ(h3.at(I(0)), T(1, 1) * T(6, 0) * a + 2 * T(1, 0) * T(6, 3) * b + T(1, 1) * T(6, 6) * c);
  EXPECT_EQ(h3.at(I(1)), T(1, 0) * T(6, 2) * a + T(1, 1) * (T(6, 1) + T(6, 5)) * b + T(1, 0) * T(6, 4) * c);
  EXPECT_EQ(h3.at(I(2)), T(1, 1) * T(6, 4) * a + T(1, 0) * (T(6, 1) + T(6, 5)) * b + T(1, 1) * T(6, 2) * c);
  EXPECT_EQ(h3.at(I(3)), T(1, 0) * T(6, 6) * a + 2 * T(1, 1) * T(6, 3) * b + T(1, 0) * T(6, 0) * c);
  EXPECT_EQ(h3.at(I(5)), h3.at(I(1)));
  EXPECT_EQ(h3.at(I(4)), h3.at(I(2)));
}

TEST(Decomp, MiddleEntryAtLevelThreeSimplified) {
  ThetaExpr t10 = T(1, 0), t11 = T(1, 1);
  ThetaExpr expanded = 4 * t10 * t11 * t11 * T(2, 1) * T(6, 3) +
                       t10 * t11 * t11 * (T(2, 0) * T(6, 6) + T(2, 2) * T(6, 0)) +
                       t10 * t10 * t10 * (T(2, 2) * T(6, 6) + T(2, 0) * T(6, 0));
  ThetaExpr h33 = h_table(6).at(I(3));
  EXPECT_EQ(h33, expanded);
  ThetaExpr simplified =
      6 * t10 * t11 * t11 * T(2, 1) * T(6, 3) + t10 * t10 * t10 * (T(2, 2) * T(6, 6) + T(2, 0) * T(6, 0));
  EXPECT_FALSE(h33 == simplified);
  EXPECT_EQ(eval_theta_expr(h33, 40), eval_theta_expr(simplified, 40));
}

TEST(Decomp, HalfIntegerLevels) {
  HTable h72 = h_table(7);
  HTable h3 = h_table(6);
  EXPECT_EQ(h72.level, H(7));
  EXPECT_EQ(h72.size(), 7u);
  ThetaExpr expect =
      h3.at(I(0)) * T(21, 21) + 2 * h3.at(I(1)) * T(21, 14) + 2 * h3.at(I(2)) * T(21, 7) + h3.at(I(3)) * T(21, 0);
  EXPECT_EQ(h72.at(H(7)), expect);
  EXPECT_EQ(h_table(3).size(), 3u);
  EXPECT_EQ(h_table(1).at(H(1)), K(1));
}

TEST(Decomp, SevenHalvesDisplays) {
  // The expanded three-line form and the simplified closed form, both by value.
  ThetaExpr t10 = T(1, 0), t11 = T(1, 1);
  ThetaExpr first = t11 * t11 * T(2, 0) + t10 * t10 * T(2, 2);
  ThetaExpr last = t11 * t11 * T(2, 2) + t10 * t10 * T(2, 0);
  ThetaExpr lines =
      (t11 * T(6, 0) * T(21, 21) + 2 * t10 * T(6, 2) * T(21, 14) + 2 * t11 * T(6, 4) * T(21, 7) +
       t10 * T(6, 6) * T(21, 0)) * first +
      4 * t10 * t11 * T(2, 1) *
          (T(6, 3) * (t10 * T(21, 21) + t11 * T(21, 0)) + (T(6, 1) + T(6, 5)) * (t11 * T(21, 14) + t10 * T(21, 7))) +
      (t11 * T(6, 6) * T(21, 21) + 2 * t10 * T(6, 4) * T(21, 14) + 2 * t11 * T(6, 2) * T(21, 7) +
       t10 * T(6, 0) * T(21, 0)) * last;
  ThetaExpr h = h_table(7).at(H(7));
  EXPECT_EQ(h, lines);
}

TEST(Decomp, EightIntermediateForm) {
  HTable h3 = h_table(6);
  ThetaExpr expect = T(1, 1) * T(12, 12) * h3.at(I(0)) + 2 * T(1, 0) * T(12, 8) * h3.at(I(1)) +
                     2 * T(1, 1) * T(12, 4) * h3.at(I(2)) + T(1, 0) * T(12, 0) * h3.at(I(3));
  EXPECT_EQ(h_table(8).at(I(4)), expect);
}

TEST(Decomp, StepsRejectWrongLevels) {
  EXPECT_THROW(h_step_even(h_half_base()), DomainError);
  EXPECT_THROW(h_step_odd(h_table(3)), DomainError);
  EXPECT_THROW(h_step_half_to_int(h_base()), DomainError);
  EXPECT_THROW(h_table(0), DomainError);
}

TEST(Decomp, ResidueCounts) {
  for (unsigned k = 1; k <= 9; ++k) EXPECT_EQ(h_table(k).size(), k);
  EXPECT_EQ(h_step_half_to_int(h_step_odd(h_base())).size(), 4u);
}

TEST(Decomp, DecompositionIdentity) {
  for (unsigned k = 1; k <= 8; ++k) {
    Report r = verify_decomposition(k, 10);
    EXPECT_TRUE(r.passed) << k << ": " << r.first_failure.value_or("");
  }
  EXPECT_TRUE(verify_decomposition(3, 15).passed);
}

TEST(Decomp, SymmetryRule) {
  for (unsigned k = 1; k <= 8; ++k) {
    HTable t = h_table(k);
    EXPECT_TRUE(verify_symmetry(t, 12).passed) << k;
    for (std::size_t i = 0; i < t.size(); ++i)
      EXPECT_EQ(t.entries[i], t.at(HalfInt::from_twice(2 * t.level.twice - t.residue(i).twice)));
  }
}

TEST(Decomp, RouteIndependence) {
  for (std::int64_t l = 1; l <= 3; ++l) {
    Report r = verify_route_independence(l, 12);
    EXPECT_TRUE(r.passed) << l << ": " << r.first_failure.value_or("");
  }
}

TEST(Decomp, GroupedEqualsUngrouped) {
  for (std::int64_t l = 1; l <= 4; ++l) EXPECT_TRUE(verify_grouping(l).passed) << l;
}

TEST(Decomp, LemmaOneMore) {
  for (auto [l, c] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}})
    EXPECT_TRUE(verify_lemma_onemore(l, c, 12).passed) << l << "," << c;
  EXPECT_THROW(verify_lemma_onemore(2, 2, 5), DomainError);
}

TEST(Decomp, LemmaThetaOneEps) {
  for (int eps : {0, 1})
    for (auto [l, c] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}})
      EXPECT_TRUE(verify_lemma_theta1eps(eps, l, c, 12).passed) << eps << " " << l << "," << c;
  EXPECT_THROW(verify_lemma_theta1eps(2, 2, 0, 5), DomainError);
}

TEST(Decomp, Lemma42) {
  for (const auto& r : verify_lemma42(50)) EXPECT_TRUE(r.passed) << r.claim;
}

TEST(Render, Nullwerte) {
  EXPECT_EQ(render_products(T(1, 0)), "(q^2;q^2)^5/((q;q)^2(q^4;q^4)^2)");
  EXPECT_EQ(render_products(T(1, 1)), "2 q^{1/4} (q^4;q^4)^2/(q^2;q^2)");
  EXPECT_EQ(render_products(T(2, 1)), "q^{1/8} (q^4;q^4)(q^2;q^8)(q^6;q^8)/((q;q^4)(q^3;q^4))");
  EXPECT_EQ(render_products(T(3, 0)), "(q^6;q^6)^5/((q^3;q^3)^2(q^12;q^12)^2)");
  EXPECT_EQ(render_products(K(-3)), "-3");
  EXPECT_EQ(render_products(ThetaExpr{}), "0");
}

TEST(Render, AtomsRoundTrip) {
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t a = 0; a <= m; ++a) {
      auto terms = parse_products(render_products(T(m, a)));
      EXPECT_EQ(eval_products(terms, 20), theta_series(m, a, 1, 20)) << m << "," << a;
    }
}

TEST(Render, TableEntriesRoundTrip) {
  for (unsigned k = 1; k <= 8; ++k) {
    HTable t = h_table(k);
    for (const auto& e : t.entries) {
      std::string text = render_products(e);
      auto parsed = parse_products(text);
      EXPECT_EQ(parsed, product_terms(e));
      EXPECT_EQ(eval_products(parsed, 20), eval_theta_expr(e, 20)) << text;
    }
  }
}

TEST(Render, ParserForms) {
  auto t = parse_products("CPhi_9(q) =\n  + 3 q^{2/3} (q;q)^2/(q^5;q^7)\n  - q^4 (q^2;q)\n  + 1/((q;q)(q^2;q^2)^3)\n");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].coeff, 3);
  EXPECT_EQ(t[0].q_power, ExpRat(2, 3));
  EXPECT_EQ(t[0].factors, (std::vector<PochFactor>{{1, 1, 2}, {5, 7, -1}}));
  EXPECT_EQ(t[1].coeff, -1);
  EXPECT_EQ(t[1].q_power, ExpRat(4));
  EXPECT_EQ(t[2].factors, (std::vector<PochFactor>{{1, 1, -1}, {2, 2, -3}}));
  EXPECT_THROW(parse_products("(q;q"), std::invalid_argument);
  EXPECT_THROW(parse_products("2 (q;q) 3"), std::invalid_argument);
  EXPECT_THROW(parse_products(""), std::invalid_argument);
}

TEST(Rewrite, PreservesValueAndShrinks) {
  auto rules = level2_product_rules();
  for (unsigned k = 2; k <= 8; ++k) {
    HTable t = h_table(k);
    for (const auto& e : t.entries) {
      ThetaExpr r = apply_rewrites(e, rules);
      EXPECT_LE(r.terms().size(), e.terms().size());
      EXPECT_EQ(eval_theta_expr(r, ExpRat(25)), eval_theta_expr(e, ExpRat(25)));
    }
  }
  EXPECT_EQ(apply_rewrites(h_table(8).at(HalfInt::integer(4)), rules).terms().size(), 14u);
}

TEST(Rewrite, NeedsWholeLeftSide) {
  auto rules = level2_product_rules();
  auto t = [](std::int64_t m, std::int64_t a) { return ThetaExpr::theta(m, a); };
  ThetaExpr half = t(2, 2) * t(6, 0);
  EXPECT_EQ(apply_rewrites(half, rules), half);
  ThetaExpr unequal = t(2, 2) * t(6, 0) + 3 * (t(2, 0) * t(6, 6));
  EXPECT_EQ(apply_rewrites(unequal, rules), unequal);
  ThetaExpr scaled = 5 * (t(1, 1) * (t(2, 2) * t(6, 0) + t(2, 0) * t(6, 6)));
  EXPECT_EQ(apply_rewrites(scaled, rules), 10 * (t(1, 1) * t(2, 1) * t(6, 3)));
  EXPECT_THROW(apply_rewrites(half, {RewriteRule{"empty", ThetaExpr{}, half}}), DomainError);
}
