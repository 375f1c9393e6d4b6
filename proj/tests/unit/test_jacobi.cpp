#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qtheta/decomp.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/identities.hpp"
#include "qtheta/jacobi.hpp"

using namespace qtheta;

namespace {

HalfInt H(std::int64_t twice) { return HalfInt::from_twice(twice); }
HalfInt I(std::int64_t n) { return HalfInt::integer(n); }

std::vector<Integer> big(const oracle::Poly& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST(Jacobi, ThetaHalfCoefficients) {
  ZetaQSeries f = jtheta_half(20);
  EXPECT_EQ(coeff_zeta(f, H(1)), QSeries::monomial(1, ExpRat(1, 8), 20));
  EXPECT_EQ(coeff_zeta(f, H(-1)), QSeries::monomial(1, ExpRat(1, 8), 20));
  EXPECT_EQ(coeff_zeta(f, H(3)), QSeries::monomial(1, ExpRat(9, 8), 20));
  EXPECT_TRUE(coeff_zeta(f, I(0)).is_zero());
  EXPECT_TRUE(coeff_zeta(f, H(101)).is_zero());
}

TEST(Jacobi, ThetaHalfIsSymmetric) {
  ZetaQSeries f = jtheta_half(30);
  for (const auto& [twice, s] : f.terms()) EXPECT_EQ(s, coeff_zeta(f, H(-twice)));
}

TEST(Jacobi, TripleProduct) {
  for (int n : {1, 5, 20, 50}) EXPECT_TRUE(verify_jtp(n).passed) << n;
  // just above q^{1/8} only zeta^{+-1/2} survive
  ZetaQSeries small = jtheta_triple_product(ExpRat(1, 4));
  EXPECT_EQ(small.terms().size(), 2u);
  EXPECT_EQ(coeff_zeta(small, H(1)), QSeries::monomial(1, ExpRat(1, 8), ExpRat(1, 4)));
}

TEST(Jacobi, TripleProductPrefactorSign) {
  // q^{1/8} zeta^{+1/2}(q;q)(-zeta q;q)(-1/zeta;q) matches; the zeta^{-1/2} prefactor does not
  const ExpRat n = 10;
  ZetaQSeries a = andrews_product(1, n);
  QSeries euler = pochhammer(1, 1, n);
  ZetaQSeries minus(n - ExpRat(1, 8));
  for (const auto& [twice, s] : a.terms()) minus.add(H(twice - 1), qs_mul(s, euler).shifted(ExpRat(1, 8)));
  auto d = first_difference(jtheta_half(n), minus);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(jtheta_half(n), jtheta_triple_product(n));
}

TEST(Jacobi, ThetaComponents) {
  ZetaQSeries t10 = theta_component(I(1), I(0), 5);
  EXPECT_EQ(coeff_zeta(t10, I(0)), QSeries::one(5));
  EXPECT_EQ(coeff_zeta(t10, I(2)), QSeries::monomial(1, 1, 5));
  EXPECT_EQ(coeff_zeta(t10, I(-2)), QSeries::monomial(1, 1, 5));
  EXPECT_EQ(coeff_zeta(theta_component(I(3), I(3), 5), I(3)), QSeries::monomial(1, ExpRat(3, 4), 5));
  EXPECT_EQ(coeff_zeta(theta_component(H(7), H(7), 5), H(7)), QSeries::monomial(1, ExpRat(7, 8), 5));
  EXPECT_EQ(coeff_zeta(theta_component(I(1), I(1), 5), I(1)), QSeries::monomial(1, ExpRat(1, 4), 5));
  EXPECT_THROW(theta_component(I(1), H(1), 5), GridMismatch);
  EXPECT_THROW(theta_component(H(3), I(1), 5), GridMismatch);
}

TEST(Jacobi, ComponentAtZetaOneIsNullwert) {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t a = 0; a <= m; ++a) {
      ZetaQSeries f = theta_component(I(m), I(a), 15);
      QSeries sum = QSeries::zero(15);
      for (const auto& [_, s] : f.terms()) sum = qs_add(sum, s);
      EXPECT_EQ(sum, theta_series(m, a, 1, 15));
    }
}

TEST(Jacobi, MultiplicationBasics) {
  ZetaQSeries f = jtheta_half(12);
  ZetaQSeries unit(100);
  unit.add(I(0), QSeries::one(100));
  EXPECT_EQ(zq_mul(f, unit), f);
  ZetaQSeries m(5);
  m.add(H(1), QSeries::monomial(1, ExpRat(1, 8), 5));
  ZetaQSeries sq = zq_mul(m, m);
  EXPECT_EQ(sq.terms().size(), 1u);
  EXPECT_EQ(coeff_zeta(sq, I(1)), QSeries::monomial(1, ExpRat(1, 4), 5));
  EXPECT_EQ(zq_pow(f, 1), f);
}

TEST(Jacobi, SquareDecomposition) {
  // theta(z+1/2)^2 = theta_{1,1} theta_{1,0}(z) + theta_{1,0} theta_{1,1}(z)
  const ExpRat n = 15;
  ZetaQSeries rhs = zq_add(zq_scale(theta_component(I(1), I(0), n), theta_series(1, 1, 1, n)),
                           zq_scale(theta_component(I(1), I(1), n), theta_series(1, 0, 1, n)));
  EXPECT_EQ(zq_pow(jtheta_half(n), 2), rhs);
  EXPECT_EQ(zq_mul(jtheta_half(n), jtheta_half(n)), rhs);
}

TEST(Jacobi, PowerSupportAndValuation) {
  for (unsigned k = 1; k <= 6; ++k) {
    ZetaQSeries p = zq_pow(jtheta_half(8), k);
    for (const auto& [twice, _] : p.terms()) EXPECT_EQ((twice - static_cast<std::int64_t>(k)) % 2, 0);
    EXPECT_EQ(coeff_zeta(p, H(k)).valuation(), ExpRat(k, 8));
    EXPECT_EQ(coeff_zeta(p, H(k)).leading_coeff(), 1);
  }
}

TEST(Jacobi, SixthPowerMiddleCoefficient) {
  const ExpRat n = 10;
  QSeries c = coeff_zeta(zq_pow(jtheta_half(n), 6), I(3));
  QSeries h33 = eval_theta_expr(h_table(6).at(I(3)), n);
  EXPECT_EQ(c, h33.shifted(ExpRat(3, 4)).truncated(n));
}

TEST(Jacobi, ZetaProductPartitions) {
  auto p = oracle::partitions(25);
  QSeries c = coeff_zeta(andrews_product(1, 25), I(0));
  EXPECT_EQ(c.integer_coeffs(25), big(p));
  EXPECT_EQ(c, qs_inv(pochhammer(1, 1, 25), 25));
}

TEST(Jacobi, ZetaProductSmallK) {
  EXPECT_EQ(coeff_zeta(andrews_product(2, 20), I(0)).integer_coeffs(20), big(oracle::cphi2(20)));
  EXPECT_EQ(coeff_zeta(andrews_product(3, 20), I(0)).integer_coeffs(20), big(oracle::cphi3(20)));
}

TEST(Jacobi, ZetaProductFullExpansion) {
  // every zeta^r coefficient against a direct dense expansion of the 2k factors
  const std::int64_t N = 10;
  for (unsigned k = 1; k <= 3; ++k) {
    ZetaQSeries p = andrews_product(k, N);
    // poly[r + off][e]
    const std::int64_t off = 80;
    std::vector<std::vector<Integer>> poly(2 * off + 1, std::vector<Integer>(N));
    poly[off][0] = 1;
    auto times = [&](int dir, std::int64_t e) {
      if (e >= N) return;
      auto next = poly;
      for (std::int64_t r = -off + 1; r < off; ++r)
        for (std::int64_t i = e; i < N; ++i) next[r + off][i] += poly[r - dir + off][i - e];
      poly = next;
    };
    for (unsigned c = 0; c < k; ++c) {
      for (std::int64_t n = 1; n < N; ++n) times(+1, n);
      for (std::int64_t n = 0; n < N; ++n) times(-1, n);
    }
    for (std::int64_t r = -off + 1; r < off; ++r) {
      QSeries got = coeff_zeta(p, I(r));
      for (std::int64_t i = 0; i < N; ++i) EXPECT_EQ(got.coeff(i), poly[r + off][i]) << k << " " << r << " " << i;
    }
  }
}

TEST(Jacobi, ZetaConstantTermPositive) {
  for (unsigned k = 1; k <= 6; ++k) {
    auto c = coeff_zeta(andrews_product(k, 15), I(0)).integer_coeffs(15);
    EXPECT_EQ(c[0], 1);
    for (auto& x : c) EXPECT_GT(x, 0);
  }
}
