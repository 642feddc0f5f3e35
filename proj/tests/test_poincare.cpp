#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "sbmotive/poincare.hpp"

using namespace sbmotive;

TEST(IntPolynomial, ArithmeticAndPrinting) {
  const IntPolynomial a{1, 1};
  EXPECT_EQ(a * a, (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((IntPolynomial{1, 0, 0}).degree(), 0);
  EXPECT_EQ(IntPolynomial::one_minus_t_pow(3), (IntPolynomial{1, 0, 0, -1}));
  EXPECT_EQ((IntPolynomial{1, 1, 2, 1, 1}).to_array_string(), "[1, 1, 2, 1, 1]");
  EXPECT_EQ((IntPolynomial{1, 1, 2, 1, 1}).to_string(), "t^4 + t^3 + 2t^2 + t + 1");
  EXPECT_EQ((IntPolynomial{0, -1}).to_string(), "-t");
}

TEST(Divides, ExactQuotientOrNothing) {
  const IntPolynomial p{1, 1};
  const auto q = divides(p, IntPolynomial{1, 2, 1});
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, p);
  EXPECT_FALSE(divides(IntPolynomial{2}, IntPolynomial{1, 1}).has_value());
  EXPECT_FALSE(divides(IntPolynomial{1, 1}, IntPolynomial{1, 0, 1}).has_value());
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(4, 2), (IntPolynomial{1, 1, 2, 1, 1}));
  EXPECT_EQ(gaussian_binomial(4, 2), (IntPolynomial{1, 0, 1} * IntPolynomial{1, 1, 1}));
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(gaussian_binomial(n, 0), IntPolynomial{1});
    EXPECT_EQ(gaussian_binomial(n, 1), IntPolynomial(std::vector<BigInt>(n, 1)));
    EXPECT_EQ(projective_poincare(n), gaussian_binomial(n, 1));
  }
}

TEST(GaussianBinomial, MatchesQPascalOracle) {
  for (int n = 0; n <= 18; ++n)
    for (int d = 0; d <= n; ++d)
      EXPECT_EQ(gaussian_binomial(n, d), IntPolynomial(oracle::q_pascal(n, d))) << n << ' ' << d;
}

TEST(GaussianBinomial, SymmetricPalindromicPositive) {
  for (int n = 1; n <= 16; ++n)
    for (int d = 0; d <= n; ++d) {
      const auto p = gaussian_binomial(n, d);
      EXPECT_EQ(p, gaussian_binomial(n, n - d));
      EXPECT_TRUE(p.is_palindromic());
      EXPECT_EQ(p.degree(), d * (n - d));
      for (const auto& c : p.coefficients()) EXPECT_GT(c, 0);
    }
}

TEST(GaussianBinomial, CoefficientsCountBoxPartitions) {
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d < n; ++d) {
      const auto p = gaussian_binomial(n, d);
      for (int m = 0; m <= d * (n - d); ++m)
        EXPECT_EQ(p.coefficient(m), BigInt(enumerate_partitions(m, BoxContext(d, n - d)).size()));
    }
}

TEST(Divisibility, IffCoprime) {
  for (int n = 2; n <= 20; ++n)
    for (int d = 1; d < n; ++d)
      EXPECT_EQ(divides(projective_poincare(n), gaussian_binomial(n, d)).has_value(), std::gcd(n, d) == 1)
          << n << ' ' << d;
}

TEST(ModnMultiplicities, Values) {
  // P(Gr_2(5)) = (1 + t + t^2 + t^3 + t^4)(1 + t^2)
  EXPECT_EQ(modn_multiplicities(5, 2), (std::vector<BigInt>{1, 0, 1}));
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(modn_multiplicities(n, 1), (std::vector<BigInt>{1}));
  EXPECT_THROW(modn_multiplicities(4, 2), DivisibilityError);
}

TEST(ModnMultiplicities, SumIsNumberOfSummands) {
  // total multiplicity = C(n, d) / n
  for (int n = 2; n <= 14; ++n)
    for (int d = 1; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      BigInt s = 0;
      for (const auto& c : modn_multiplicities(n, d)) s += c;
      EXPECT_EQ(s * n, binomial(n, d));
    }
}
