#include <gtest/gtest.h>

#include <random>

#include "superw/grassmann.hpp"

using namespace superw;

namespace {

GrassmannElement x(int i) { return GrassmannElement::generator(i); }

/// Random element of fixed degree d in Λ(n) with small integer coefficients.
GrassmannElement random_homogeneous(std::mt19937_64& rng, int n, int d) {
  GrassmannElement f;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (degree(m) == d && rng() % 3 == 0) f.add(m, coeff(rng));
  return f;
}

GrassmannElement random_element(std::mt19937_64& rng, int n) {
  GrassmannElement f;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (rng() % 3 == 0) f.add(m, coeff(rng));
  return f;
}

}  // namespace

TEST(Grassmann, Products) {
  EXPECT_EQ(gmul(x(1), x(2)), GrassmannElement::monomial(0b11));
  EXPECT_EQ(gmul(x(2), x(1)), GrassmannElement::monomial(0b11, -1));
  EXPECT_TRUE(gmul(x(1), x(1)).is_zero());
  EXPECT_EQ(gmul(x(3), GrassmannElement::monomial(0b011)), GrassmannElement::monomial(0b111));
  EXPECT_EQ(gmul(x(2), GrassmannElement::monomial(0b101)), GrassmannElement::monomial(0b111, -1));
}

TEST(Grassmann, Partials) {
  auto x12 = GrassmannElement::monomial(0b11);
  EXPECT_EQ(apply_partial(1, x12), x(2));
  EXPECT_EQ(apply_partial(2, x12), Rational(-1) * x(1));
  EXPECT_TRUE(apply_partial(3, x12).is_zero());
}

TEST(Grassmann, EvalAtZero) {
  EXPECT_EQ(eval_at_zero(GrassmannElement(3) + GrassmannElement::monomial(0b11)), 3);
  EXPECT_EQ(eval_at_zero(x(1)), 0);
  EXPECT_EQ(eval_at_zero(GrassmannElement{}), 0);
}

TEST(Grassmann, TextForms) {
  EXPECT_EQ(monomial_string(0), "1");
  EXPECT_EQ(monomial_string(bit(1) | bit(2) | bit(5)), "x1^x2^x5");
  EXPECT_EQ(parse_monomial("x1^x2^x5"), bit(1) | bit(2) | bit(5));
  EXPECT_EQ(parse_monomial("1"), 0u);
  EXPECT_THROW(parse_monomial("x2^x1"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("y1"), std::invalid_argument);
  EXPECT_EQ((Rational(3, 2) * x(1) - GrassmannElement(1)).to_string(), "-1 + 3/2*x1");
}

TEST(Grassmann, HomogeneityQueries) {
  EXPECT_EQ(GrassmannElement::monomial(0b101).homogeneous_degree(), 2);
  EXPECT_EQ((x(1) + GrassmannElement::monomial(0b111)).homogeneous_parity(), 1);
  EXPECT_THROW((x(1) + GrassmannElement(1)).homogeneous_degree(), std::domain_error);
  EXPECT_THROW(GrassmannElement{}.homogeneous_parity(), std::domain_error);
}

TEST(Grassmann, Supercommutativity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 6;
    int d1 = rng() % (n + 1), d2 = rng() % (n + 1);
    auto f = random_homogeneous(rng, n, d1), g = random_homogeneous(rng, n, d2);
    EXPECT_EQ(gmul(f, g), Rational(sign_of_power(d1 * d2)) * gmul(g, f));
  }
}

TEST(Grassmann, Associativity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 6;
    auto f = random_element(rng, n), g = random_element(rng, n), h = random_element(rng, n);
    EXPECT_EQ(gmul(gmul(f, g), h), gmul(f, gmul(g, h)));
  }
}

TEST(Grassmann, LeibnizRule) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 6;
    int d = rng() % (n + 1);
    auto f = random_homogeneous(rng, n, d), g = random_element(rng, n);
    int i = 1 + static_cast<int>(rng() % n);
    EXPECT_EQ(apply_partial(i, gmul(f, g)),
              gmul(apply_partial(i, f), g) + Rational(sign_of_power(d)) * gmul(f, apply_partial(i, g)));
  }
}

TEST(Grassmann, PartialsAnticommute) {
  for (int n = 1; n <= 6; ++n)
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      auto f = GrassmannElement::monomial(m);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          auto ij = apply_partial(i, apply_partial(j, f));
          auto ji = apply_partial(j, apply_partial(i, f));
          EXPECT_TRUE((ij + ji).is_zero());
        }
    }
}

TEST(Grassmann, GradedDimensions) {
  for (int n = 0; n <= 8; ++n) {
    std::vector<long long> dims(n + 1, 0);
    for (Mask m = 0; m < (Mask{1} << n); ++m) ++dims[degree(m)];
    long long binom = 1, total = 0;
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(dims[k], binom);
      total += dims[k];
      binom = binom * (n - k) / (k + 1);
    }
    EXPECT_EQ(total, 1LL << n);
  }
}
