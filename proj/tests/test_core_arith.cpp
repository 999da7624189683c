#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cosetvoa/integer_matrix.hpp"
#include "cosetvoa/rational.hpp"
#include "cosetvoa/residue.hpp"

using namespace cosetvoa;

namespace {

BigInt cofactor_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return BigInt(m[0][0]);
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    const BigInt term = BigInt(m[0][c]) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

IntegerMatrix to_matrix(const std::vector<std::vector<long long>>& m) {
  IntegerMatrix out(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m[r][c];
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(rng() % 201) - 100;
  const auto den = static_cast<std::int64_t>(rng() % 30) + 1;
  return Rational(num, den);
}

}  // namespace

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational q(6, -4);
  EXPECT_EQ(q.numerator(), BigInt(-3));
  EXPECT_EQ(q.denominator(), BigInt(2));
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(8, 4).str(), "2");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::invalid_argument);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0", "7", "-5/6", "123456789012345678901234567891/7"})
    EXPECT_EQ(Rational::parse(text).str(), text);
}

TEST(Rational, Mod1Examples) {
  EXPECT_EQ(mod1(Rational(7, 3)), Rational(1, 3));
  EXPECT_EQ(mod1(Rational(-1, 6)), Rational(5, 6));
  EXPECT_EQ(mod1(Rational(2)), Rational(0));
}

TEST(Rational, Mod1IdempotentAndAdditive) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    const Rational r = mod1(a);
    EXPECT_GE(r, Rational(0));
    EXPECT_LT(r, Rational(1));
    EXPECT_TRUE((a - r).is_integer());
    EXPECT_EQ(mod1(r), r);
    EXPECT_EQ(mod1(a + b), mod1(mod1(a) + mod1(b)));
  }
}

TEST(Rational, Congruent) {
  EXPECT_TRUE(congruent(Rational(7, 3), Rational(1, 3), 1));
  EXPECT_TRUE(congruent(Rational(9, 2), Rational(1, 2), 2));
  EXPECT_FALSE(congruent(Rational(7, 2), Rational(1, 2), 2));
}

TEST(Residue, ReducedOnConstruction) {
  const ResidueVector v(6, {-1, 7, 12});
  EXPECT_EQ(v.entries(), (std::vector<std::int64_t>{5, 1, 0}));
  EXPECT_EQ(v.str(), "[5,1,0]");
}

TEST(Residue, StandardInnerExamples) {
  EXPECT_EQ(standard_inner(ResidueVector(4, {2, 2}), ResidueVector(4, {1, 1})), 0);
  EXPECT_EQ(standard_inner(ResidueVector(6, {3, 3}), ResidueVector(6, {3, 3})), 0);
  EXPECT_EQ(standard_inner(ResidueVector(6, {1, 5}), ResidueVector::zero(6, 2)), 0);
}

TEST(Residue, StandardInnerMismatch) {
  EXPECT_THROW(standard_inner(ResidueVector(4, {1}), ResidueVector(4, {1, 1})), std::invalid_argument);
  EXPECT_THROW(standard_inner(ResidueVector(4, {1}), ResidueVector(6, {1})), std::invalid_argument);
}

TEST(Residue, StandardInnerSymmetricBilinear) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 300; ++n) {
    const std::int64_t mod_n = 2 + static_cast<std::int64_t>(rng() % 11);
    const std::size_t len = 1 + rng() % 4;
    auto draw = [&] {
      std::vector<std::int64_t> e(len);
      for (auto& x : e) x = static_cast<std::int64_t>(rng() % 100) - 50;
      return ResidueVector(mod_n, e);
    };
    const auto a = draw(), b = draw(), c = draw();
    const auto s = static_cast<std::int64_t>(rng() % 20);
    EXPECT_EQ(standard_inner(a, b), standard_inner(b, a));
    EXPECT_EQ(standard_inner(a + b, c), mod(standard_inner(a, c) + standard_inner(b, c), mod_n));
    EXPECT_EQ(standard_inner(a.scaled(s), c), mod(s * standard_inner(a, c), mod_n));
  }
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{4}}), (std::vector<BigInt>{4}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{4, -2}, {-2, 4}}), (std::vector<BigInt>{2, 6}));
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{4, -2, 0}, {-2, 4, -2}, {0, -2, 4}}), (std::vector<BigInt>{2, 2, 8}));
}

TEST(SmithNormalForm, SingularAndNonSquareRejected) {
  EXPECT_THROW(smith_normal_form(IntegerMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
  EXPECT_THROW(smith_normal_form(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST(SmithNormalForm, ChainAndDeterminantOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 300) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng() % 13) - 6;
    const BigInt det = cofactor_det(m);
    if (det == 0) continue;
    ++tested;
    const auto d = smith_normal_form(to_matrix(m));
    ASSERT_EQ(d.size(), n);
    BigInt prod = 1;
    for (std::size_t r = 0; r < n; ++r) {
      EXPECT_GT(d[r], 0);
      if (r > 0) {
        EXPECT_EQ(d[r] % d[r - 1], 0);
      }
      prod *= d[r];
    }
    EXPECT_EQ(prod, abs(det));
    // the first divisor is the gcd of all entries
    BigInt g = 0;
    for (const auto& row : m)
      for (long long x : row) g = boost::multiprecision::gcd(g, BigInt(x));
    EXPECT_EQ(d[0], g);
  }
}
