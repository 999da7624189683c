#include <gtest/gtest.h>

#include <random>

#include "cosetvoa/lattice.hpp"
#include "cosetvoa/verify.hpp"

using namespace cosetvoa;

namespace {

LatticeVector vec(std::initializer_list<Rational> c) { return LatticeVector(std::vector<Rational>(c)); }

Code code_of(std::int64_t k, std::vector<std::vector<std::int64_t>> gens, std::size_t length) {
  std::vector<ResidueVector> g;
  for (const auto& e : gens) g.emplace_back(2 * k, e);
  return Code::enumerate(k, length, g);
}

}  // namespace

TEST(Lattice, SpecialVectors) {
  const auto s2 = special_vectors(2);
  EXPECT_EQ(s2.d, vec({1, -1}));
  EXPECT_EQ(inner(s2.d, s2.d), Rational(4));
  EXPECT_EQ(inner(special_vectors(3).d, special_vectors(3).d), Rational(12));
  for (std::int64_t k = 2; k <= 12; ++k) {
    const auto s = special_vectors(k);
    EXPECT_TRUE(inner(s.gamma_k, s.d).is_zero());
    EXPECT_EQ(inner(s.gamma_k, s.gamma_k), Rational(2 * k));
  }
  EXPECT_THROW(special_vectors(1), std::invalid_argument);
}

TEST(Lattice, CosetRepresentatives) {
  EXPECT_EQ(coset_rep(3, NtildeCoset{0}), LatticeVector(3));
  EXPECT_EQ(coset_rep(2, NtildeCoset{1}), vec({Rational(-1, 4), Rational(1, 4)}));
  EXPECT_EQ(coset_rep(3, NCoset{0, {0, 0, 0}}), LatticeVector(3));
  EXPECT_THROW(coset_rep(3, NCoset{0, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(coset_rep(3, NCoset{0, {0, 2, 0}}), std::invalid_argument);
}

TEST(Lattice, MembershipIsCosetInvariant) {
  std::mt19937_64 rng(5);
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t l = 0; l < 2 * k; ++l) {
      const CosetSpec spec = NtildeCoset{l};
      const LatticeVector x = sample_coset(k, spec, rng);
      EXPECT_TRUE(in_coset(k, spec, x));
      EXPECT_EQ(in_coset(k, NtildeCoset{l + 1}, x), false);
    }
}

TEST(Lattice, NElementsAreOrthogonalToGammaK) {
  std::mt19937_64 rng(17);
  for (std::int64_t k = 2; k <= 8; ++k)
    for (int n = 0; n < 50; ++n) {
      const LatticeVector x = random_n_element(k, rng);
      EXPECT_TRUE(x.in_N());
      EXPECT_TRUE(inner(x, special_vectors(k).gamma_k).is_zero());
    }
}

TEST(Lattice, NormsOfDualTranslatesDifferByEvenIntegers) {
  std::mt19937_64 rng(23);
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t l = 0; l < 2 * k; ++l) {
      const LatticeVector x = coset_rep(k, NtildeCoset{l});
      ASSERT_TRUE(in_dual_of_N(x));
      for (int n = 0; n < 10; ++n) {
        const LatticeVector y = x + random_n_element(k, rng);
        EXPECT_TRUE(congruent(inner(y, y), inner(x, x), 2));
      }
    }
}

TEST(Lattice, NtildePairing) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 20; ++n) {
    const auto a = sample_coset(3, NtildeCoset{1}, rng);
    const auto b = sample_coset(3, NtildeCoset{1}, rng);
    EXPECT_TRUE(congruent(inner(a, b), Rational(1, 3), 1));
  }
  for (std::int64_t k = 2; k <= 6; ++k) {
    const auto r = check_ntilde_pairing(k, 20, 99);
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
}

TEST(Lattice, CodeCosetPairing) {
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::size_t len = 1; len <= 3; ++len) {
      const auto r = check_code_coset_pairing(k, len, 10, 20, 7 * static_cast<std::uint64_t>(k) + len);
      EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    }
}

TEST(Lattice, CosetIndex) {
  for (std::int64_t k = 2; k <= 12; ++k) EXPECT_TRUE(verify_coset_index(k)) << k;
}

TEST(Lattice, DiscriminantGroup) {
  EXPECT_EQ(discriminant_group(2), (std::vector<BigInt>{4}));
  EXPECT_EQ(discriminant_group(3), (std::vector<BigInt>{2, 6}));
  EXPECT_EQ(discriminant_group(4), (std::vector<BigInt>{2, 2, 8}));
  for (std::int64_t k = 2; k <= 12; ++k) EXPECT_EQ(discriminant_group(k), discriminant_pattern(k)) << k;
}

TEST(Lattice, NtildeMatchesU0Coset) {
  for (std::int64_t k = 2; k <= 8; ++k) EXPECT_TRUE(check_lattice_basics(k).passed) << k;
}

TEST(Lattice, ParityExamples) {
  EXPECT_EQ(gamma_d_parity(code_of(3, {}, 2)), LatticeParity::Even);
  EXPECT_EQ(gamma_d_parity(code_of(3, {{3}}, 1)), LatticeParity::Odd);
  EXPECT_EQ(gamma_d_parity(code_of(5, {{5}}, 1)), LatticeParity::Even);
  EXPECT_EQ(gamma_d_parity(code_of(3, {{1}}, 1)), LatticeParity::NotIntegral);
}

TEST(Lattice, ParityMatchesClassification) {
  const auto r = check_parity_vs_case(6, 4, 150, 31);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.cases, 150u);
}

TEST(Lattice, ParityMatchesClassificationExhaustively) {
  for (std::int64_t k = 2; k <= 3; ++k)
    for (std::size_t len = 1; len <= 2; ++len)
      for (const Code& c : all_codes(k, len)) {
        const LatticeParity p = gamma_d_parity(c);
        switch (c.classification()) {
          case CodeCase::CaseA: EXPECT_EQ(p, LatticeParity::Even); break;
          case CodeCase::CaseB: EXPECT_EQ(p, LatticeParity::Odd); break;
          case CodeCase::Invalid: EXPECT_EQ(p, LatticeParity::NotIntegral); break;
        }
      }
}

TEST(Lattice, ModulePairing) {
  const IrrU0Label x(2, {0}, {1});
  const ResidueVector xi(4, {2});
  EXPECT_EQ(b_form_vec(xi, x), Rational(1, 2));
  EXPECT_TRUE(verify_module_pairing(xi, x, 20, 3));
  EXPECT_TRUE(verify_module_pairing(ResidueVector(4, {0}), x, 20, 3));
  for (std::int64_t k = 2; k <= 4; ++k)
    for (std::size_t len = 1; len <= 2; ++len) {
      const auto r = check_module_pairing(k, len, 20, 20, 13 * static_cast<std::uint64_t>(k) + len);
      EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    }
}

TEST(Lattice, U0CosetContainsTheModule) {
  // the coset attached to U^{i,l} depends only on the class of (i, l)
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t l = 0; l < 2 * k; ++l) {
        const U0Label a = U0Label::canonical(k, i, l);
        const NCoset c = u0_module_coset(a);
        EXPECT_TRUE(in_dual_of_N(coset_rep(k, c)));
      }
}
