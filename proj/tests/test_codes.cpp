#include <gtest/gtest.h>

#include <random>

#include "cosetvoa/code_io.hpp"
#include "cosetvoa/codes.hpp"
#include "cosetvoa/verify.hpp"

using namespace cosetvoa;

namespace {

Code code_of(std::int64_t k, std::size_t length, std::vector<std::vector<std::int64_t>> gens) {
  std::vector<ResidueVector> g;
  for (const auto& e : gens) g.emplace_back(2 * k, e);
  return Code::enumerate(k, length, g);
}

std::vector<ResidueVector> elements_of(std::int64_t k, std::vector<std::vector<std::int64_t>> v) {
  std::vector<ResidueVector> out;
  for (const auto& e : v) out.emplace_back(2 * k, e);
  std::sort(out.begin(), out.end());
  return out;
}

bool parity_odd(const Code& c, const ResidueVector& xi) { return !congruent(code_pairing(c.k(), xi, xi), 0, 2); }

}  // namespace

TEST(Codes, EnumerationExamples) {
  const Code zero = code_of(3, 2, {});
  EXPECT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.classification(), CodeCase::CaseA);

  const Code ones = code_of(2, 4, {{1, 1, 1, 1}});
  EXPECT_EQ(ones.size(), 4u);
  EXPECT_EQ(ones.classification(), CodeCase::CaseB);

  const Code diag = code_of(3, 2, {{3, 3}});
  EXPECT_EQ(diag.size(), 2u);
  EXPECT_EQ(diag.classification(), CodeCase::CaseA);

  EXPECT_EQ(code_of(3, 1, {{1}}).classification(), CodeCase::Invalid);
}

TEST(Codes, EnumerationGuard) {
  EXPECT_THROW(Code::enumerate(4, 3, {ResidueVector(8, {1, 0, 0}), ResidueVector(8, {0, 1, 0})}, 10),
               EnumerationLimit);
}

TEST(Codes, BadGenerators) {
  EXPECT_THROW(Code::enumerate(3, 2, {ResidueVector(6, {1})}), std::invalid_argument);
  EXPECT_THROW(Code::enumerate(3, 1, {ResidueVector(4, {1})}), std::invalid_argument);
}

TEST(Codes, SubgroupInvariants) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 60; ++n) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 4);
    const std::size_t len = 1 + rng() % 3;
    std::vector<ResidueVector> gens;
    for (std::size_t g = 0; g < 1 + rng() % 2; ++g) gens.push_back(random_residue_vector(2 * k, len, rng));
    const Code c = Code::enumerate(k, len, gens);
    EXPECT_TRUE(std::is_sorted(c.elements().begin(), c.elements().end()));
    EXPECT_TRUE(c.contains(c.zero()));
    for (const auto& a : c.elements()) {
      EXPECT_TRUE(c.contains(-a));
      for (const auto& b : c.generators()) EXPECT_TRUE(c.contains(a + b));
    }
    EXPECT_EQ(detail::checked_power(2 * k, len, 1u << 30) % c.size(), 0u);
  }
}

TEST(Codes, ClassificationIndependentOfPresentation) {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 100; ++n) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 4);
    const std::size_t len = 1 + rng() % 3;
    const Code c = random_valid_code(k, len, rng);
    std::vector<ResidueVector> gens;
    // a random set of codewords together with a generating subset
    for (int g = 0; g < 3; ++g) gens.push_back(c.elements()[rng() % c.size()]);
    for (const auto& g : c.generators()) gens.push_back(g);
    std::shuffle(gens.begin(), gens.end(), rng);
    const Code again = Code::enumerate(k, len, gens);
    EXPECT_EQ(again.elements(), c.elements());
    EXPECT_EQ(again.classification(), c.classification());
    const Code rebuilt = Code::from_subgroup(k, len, c.elements());
    EXPECT_EQ(rebuilt.classification(), c.classification());
  }
}

TEST(Codes, ClassificationMatchesDefinition) {
  for (std::int64_t k = 2; k <= 4; ++k)
    for (std::size_t len = 1; len <= 2; ++len)
      for (const Code& c : all_codes(k, len)) {
        bool all_even = true, all_integral = true;
        for (const auto& a : c.elements()) {
          if (!congruent(code_pairing(k, a, a), 0, 2)) all_even = false;
          for (const auto& b : c.elements())
            if (!code_pairing(k, a, b).is_integer()) all_integral = false;
        }
        const CodeCase expected = all_even ? CodeCase::CaseA : all_integral ? CodeCase::CaseB : CodeCase::Invalid;
        EXPECT_EQ(c.classification(), expected);
      }
}

TEST(Codes, SplitEvenOdd) {
  const auto s = split_even_odd(code_of(3, 1, {{3}}));
  EXPECT_EQ(s.even.elements(), elements_of(3, {{0}}));
  EXPECT_EQ(s.odd, elements_of(3, {{3}}));

  const auto t = split_even_odd(code_of(2, 4, {{1, 1, 1, 1}}));
  EXPECT_EQ(t.even.size(), 2u);
  EXPECT_EQ(t.even.classification(), CodeCase::CaseA);
  EXPECT_EQ(t.odd, elements_of(2, {{1, 1, 1, 1}, {3, 3, 3, 3}}));

  EXPECT_THROW(split_even_odd(code_of(3, 2, {{3, 3}})), std::invalid_argument);
  EXPECT_THROW(split_even_odd(code_of(3, 1, {{1}})), std::invalid_argument);
}

TEST(Codes, OddParityIsACharacterWithKernelDZero) {
  for (std::int64_t k = 2; k <= 4; ++k)
    for (std::size_t len = 1; len <= 2; ++len)
      for (const Code& c : all_codes(k, len)) {
        if (c.classification() != CodeCase::CaseB) continue;
        const auto s = split_even_odd(c);
        EXPECT_EQ(s.even.size() * 2, c.size());
        for (const auto& a : c.elements()) {
          EXPECT_EQ(s.even.contains(a), !parity_odd(c, a));
          for (const auto& b : c.elements()) EXPECT_EQ(parity_odd(c, a + b), parity_odd(c, a) != parity_odd(c, b));
        }
      }
}

TEST(Codes, EuclideanWeight) {
  EXPECT_EQ(euclidean_weight(ResidueVector(4, {0, 0})), 0);
  EXPECT_EQ(euclidean_weight(ResidueVector(4, {3, 1})), 2);
  EXPECT_EQ(euclidean_weight(ResidueVector(8, {5})), 9);
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t a = 0; a < 2 * k; ++a)
      for (std::int64_t b = 0; b < 2 * k; ++b) {
        const ResidueVector x(2 * k, {a, b});
        EXPECT_TRUE(congruent(Rational(euclidean_weight(x), 2 * k), Rational(x.integer_dot(x), 2 * k), 2));
      }
}

TEST(Codes, Duals) {
  EXPECT_EQ(dual_code(code_of(2, 2, {})).size(), 16u);
  const Code d = code_of(2, 2, {{2, 2}});
  const Code dual = dual_code(d);
  EXPECT_EQ(dual.size(), 8u);
  for (const auto& eta : dual.elements()) EXPECT_EQ((eta[0] + eta[1]) % 2, 0);
  EXPECT_EQ(d.size() * dual.size(), 16u);
}

TEST(Codes, DoubleDual) {
  for (std::int64_t k = 2; k <= 4; ++k)
    for (std::size_t len = 1; len <= 2; ++len)
      for (const Code& c : all_codes(k, len)) {
        const Code dual = dual_code(c);
        EXPECT_EQ(c.size() * dual.size(), detail::checked_power(2 * k, len, 1u << 30));
        EXPECT_EQ(dual_code(dual).elements(), c.elements());
      }
  std::mt19937_64 rng(4);
  for (int n = 0; n < 20; ++n) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 3);
    std::vector<ResidueVector> gens{random_residue_vector(2 * k, 3, rng), random_residue_vector(2 * k, 3, rng)};
    const Code c = Code::enumerate(k, 3, gens);
    EXPECT_EQ(dual_code(dual_code(c)).elements(), c.elements());
  }
}

TEST(Codes, AllCodesCountsSubgroups) {
  // Z_4 has three subgroups, Z_6 four, Z_4 x Z_4 fifteen
  EXPECT_EQ(all_codes(2, 1).size(), 3u);
  EXPECT_EQ(all_codes(3, 1).size(), 4u);
  EXPECT_EQ(all_codes(2, 2).size(), 15u);
}

TEST(CodeIo, ParsesAndReduces) {
  const auto spec = parse_code_spec(std::string(R"({"k": 3, "length": 2, "generators": [[9, -1]]})"));
  EXPECT_EQ(spec.k, 3);
  EXPECT_EQ(spec.length, 2u);
  ASSERT_EQ(spec.generators.size(), 1u);
  EXPECT_EQ(spec.generators[0].entries(), (std::vector<std::int64_t>{3, 5}));
}

TEST(CodeIo, RejectsMalformedInput) {
  for (const char* text : {"{", "[]", R"({"k": 3, "length": 1})", R"({"k": 1, "length": 1, "generators": []})",
                           R"({"k": 3, "length": 2, "generators": [[1]]})",
                           R"({"k": 3, "length": 1, "generators": [["a"]]})"})
    EXPECT_THROW(parse_code_spec(std::string(text)), std::invalid_argument) << text;
  EXPECT_THROW(load_code_spec("/nonexistent/code.json"), std::invalid_argument);
}

TEST(CodeIo, SamplesLoad) {
  const std::string dir = COSETVOA_SAMPLES_DIR "/codes/";
  EXPECT_EQ(load_code(dir + "k3_odd_glue.json").classification(), CodeCase::CaseB);
  EXPECT_EQ(load_code(dir + "k3_diagonal.json").classification(), CodeCase::CaseA);
  EXPECT_EQ(load_code(dir + "k3_invalid.json").classification(), CodeCase::Invalid);
  EXPECT_EQ(load_code(dir + "k2_all_ones.json").size(), 4u);
}
