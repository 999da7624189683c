#include <gtest/gtest.h>

#include "cosetvoa/verify.hpp"
#include "cosetvoa/virasoro.hpp"

using namespace cosetvoa;

namespace {

FusionSum<VirasoroLabel> sum_of(std::initializer_list<VirasoroLabel> labels) {
  FusionSum<VirasoroLabel> s;
  for (const auto& l : labels) s.add(l);
  return s;
}

}  // namespace

TEST(Virasoro, CentralCharge) {
  EXPECT_EQ(central_charge(1), Rational(1, 2));
  EXPECT_EQ(central_charge(2), Rational(7, 10));
  EXPECT_EQ(central_charge(3), Rational(4, 5));
  EXPECT_THROW(central_charge(0), std::invalid_argument);
}

TEST(Virasoro, HighestWeights) {
  EXPECT_EQ(highest_weight(1, 1, 1), Rational(0));
  EXPECT_EQ(highest_weight(1, 2, 2), Rational(1, 16));
  EXPECT_EQ(highest_weight(1, 2, 1), Rational(1, 2));
  EXPECT_THROW(highest_weight(1, 3, 1), std::invalid_argument);
  EXPECT_THROW(highest_weight(1, 1, 4), std::invalid_argument);
}

TEST(Virasoro, KacSymmetry) {
  for (std::int64_t m = 1; m <= 10; ++m)
    for (std::int64_t r = 1; r <= m + 1; ++r)
      for (std::int64_t s = 1; s <= m + 2; ++s) {
        EXPECT_EQ(highest_weight(m, r, s), highest_weight(m, m + 2 - r, m + 3 - s));
        EXPECT_EQ(VirasoroLabel::canonical(m, r, s), VirasoroLabel::canonical(m, m + 2 - r, m + 3 - s));
      }
}

TEST(Virasoro, CanonicalFormAndCount) {
  for (std::int64_t m = 1; m <= 10; ++m) {
    const auto labels = virasoro_labels(m);
    EXPECT_EQ(static_cast<std::int64_t>(labels.size()), (m + 1) * (m + 2) / 2);
    for (const auto& a : labels) {
      EXPECT_LE(1, a.s());
      EXPECT_LE(a.s(), a.r());
      EXPECT_LE(a.r(), m + 1);
    }
  }
}

TEST(Virasoro, IsingFusion) {
  const auto one = VirasoroLabel::canonical(1, 1, 1);
  const auto eps = VirasoroLabel::canonical(1, 2, 1);
  const auto sigma = VirasoroLabel::canonical(1, 2, 2);
  EXPECT_EQ(fuse_virasoro(one, sigma), sum_of({sigma}));
  EXPECT_EQ(fuse_virasoro(eps, eps), sum_of({one}));
  EXPECT_EQ(fuse_virasoro(sigma, sigma), sum_of({one, eps}));
  EXPECT_EQ(fuse_virasoro(eps, sigma), sum_of({sigma}));
}

TEST(Virasoro, CrossLevelFusionRejected) {
  EXPECT_THROW(fuse_virasoro(VirasoroLabel::canonical(1, 1, 1), VirasoroLabel::canonical(2, 1, 1)),
               std::invalid_argument);
}

TEST(Virasoro, UnitLawAndMultiplicityFree) {
  for (std::int64_t m = 1; m <= 8; ++m) {
    const auto unit = VirasoroLabel::canonical(m, 1, 1);
    for (const auto& a : virasoro_labels(m)) {
      EXPECT_EQ(fuse_virasoro(unit, a), FusionSum<VirasoroLabel>(a));
      for (const auto& b : virasoro_labels(m)) EXPECT_TRUE(fuse_virasoro(a, b).multiplicity_free());
    }
  }
}

TEST(Virasoro, RingAxiomsExhaustive) {
  for (std::int64_t m = 1; m <= 4; ++m)
    for (const auto& r : check_virasoro_ring(m)) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
