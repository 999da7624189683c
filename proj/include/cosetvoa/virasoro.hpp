#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fusion_sum.hpp"
#include "rational.hpp"

namespace cosetvoa {

/// Irreducible module L(c_m, h_{r,s}) of the discrete-series Virasoro VOA.
/// Always canonical: 1 <= s <= r <= m+1.
class VirasoroLabel {
 public:
  /// Canonical class of the raw Kac-table entry (r, s).
  static VirasoroLabel canonical(std::int64_t m, std::int64_t r, std::int64_t s) {
    require(m >= 1, "Virasoro: level m must be >= 1");
    require(1 <= r && r <= m + 1 && 1 <= s && s <= m + 2, "Virasoro: (r,s) outside the Kac table");
    if (s > r) {
      r = m + 2 - r;
      s = m + 3 - s;
    }
    return VirasoroLabel(m, r, s);
  }

  std::int64_t m() const { return m_; }
  std::int64_t r() const { return r_; }
  std::int64_t s() const { return s_; }

  std::string str() const {
    return "L(" + std::to_string(m_) + ";" + std::to_string(r_) + "," + std::to_string(s_) + ")";
  }

  friend bool operator==(const VirasoroLabel&, const VirasoroLabel&) = default;
  friend auto operator<=>(const VirasoroLabel&, const VirasoroLabel&) = default;

 private:
  VirasoroLabel(std::int64_t m, std::int64_t r, std::int64_t s) : m_(m), r_(r), s_(s) {}
  std::int64_t m_, r_, s_;
};

/// c_m = 1 - 6/((m+2)(m+3))
inline Rational central_charge(std::int64_t m) {
  require(m >= 1, "central_charge: m must be >= 1");
  return Rational(1) - Rational(6, (m + 2) * (m + 3));
}

/// h^{(m)}_{r,s} = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3))
inline Rational highest_weight(std::int64_t m, std::int64_t r, std::int64_t s) {
  require(m >= 1, "highest_weight: m must be >= 1");
  require(1 <= r && r <= m + 1 && 1 <= s && s <= m + 2, "highest_weight: (r,s) outside the Kac table");
  const std::int64_t t = r * (m + 3) - s * (m + 2);
  return Rational(t * t - 1, 4 * (m + 2) * (m + 3));
}

inline Rational highest_weight(const VirasoroLabel& a) { return highest_weight(a.m(), a.r(), a.s()); }

/// All (m+1)(m+2)/2 canonical labels at level m, sorted.
inline std::vector<VirasoroLabel> virasoro_labels(std::int64_t m) {
  std::vector<VirasoroLabel> out;
  for (std::int64_t r = 1; r <= m + 1; ++r)
    for (std::int64_t s = 1; s <= r; ++s) out.push_back(VirasoroLabel::canonical(m, r, s));
  return out;
}

/// Minimal-model fusion rule. Each raw output term is canonicalized and
/// coinciding terms are merged by adding multiplicities.
inline FusionSum<VirasoroLabel> fuse_virasoro(const VirasoroLabel& a, const VirasoroLabel& b) {
  require(a.m() == b.m(), "fuse_virasoro: labels live at different levels");
  const std::int64_t m = a.m();
  const std::int64_t imax = std::min({a.r(), b.r(), m + 2 - a.r(), m + 2 - b.r()});
  const std::int64_t jmax = std::min({a.s(), b.s(), m + 3 - a.s(), m + 3 - b.s()});
  const std::int64_t dr = a.r() > b.r() ? a.r() - b.r() : b.r() - a.r();
  const std::int64_t ds = a.s() > b.s() ? a.s() - b.s() : b.s() - a.s();
  FusionSum<VirasoroLabel> out;
  for (std::int64_t i = 1; i <= imax; ++i)
    for (std::int64_t j = 1; j <= jmax; ++j)
      out.add(VirasoroLabel::canonical(m, dr + 2 * i - 1, ds + 2 * j - 1));
  return out;
}

}  // namespace cosetvoa
