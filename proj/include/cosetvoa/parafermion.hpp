#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fusion_sum.hpp"
#include "rational.hpp"
#include "residue.hpp"

namespace cosetvoa {

/// Irreducible module M^{i,j}_{(k)} of the parafermion VOA K(sl_2, k).
///
/// Raw labels (i, j) with 0 <= i <= k and j mod k are identified by
/// (i, j) ~ (k - i, j - i). The stored form is the unique representative with
/// 0 <= j < i <= k; the vacuum is (k, 0).
class ParafermionLabel {
 public:
  static ParafermionLabel canonical(std::int64_t k, std::int64_t i, std::int64_t j) {
    require(k >= 2, "parafermion: level k must be >= 2");
    require(0 <= i && i <= k, "parafermion: i must lie in [0, k]");
    j = mod(j, k);
    if (j >= i) {
      j = j - i;
      i = k - i;
    }
    return ParafermionLabel(k, i, j);
  }

  static ParafermionLabel vacuum(std::int64_t k) { return canonical(k, 0, 0); }

  std::int64_t k() const { return k_; }
  std::int64_t i() const { return i_; }
  std::int64_t j() const { return j_; }
  bool is_vacuum() const { return i_ == k_ && j_ == 0; }

  std::string str() const {
    return "M(" + std::to_string(k_) + ";" + std::to_string(i_) + "," + std::to_string(j_) + ")";
  }

  friend bool operator==(const ParafermionLabel&, const ParafermionLabel&) = default;
  friend auto operator<=>(const ParafermionLabel&, const ParafermionLabel&) = default;

 private:
  ParafermionLabel(std::int64_t k, std::int64_t i, std::int64_t j) : k_(k), i_(i), j_(j) {}
  std::int64_t k_, i_, j_;
};

inline ParafermionLabel canonicalize_pf(std::int64_t k, std::int64_t i, std::int64_t j) {
  return ParafermionLabel::canonical(k, i, j);
}

/// The k(k+1)/2 canonical classes at level k, sorted.
inline std::vector<ParafermionLabel> parafermion_labels(std::int64_t k) {
  std::vector<ParafermionLabel> out;
  for (std::int64_t i = 1; i <= k; ++i)
    for (std::int64_t j = 0; j < i; ++j) out.push_back(ParafermionLabel::canonical(k, i, j));
  return out;
}

/// Conformal weight of the one-dimensional top level of M^{i,j}_{(k)}.
/// The closed form holds for 0 <= j <= i; other raw labels are first moved
/// there through (i, j) ~ (k - i, j - i). Level 1 is the trivial algebra.
inline Rational pf_weight(std::int64_t k, std::int64_t i, std::int64_t j) {
  require(k >= 1, "pf_weight: level must be >= 1");
  require(0 <= i && i <= k, "pf_weight: i must lie in [0, k]");
  if (k == 1) return Rational(0);
  j = mod(j, k);
  if (j > i) {
    j = j - i;
    i = k - i;
  }
  const std::int64_t q = i - 2 * j;
  return Rational(k * q - q * q + 2 * k * (i - j + 1) * j, 2 * k * (k + 2));
}

inline Rational pf_weight(const ParafermionLabel& a) { return pf_weight(a.k(), a.i(), a.j()); }

namespace detail {

// r with |i1-i2| <= r <= min(i1+i2, 2*level - i1 - i2) and i1+i2+r even.
inline std::vector<std::int64_t> fusion_channels(std::int64_t level, std::int64_t i1, std::int64_t i2) {
  std::vector<std::int64_t> out;
  const std::int64_t lo = i1 > i2 ? i1 - i2 : i2 - i1;
  const std::int64_t hi = std::min(i1 + i2, 2 * level - i1 - i2);
  for (std::int64_t r = lo; r <= hi; r += 2) out.push_back(r);
  return out;
}

}  // namespace detail

inline FusionSum<ParafermionLabel> fuse_pf(const ParafermionLabel& a, const ParafermionLabel& b) {
  require(a.k() == b.k(), "fuse_pf: labels live at different levels");
  FusionSum<ParafermionLabel> out;
  for (std::int64_t r : detail::fusion_channels(a.k(), a.i(), b.i())) {
    const std::int64_t twice_j = 2 * a.j() - a.i() + 2 * b.j() - b.i() + r;
    ensure(twice_j % 2 == 0, "fuse_pf: odd channel numerator");
    out.add(ParafermionLabel::canonical(a.k(), r, twice_j / 2));
  }
  return out;
}

/// M^p fused with M^{i,j} is M^{i,j+p}.
inline ParafermionLabel pf_simple_current_shift(std::int64_t p, const ParafermionLabel& a) {
  return ParafermionLabel::canonical(a.k(), a.i(), a.j() + p);
}

/// The simple current M^p = M^{0,p}.
inline ParafermionLabel pf_simple_current(std::int64_t k, std::int64_t p) {
  return ParafermionLabel::canonical(k, 0, p);
}

struct ThetaImage {
  ParafermionLabel label;
  /// Set at k = 2, where the automorphism group is trivial and theta is the identity.
  bool trivial_level;
};

/// M^{i,j} twisted by the involution theta is M^{i,i-j}.
inline ThetaImage pf_theta(const ParafermionLabel& a) {
  if (a.k() == 2) return {a, true};
  return {ParafermionLabel::canonical(a.k(), a.i(), a.i() - a.j()), false};
}

/// Alternative naming by (i, q) with q = i - 2j mod 2k.
struct TildeLabel {
  std::int64_t k;
  std::int64_t i;
  std::int64_t q;

  friend bool operator==(const TildeLabel&, const TildeLabel&) = default;
  friend auto operator<=>(const TildeLabel&, const TildeLabel&) = default;
};

inline TildeLabel to_tilde(const ParafermionLabel& a) {
  return {a.k(), a.i(), mod(a.i() - 2 * a.j(), 2 * a.k())};
}

inline ParafermionLabel from_tilde(const TildeLabel& t) {
  require(0 <= t.i && t.i <= t.k, "from_tilde: i must lie in [0, k]");
  const std::int64_t q = mod(t.q, 2 * t.k);
  require((t.i - q) % 2 == 0, "from_tilde: q and i must have the same parity");
  return ParafermionLabel::canonical(t.k, t.i, (t.i - q) / 2);
}

/// (i, q) ~ (k - i, k + q)
inline TildeLabel tilde_partner(const TildeLabel& t) {
  return {t.k, t.k - t.i, mod(t.k + t.q, 2 * t.k)};
}

/// Fusion in tilde coordinates: channels r in R(i1,i2) all carry q1 + q2.
inline FusionSum<ParafermionLabel> fuse_tilde(const TildeLabel& a, const TildeLabel& b) {
  require(a.k == b.k, "fuse_tilde: labels live at different levels");
  FusionSum<ParafermionLabel> out;
  for (std::int64_t r : detail::fusion_channels(a.k, a.i, b.i)) out.add(from_tilde({a.k, r, a.q + b.q}));
  return out;
}

}  // namespace cosetvoa
