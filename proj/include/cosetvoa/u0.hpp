#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fusion_sum.hpp"
#include "parafermion.hpp"
#include "rational.hpp"
#include "residue.hpp"

namespace cosetvoa {

/// Irreducible U^0-module U^{i,l}, 0 <= i <= k-1, l mod 2k.
///
/// U^{i,l} and U^{k-1-i, l+k} are the same module. The stored representative
/// has the smaller i; in the self-paired case 2i = k-1 it has l in [0, k).
class U0Label {
 public:
  static U0Label canonical(std::int64_t k, std::int64_t i, std::int64_t l) {
    require(k >= 2, "U0: level k must be >= 2");
    require(0 <= i && i <= k - 1, "U0: i must lie in [0, k-1]");
    l = mod(l, 2 * k);
    const std::int64_t partner_i = k - 1 - i;
    if (partner_i < i) {
      i = partner_i;
      l = mod(l + k, 2 * k);
    } else if (partner_i == i && l >= k) {
      l -= k;
    }
    return U0Label(k, i, l);
  }

  static U0Label vacuum(std::int64_t k) { return canonical(k, 0, 0); }

  std::int64_t k() const { return k_; }
  std::int64_t i() const { return i_; }
  std::int64_t l() const { return l_; }
  bool is_vacuum() const { return i_ == 0 && l_ == 0; }

  std::string str() const { return "U(" + std::to_string(i_) + "," + std::to_string(l_) + ")"; }

  friend bool operator==(const U0Label&, const U0Label&) = default;
  friend auto operator<=>(const U0Label&, const U0Label&) = default;

 private:
  U0Label(std::int64_t k, std::int64_t i, std::int64_t l) : k_(k), i_(i), l_(l) {}
  std::int64_t k_, i_, l_;
};

inline U0Label canonicalize_u0(std::int64_t k, std::int64_t i, std::int64_t l) {
  return U0Label::canonical(k, i, l);
}

/// All k^2 canonical labels, sorted by (i, l).
inline std::vector<U0Label> u0_labels(std::int64_t k) {
  std::vector<U0Label> out;
  for (std::int64_t i = 0; i <= k - 1; ++i)
    for (std::int64_t l = 0; l < 2 * k; ++l) {
      U0Label a = U0Label::canonical(k, i, l);
      if (a.i() == i && a.l() == l) out.push_back(a);
    }
  return out;
}

/// U^{i1,l1} x U^{i2,l2} = sum over r in R(i1,i2) of U^{r, l1+l2}, with R taken at level k-1.
inline FusionSum<U0Label> fuse_u0(const U0Label& a, const U0Label& b) {
  require(a.k() == b.k(), "fuse_u0: labels live at different levels");
  const std::int64_t k = a.k();
  FusionSum<U0Label> out;
  for (std::int64_t r : detail::fusion_channels(k - 1, a.i(), b.i()))
    out.add(U0Label::canonical(k, r, a.l() + b.l()));
  return out;
}

/// The 2k simple currents U^l = U^{0,l}.
inline std::vector<U0Label> simple_currents(std::int64_t k) {
  std::vector<U0Label> out;
  for (std::int64_t l = 0; l < 2 * k; ++l) out.push_back(U0Label::canonical(k, 0, l));
  return out;
}

/// Lowest weight of the lattice coset Zd + offset*d, where <d,d> = 2(k-1)k,
/// together with the number of vectors attaining it (1 or 2).
struct CosetMinimum {
  Rational weight;
  int minimizers;
};

inline CosetMinimum lattice_coset_minimum(std::int64_t k, const Rational& offset) {
  // nearest integer translates of the offset to zero are frac and frac - 1
  const Rational frac = mod1(offset);
  const Rational other = Rational(1) - frac;
  const Rational scale(k * (k - 1));
  if (frac < other) return {scale * frac * frac, 1};
  if (other < frac) return {scale * other * other, 1};
  return {scale * frac * frac, 2};
}

/// The A^0-summand X(i,j,l) = M^{i,j}_{(k-1)} (x) V_{Zd + lambda d},
/// lambda = -l/2k + (i-2j)/2(k-1).
struct SummandLabel {
  std::int64_t k;
  std::int64_t i;
  std::int64_t j;
  std::int64_t l;

  Rational lattice_offset() const { return Rational(-l, 2 * k) + Rational(i - 2 * j, 2 * (k - 1)); }
  std::string str() const {
    return "X(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
  }
};

struct SummandWeight {
  Rational weight;
  /// Lattice vectors of minimal norm in the coset; equals the top-level
  /// dimension since the parafermion top level is one dimensional.
  int minimizers;
};

inline SummandWeight summand_weight(const SummandLabel& x) {
  require(x.k >= 2, "summand_weight: k must be >= 2");
  require(0 <= x.i && x.i <= x.k - 1, "summand_weight: i must lie in [0, k-1]");
  // k = 2: the level-1 parafermion algebra is trivial, weight 0
  const Rational pf = pf_weight(x.k - 1, x.i, x.j);
  const CosetMinimum lat = lattice_coset_minimum(x.k, x.lattice_offset());
  return {pf + lat.weight, lat.minimizers};
}

struct TopLevel {
  Rational weight;
  std::int64_t dimension;

  friend bool operator==(const TopLevel&, const TopLevel&) = default;
};

/// Top level of U^{i,l} = sum_j X(i,j,l), found by minimizing over j in [0, k-2].
inline TopLevel top_level(std::int64_t k, std::int64_t i, std::int64_t l) {
  require(k >= 2 && 0 <= i && i <= k - 1, "top_level: label out of range");
  std::optional<Rational> best;
  std::int64_t dim = 0;
  for (std::int64_t j = 0; j <= k - 2; ++j) {
    const SummandWeight w = summand_weight({k, i, j, mod(l, 2 * k)});
    if (!best || w.weight < *best) {
      best = w.weight;
      dim = w.minimizers;
    } else if (w.weight == *best) {
      dim += w.minimizers;
    }
  }
  return {*best, dim};
}

inline TopLevel top_level(const U0Label& a) { return top_level(a.k(), a.i(), a.l()); }

/// h(U^{i,l}) mod 1, read off the summand X(i,0,l).
inline Rational weight_mod1(const U0Label& a) {
  return mod1(summand_weight({a.k(), a.i(), 0, a.l()}).weight);
}

/// b(U^p, U^{i,l}) = p((k-1)l - ki)/2k mod 1
inline Rational b_form_u0(std::int64_t p, const U0Label& a) {
  const std::int64_t k = a.k();
  return mod1(Rational(p * ((k - 1) * a.l() - k * a.i()), 2 * k));
}

/// U^{i,l} twisted by theta is U^{i,-l}.
inline U0Label theta_u0(const U0Label& a) { return U0Label::canonical(a.k(), a.i(), -a.l()); }

/// Exponent of zeta = exp(2 pi i/k) in the fusion-algebra automorphism U^{i,l} -> zeta^l U^{i,l}.
inline std::int64_t phi_grade(const U0Label& a) { return mod(a.l(), a.k()); }

/// All p in [0, 2k) with U^p x U^{i,l} = U^{i,l}, found by direct comparison.
inline std::vector<std::int64_t> stabilizing_currents(const U0Label& a) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 0; p < 2 * a.k(); ++p)
    if (U0Label::canonical(a.k(), a.i(), a.l() + p) == a) out.push_back(p);
  return out;
}

/// h(M^{i,j} (x) V_{Zd + s d/2(k-1)k - j d/(k-1)}) - h(M^{i,0} (x) V_{Zd + s d/2(k-1)k})
/// computed exactly, then tested against j(i-s)/(k-1) mod Z.
inline bool verify_weight_difference(std::int64_t k, std::int64_t i, std::int64_t j, std::int64_t s) {
  require(k >= 2 && 0 <= i && i <= k - 1 && 0 <= j && j < k - 1 && 0 <= s && s < 2 * (k - 1) * k,
          "verify_weight_difference: parameters out of range");
  const Rational base(s, 2 * (k - 1) * k);
  const Rational shifted = base - Rational(j, k - 1);
  const Rational diff = pf_weight(k - 1, i, j) + lattice_coset_minimum(k, shifted).weight -
                        pf_weight(k - 1, i, 0) - lattice_coset_minimum(k, base).weight;
  return congruent(diff, Rational(j * (i - s), k - 1), 1);
}

/// Closed forms for the simple currents U^l = U^{0,l}.
namespace simple_current {

/// Weight and dimension of the top level of U^l.
inline TopLevel top_level_closed_form(std::int64_t k, std::int64_t l) {
  l = mod(l, 2 * k);
  if (l == 0) return {Rational(0), 1};
  const Rational base(l * (2 * k - l), 4 * k);
  if (l % 2 == 1) return {base - Rational(1, 4), 1};
  return {base, 2};
}

/// h(U^l) = (k-1) l^2 / 4k mod 1
inline Rational weight_mod1_closed_form(std::int64_t k, std::int64_t l) {
  return mod1(Rational((k - 1) * l * l, 4 * k));
}

/// Boundary (k-1)(k-l)/2k between the two ranges of j.
inline Rational range_boundary(std::int64_t k, std::int64_t l) { return Rational((k - 1) * (k - l), 2 * k); }

/// P(j) = j(k-1-j)/(k-1) + ((k-1)l + 2kj)^2 / 4(k-1)k, for j up to the boundary.
inline Rational p_lower(std::int64_t k, std::int64_t l, std::int64_t j) {
  const std::int64_t t = (k - 1) * l + 2 * k * j;
  return Rational(j * (k - 1 - j), k - 1) + Rational(t * t, 4 * (k - 1) * k);
}

/// P(j) = j(k-1-j)/(k-1) + ((k-1)l + 2kj - 2(k-1)k)^2 / 4(k-1)k, for j from the boundary on.
inline Rational p_upper(std::int64_t k, std::int64_t l, std::int64_t j) {
  const std::int64_t t = (k - 1) * l + 2 * k * j - 2 * (k - 1) * k;
  return Rational(j * (k - 1 - j), k - 1) + Rational(t * t, 4 * (k - 1) * k);
}

/// Minimizing j of P(j) for k >= 3 and 1 <= l <= k, by the case analysis on l.
inline std::vector<std::int64_t> predicted_minimizers(std::int64_t k, std::int64_t l) {
  require(k >= 3 && 1 <= l && l <= k, "predicted_minimizers: needs k >= 3 and 1 <= l <= k");
  if (l == 1) return {0};
  if (l == 2) return {0, k - 2};
  if (l % 2 == 1) return {k - (l + 1) / 2};
  return {k - 1 - l / 2, k - l / 2};
}

}  // namespace simple_current

}  // namespace cosetvoa
