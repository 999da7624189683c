#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "fusion_sum.hpp"
#include "rational.hpp"
#include "residue.hpp"
#include "u0.hpp"

namespace cosetvoa {

/// Irreducible U_0 = (U^0)^{(x) l}-module U_{mu,nu} = U^{mu_1,nu_1} (x) ... (x) U^{mu_l,nu_l},
/// stored as its canonical components.
class IrrU0Label {
 public:
  IrrU0Label(std::int64_t k, const std::vector<std::int64_t>& mu, const std::vector<std::int64_t>& nu) : k_(k) {
    require(!mu.empty() && mu.size() == nu.size(), "IrrU0Label: mu and nu must have equal positive length");
    components_.reserve(mu.size());
    for (std::size_t r = 0; r < mu.size(); ++r) components_.push_back(U0Label::canonical(k, mu[r], nu[r]));
  }
  explicit IrrU0Label(std::vector<U0Label> components) : components_(std::move(components)) {
    require(!components_.empty(), "IrrU0Label: needs at least one component");
    k_ = components_.front().k();
    for (const auto& c : components_) require(c.k() == k_, "IrrU0Label: components at different levels");
  }

  static IrrU0Label vacuum(std::int64_t k, std::size_t length) {
    return IrrU0Label(std::vector<U0Label>(length, U0Label::vacuum(k)));
  }

  std::int64_t k() const { return k_; }
  std::size_t length() const { return components_.size(); }
  const std::vector<U0Label>& components() const { return components_; }
  const U0Label& operator[](std::size_t r) const { return components_[r]; }

  std::vector<std::int64_t> mu() const {
    std::vector<std::int64_t> out;
    for (const auto& c : components_) out.push_back(c.i());
    return out;
  }
  ResidueVector nu() const {
    std::vector<std::int64_t> out;
    for (const auto& c : components_) out.push_back(c.l());
    return ResidueVector(2 * k_, out);
  }
  bool is_vacuum() const {
    return std::all_of(components_.begin(), components_.end(), [](const U0Label& c) { return c.is_vacuum(); });
  }

  /// "U(i,l)xU(i,l)x..."
  std::string str() const {
    std::string s;
    for (std::size_t r = 0; r < components_.size(); ++r) s += (r ? "x" : "") + components_[r].str();
    return s;
  }

  friend bool operator==(const IrrU0Label&, const IrrU0Label&) = default;
  friend auto operator<=>(const IrrU0Label& a, const IrrU0Label& b) { return a.components_ <=> b.components_; }

 private:
  std::int64_t k_ = 2;
  std::vector<U0Label> components_;
};

inline constexpr std::uint64_t kDefaultLabelLimit = std::uint64_t{1} << 22;

/// Dense indexing of the k^{2l} canonical labels; index order is lexicographic order.
class LabelSpace {
 public:
  LabelSpace(std::int64_t k, std::size_t length, std::uint64_t max_labels = kDefaultLabelLimit)
      : k_(k), length_(length), per_component_(u0_labels(k)) {
    const std::uint64_t total = detail::checked_power(k * k, length, max_labels);
    if (total > max_labels) throw EnumerationLimit("label space k^(2l) exceeds guard");
    total_ = total;
    for (std::size_t c = 0; c < per_component_.size(); ++c) index_of_[per_component_[c]] = c;
  }

  std::uint64_t size() const { return total_; }

  IrrU0Label label(std::uint64_t index) const {
    std::vector<U0Label> comps(length_, per_component_.front());
    const std::uint64_t base = per_component_.size();
    for (std::size_t r = length_; r-- > 0;) {
      comps[r] = per_component_[index % base];
      index /= base;
    }
    return IrrU0Label(std::move(comps));
  }

  std::uint64_t index(const IrrU0Label& x) const {
    std::uint64_t idx = 0;
    for (const auto& c : x.components()) idx = idx * per_component_.size() + index_of_.at(c);
    return idx;
  }

 private:
  std::int64_t k_;
  std::size_t length_;
  std::vector<U0Label> per_component_;
  std::map<U0Label, std::uint64_t> index_of_;
  std::uint64_t total_ = 0;
};

namespace detail {

inline void check_shape(const Code& code, const IrrU0Label& x) {
  require(code.k() == x.k() && code.length() == x.length(), "code and module label have different k or length");
}

}  // namespace detail

/// U_xi x U_{mu,nu} = U_{mu, nu + xi}
inline IrrU0Label act(const ResidueVector& xi, const IrrU0Label& x) {
  require(xi.modulus() == 2 * x.k() && xi.size() == x.length(), "act: codeword shape mismatch");
  std::vector<U0Label> comps;
  for (std::size_t r = 0; r < x.length(); ++r)
    comps.push_back(U0Label::canonical(x.k(), x[r].i(), x[r].l() + xi[r]));
  return IrrU0Label(std::move(comps));
}

/// (k-1)nu - k mu in (Z_2k)^l
inline ResidueVector character_vector(const IrrU0Label& x) {
  const std::int64_t k = x.k();
  std::vector<std::int64_t> eta;
  for (const auto& c : x.components()) eta.push_back((k - 1) * c.l() - k * c.i());
  return ResidueVector(2 * k, eta);
}

/// b(U_xi, U_{mu,nu}) = (xi | (k-1)nu - k mu)/2k mod 1
inline Rational b_form_vec(const ResidueVector& xi, const IrrU0Label& x) {
  require(xi.modulus() == 2 * x.k() && xi.size() == x.length(), "b_form_vec: codeword shape mismatch");
  return Rational(standard_inner(xi, character_vector(x)), 2 * x.k());
}

/// Character xi -> exp(2 pi i (xi|eta)/2k) of a code D, identified by eta mod D^perp.
/// `values` holds (g|eta) for the code's generators g, which determines eta mod D^perp.
struct CharacterLabel {
  ResidueVector eta;
  std::vector<std::int64_t> values;

  bool is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](auto v) { return v == 0; });
  }
  /// Exponent (xi|eta)/2k mod 1 of chi(xi).
  Rational exponent(const ResidueVector& xi) const { return Rational(standard_inner(xi, eta), eta.modulus()); }

  /// Equality for characters of one and the same code.
  friend bool operator==(const CharacterLabel& a, const CharacterLabel& b) { return a.values == b.values; }
  friend auto operator<=>(const CharacterLabel& a, const CharacterLabel& b) { return a.values <=> b.values; }
};

inline CharacterLabel character_from_vector(const Code& code, const ResidueVector& eta) {
  require(eta.modulus() == code.modulus() && eta.size() == code.length(), "character: shape mismatch");
  CharacterLabel chi{eta, {}};
  for (const auto& g : code.generators()) chi.values.push_back(standard_inner(g, eta));
  return chi;
}

inline CharacterLabel character_of(const IrrU0Label& x, const Code& code) {
  detail::check_shape(code, x);
  return character_from_vector(code, character_vector(x));
}

/// True iff eta - eta' lies in D^perp, tested against every codeword.
inline bool same_character(const Code& code, const CharacterLabel& a, const CharacterLabel& b) {
  const ResidueVector diff = a.eta - b.eta;
  return std::all_of(code.elements().begin(), code.elements().end(),
                     [&](const ResidueVector& xi) { return standard_inner(xi, diff) == 0; });
}

/// D* enumerated as the distinct characters eta -> chi_eta over the ambient space.
inline std::vector<CharacterLabel> character_group(const Code& code) {
  const std::uint64_t ambient = detail::checked_power(code.modulus(), code.length(), kAmbientScanLimit);
  if (ambient > kAmbientScanLimit) throw EnumerationLimit("character_group: ambient space too large");
  std::map<std::vector<std::int64_t>, CharacterLabel> seen;
  detail::for_each_vector(code.modulus(), code.length(), [&](const ResidueVector& eta) {
    CharacterLabel chi = character_from_vector(code, eta);
    seen.try_emplace(chi.values, chi);
  });
  std::vector<CharacterLabel> out;
  for (auto& [key, chi] : seen) out.push_back(std::move(chi));
  return out;
}

/// D_X = { xi in D : U_xi x X = X }, by direct comparison.
inline std::vector<ResidueVector> stabilizer(const Code& code, const IrrU0Label& x) {
  detail::check_shape(code, x);
  std::vector<ResidueVector> out;
  for (const auto& xi : code.elements())
    if (act(xi, x) == x) out.push_back(xi);
  return out;
}

/// Predicted stabilizer: trivial for even k; for odd k the codewords in {0,k}^l
/// whose k-entries sit only where mu_r = (k-1)/2.
inline std::vector<ResidueVector> stabilizer_closed_form(const Code& code, const IrrU0Label& x) {
  detail::check_shape(code, x);
  const std::int64_t k = code.k();
  if (k % 2 == 0) return {code.zero()};
  std::vector<ResidueVector> out;
  for (const auto& xi : code.elements()) {
    bool ok = true;
    for (std::size_t r = 0; r < xi.size() && ok; ++r) {
      if (xi[r] == 0) continue;
      ok = xi[r] == k && x[r].i() == (k - 1) / 2;
    }
    if (ok) out.push_back(xi);
  }
  return out;
}

/// |S cap S^perp| for a subgroup S of (Z_2k)^l.
inline std::size_t radical_size(const std::vector<ResidueVector>& subgroup) {
  std::size_t n = 0;
  for (const auto& a : subgroup)
    if (std::all_of(subgroup.begin(), subgroup.end(), [&](const auto& b) { return standard_inner(a, b) == 0; })) ++n;
  return n;
}

/// h(U_xi) = (k-1)(xi.xi)/4k mod 1
inline Rational weight_mod1_uxi(std::int64_t k, const ResidueVector& xi) {
  require(xi.modulus() == 2 * k, "weight_mod1_uxi: modulus must be 2k");
  return mod1(Rational((k - 1) * xi.integer_dot(xi), 4 * k));
}

/// h(X) mod 1 for X in Irr(U_0).
inline Rational weight_mod1(const IrrU0Label& x) {
  Rational w(0);
  for (const auto& c : x.components()) w += weight_mod1(c);
  return mod1(w);
}

struct Orbit {
  IrrU0Label representative;  ///< lexicographically least member
  std::vector<IrrU0Label> members;
  CharacterLabel character;
  std::vector<ResidueVector> stabilizer;
  std::size_t stabilizer_radical;  ///< |D_i cap D_i^perp|
};

struct OrbitCensus {
  std::vector<Orbit> orbits;
  std::uint64_t labels_covered = 0;
};

/// D-orbit decomposition of Irr(U_0), optionally restricted to one character.
inline OrbitCensus orbits(const Code& code, const std::optional<CharacterLabel>& restrict_to = std::nullopt,
                          std::uint64_t max_labels = kDefaultLabelLimit) {
  const LabelSpace space(code.k(), code.length(), max_labels);
  std::vector<bool> visited(space.size(), false);
  OrbitCensus census;
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    if (visited[idx]) continue;
    const IrrU0Label x = space.label(idx);
    std::vector<IrrU0Label> members;
    for (const auto& xi : code.elements()) members.push_back(act(xi, x));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const auto& y : members) visited[space.index(y)] = true;
    census.labels_covered += members.size();

    CharacterLabel chi = character_of(x, code);
    if (restrict_to && !(chi == *restrict_to)) continue;
    auto stab = stabilizer(code, x);
    const std::size_t rad = radical_size(stab);
    census.orbits.push_back({x, std::move(members), std::move(chi), std::move(stab), rad});
  }
  return census;
}

/// Structure of U_D x X for a Case A code.
struct InducedModuleReport {
  IrrU0Label module;
  std::vector<IrrU0Label> orbit;
  CharacterLabel character;
  std::size_t stabilizer_order = 1;
  std::size_t stabilizer_radical = 1;
  /// Number of inequivalent irreducible chi-twisted summands V^j.
  std::size_t summand_count = 1;
  /// Each V^j occurs m times in U_D x X.
  std::size_t multiplicity = 1;
  /// U_0-decomposition of a single V^j.
  FusionSum<IrrU0Label> summand_decomposition;
  Rational weight_mod1;

  /// U_0-decomposition of the whole of U_D x X.
  FusionSum<IrrU0Label> total_decomposition() const {
    FusionSum<IrrU0Label> out;
    out.add(summand_decomposition, static_cast<std::int64_t>(summand_count * multiplicity));
    return out;
  }
};

namespace detail {

inline std::size_t exact_sqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

}  // namespace detail

inline InducedModuleReport induce(const Code& code, const IrrU0Label& x) {
  require(code.classification() == CodeCase::CaseA, "induce: code must be in Case A");
  detail::check_shape(code, x);
  const std::int64_t k = code.k();

  InducedModuleReport rep{x, {}, character_of(x, code), 1, 1, 1, 1, {}, Rational(0)};
  for (const auto& xi : code.elements()) rep.orbit.push_back(act(xi, x));
  std::sort(rep.orbit.begin(), rep.orbit.end());
  rep.orbit.erase(std::unique(rep.orbit.begin(), rep.orbit.end()), rep.orbit.end());

  const auto stab = stabilizer(code, x);
  rep.stabilizer_order = stab.size();
  rep.stabilizer_radical = radical_size(stab);
  rep.weight_mod1 = weight_mod1(x);

  if (stab.size() == 1) {
    rep.summand_count = 1;
    rep.multiplicity = 1;
  } else {
    ensure(k % 2 == 1, "induce: nontrivial stabilizer at even k");
    if (k % 4 == 1) {
      rep.summand_count = stab.size();
      rep.multiplicity = 1;
    } else {
      const std::size_t index = stab.size() / rep.stabilizer_radical;
      const std::size_t m = detail::exact_sqrt(index);
      ensure(m > 0, "induce: [D_X : D_X cap D_X^perp] is not a perfect square");
      rep.summand_count = rep.stabilizer_radical;
      rep.multiplicity = m;
    }
  }
  for (const auto& w : rep.orbit) rep.summand_decomposition.add(w, static_cast<std::int64_t>(rep.multiplicity));
  return rep;
}

namespace detail {

// Contribution of one orbit to the count of irreducible twisted modules.
inline std::int64_t orbit_contribution(std::int64_t k, const Orbit& o) {
  if (o.stabilizer.size() == 1 || k % 2 == 0) return 1;
  if (k % 4 == 1) return static_cast<std::int64_t>(o.stabilizer.size());
  return static_cast<std::int64_t>(o.stabilizer_radical);
}

}  // namespace detail

/// Number of inequivalent irreducible chi-twisted U_D-modules (Case A), from the orbit
/// census; every orbit is also induced and the summand counts must agree.
inline std::int64_t count_twisted(const Code& code, const CharacterLabel& chi) {
  require(code.classification() == CodeCase::CaseA, "count_twisted: code must be in Case A");
  const OrbitCensus census = orbits(code, chi);
  std::int64_t by_census = 0;
  std::int64_t by_induction = 0;
  for (const auto& o : census.orbits) {
    by_census += detail::orbit_contribution(code.k(), o);
    by_induction += static_cast<std::int64_t>(induce(code, o.representative).summand_count);
  }
  ensure(by_census == by_induction, "count_twisted: census and induced summand counts disagree");
  return by_census;
}

/// Counts for every character that occurs, keyed by character, from one census pass.
inline std::vector<std::pair<CharacterLabel, std::int64_t>> count_twisted_all(const Code& code) {
  require(code.classification() == CodeCase::CaseA, "count_twisted_all: code must be in Case A");
  const OrbitCensus census = orbits(code);
  std::map<CharacterLabel, std::int64_t> counts;
  for (const auto& o : census.orbits) counts[o.character] += detail::orbit_contribution(code.k(), o);
  return {counts.begin(), counts.end()};
}

struct CaseBEntry {
  IrrU0Label representative;            ///< orbit representative X for the D^0-census
  std::size_t summand_index = 1;        ///< which V^j of U_{D^0} x X
  FusionSum<IrrU0Label> even_part;      ///< U_0-decomposition of P
  FusionSum<IrrU0Label> induced;        ///< U_0-decomposition of U_D x_{U_{D^0}} P
  std::string splitting = "irreducible-or-two-summands";  ///< not decided by the theory
};

struct CaseBInventory {
  Code even_code;
  std::vector<ResidueVector> odd_coset;
  std::vector<CaseBEntry> entries;
};

/// Irreducible untwisted U_{D^0}-modules P and the U_D-objects U_D x P they induce.
inline CaseBInventory case_b_inventory(const Code& code) {
  require(code.classification() == CodeCase::CaseB, "case_b_inventory: code must be in Case B");
  EvenOddSplit split = split_even_odd(code);
  const Code& d0 = split.even;
  ensure(d0.classification() == CodeCase::CaseA, "case_b_inventory: D^0 is not in Case A");
  const ResidueVector& odd_shift = split.odd.front();

  CaseBInventory inv{d0, split.odd, {}};
  const CharacterLabel trivial = character_from_vector(d0, d0.zero());
  for (const auto& o : orbits(d0, trivial).orbits) {
    const InducedModuleReport rep = induce(d0, o.representative);
    for (std::size_t j = 1; j <= rep.summand_count; ++j) {
      CaseBEntry e{o.representative, j, rep.summand_decomposition, rep.summand_decomposition};
      for (const auto& [w, mult] : rep.summand_decomposition) e.induced.add(act(odd_shift, w), mult);
      inv.entries.push_back(std::move(e));
    }
  }
  return inv;
}

}  // namespace cosetvoa
