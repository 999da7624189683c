#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "codes.hpp"
#include "lattice.hpp"
#include "parafermion.hpp"
#include "u0.hpp"
#include "ud_modules.hpp"
#include "virasoro.hpp"

namespace cosetvoa {

/// Outcome of one named check; `detail` carries the first counterexample on failure.
struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::string detail;
  std::uint64_t cases = 0;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

template <class Label>
std::string sum_str(const FusionSum<Label>& s) {
  std::string out;
  for (const auto& [label, mult] : s) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += label.str();
  }
  return out.empty() ? "0" : out;
}

/// Precomputed products over a finite label set.
template <class Label>
class FusionTable {
 public:
  template <class Fuse>
  FusionTable(std::vector<Label> labels, Fuse&& fuse) : labels_(std::move(labels)) {
    for (std::size_t a = 0; a < labels_.size(); ++a) index_[labels_[a]] = a;
    products_.resize(labels_.size() * labels_.size());
    for (std::size_t a = 0; a < labels_.size(); ++a)
      for (std::size_t b = 0; b < labels_.size(); ++b) products_[a * labels_.size() + b] = fuse(labels_[a], labels_[b]);
  }

  const std::vector<Label>& labels() const { return labels_; }
  const FusionSum<Label>& product(std::size_t a, std::size_t b) const { return products_[a * labels_.size() + b]; }
  std::size_t index(const Label& x) const { return index_.at(x); }

  FusionSum<Label> times(const FusionSum<Label>& s, std::size_t c) const {
    FusionSum<Label> out;
    for (const auto& [d, mult] : s) out.add(product(index(d), c), mult);
    return out;
  }
  FusionSum<Label> times(std::size_t a, const FusionSum<Label>& s) const {
    FusionSum<Label> out;
    for (const auto& [e, mult] : s) out.add(product(a, index(e)), mult);
    return out;
  }

 private:
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::vector<FusionSum<Label>> products_;
};

/// Commutativity, unit, unique duals and (optionally) associativity of a fusion table.
template <class Label>
std::vector<CheckResult> check_ring_axioms(const std::string& tag, const FusionTable<Label>& t, const Label& unit,
                                           bool associativity) {
  const auto& L = t.labels();
  const std::size_t n = L.size();
  CheckResult comm{tag + ".commutativity"}, unit_law{tag + ".unit"}, duals{tag + ".duals"};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ++comm.cases;
      if (!(t.product(a, b) == t.product(b, a))) comm.fail(L[a].str() + " * " + L[b].str());
    }
    ++unit_law.cases;
    if (!(t.product(t.index(unit), a) == FusionSum<Label>(L[a]))) unit_law.fail(unit.str() + " * " + L[a].str());
    ++duals.cases;
    std::size_t partners = 0;
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t m = t.product(a, b).multiplicity(unit);
      if (m > 1) duals.fail(L[a].str() + ": unit multiplicity " + std::to_string(m));
      partners += m == 1;
    }
    if (partners != 1) duals.fail(L[a].str() + " has " + std::to_string(partners) + " duals");
  }
  std::vector<CheckResult> out{comm, unit_law, duals};
  if (associativity) {
    CheckResult assoc{tag + ".associativity"};
    for (std::size_t a = 0; a < n && assoc.passed; ++a)
      for (std::size_t b = 0; b < n && assoc.passed; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          ++assoc.cases;
          if (!(t.times(t.product(a, b), c) == t.times(a, t.product(b, c)))) {
            assoc.fail("(" + L[a].str() + " * " + L[b].str() + ") * " + L[c].str());
            break;
          }
        }
    out.push_back(assoc);
  }
  return out;
}

inline FusionTable<U0Label> u0_table(std::int64_t k) { return FusionTable<U0Label>(u0_labels(k), fuse_u0); }

/// k^2 canonical labels, and the 2k^2 raw pairs fall into exactly k^2 classes of size 2.
inline CheckResult check_label_count(std::int64_t k) {
  CheckResult r{"u0.label-count(k=" + std::to_string(k) + ")"};
  const auto labels = u0_labels(k);
  std::map<U0Label, int> classes;
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t l = 0; l < 2 * k; ++l) ++classes[U0Label::canonical(k, i, l)];
  r.cases = static_cast<std::uint64_t>(2 * k * k);
  if (static_cast<std::int64_t>(labels.size()) != k * k)
    r.fail("u0_labels has " + std::to_string(labels.size()) + " entries");
  if (static_cast<std::int64_t>(classes.size()) != k * k)
    r.fail("raw labels give " + std::to_string(classes.size()) + " classes");
  for (const auto& [label, size] : classes)
    if (size != 2) r.fail(label.str() + " has class size " + std::to_string(size));
  return r;
}

inline std::vector<CheckResult> check_u0_ring(std::int64_t k, bool associativity) {
  return check_ring_axioms("u0(k=" + std::to_string(k) + ")", u0_table(k), U0Label::vacuum(k), associativity);
}

/// theta is an involutive ring automorphism; the l mod k grading is additive and class-invariant.
inline std::vector<CheckResult> check_u0_symmetries(std::int64_t k) {
  const auto t = u0_table(k);
  const auto& L = t.labels();
  const std::string suffix = "(k=" + std::to_string(k) + ")";
  CheckResult theta{"u0.theta" + suffix}, phi{"u0.phi-grading" + suffix};
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t l = 0; l < 2 * k; ++l) {
      ++phi.cases;
      if (phi_grade(U0Label::canonical(k, i, l)) != mod(l, k)) phi.fail("grade not class invariant at raw (" +
                                                                       std::to_string(i) + "," + std::to_string(l) + ")");
    }
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (!(theta_u0(theta_u0(L[a])) == L[a])) theta.fail("theta^2 != 1 on " + L[a].str());
    for (std::size_t b = 0; b < L.size(); ++b) {
      ++theta.cases;
      const auto& prod = t.product(a, b);
      FusionSum<U0Label> image;
      for (const auto& [c, m] : prod) image.add(theta_u0(c), m);
      if (!(image == fuse_u0(theta_u0(L[a]), theta_u0(L[b])))) theta.fail(L[a].str() + " * " + L[b].str());
      ++phi.cases;
      for (const auto& [c, m] : prod)
        if (phi_grade(c) != mod(phi_grade(L[a]) + phi_grade(L[b]), k))
          phi.fail(c.str() + " in " + L[a].str() + " * " + L[b].str());
    }
  }
  return {theta, phi};
}

/// b(U^p, W) against h(U^p x W) - h(U^p) - h(W) mod 1, and the stabilizer prediction.
inline std::vector<CheckResult> check_simple_currents(std::int64_t k) {
  const std::string suffix = "(k=" + std::to_string(k) + ")";
  CheckResult b{"u0.b-form" + suffix}, stab{"u0.stabilizers" + suffix}, cur{"u0.simple-currents" + suffix};
  const auto currents = simple_currents(k);
  if (currents.size() != static_cast<std::size_t>(2 * k)) cur.fail("expected 2k distinct simple currents");
  for (const auto& u : currents) {
    ++cur.cases;
    for (const auto& w : u0_labels(k)) {
      const auto prod = fuse_u0(u, w);
      if (prod.size() != 1 || prod.length() != 1) cur.fail(u.str() + " * " + w.str() + " is not simple");
    }
  }
  for (const auto& w : u0_labels(k)) {
    for (std::int64_t p = 0; p < 2 * k; ++p) {
      ++b.cases;
      const U0Label up = U0Label::canonical(k, 0, p);
      const U0Label shifted = U0Label::canonical(k, w.i(), w.l() + p);
      const Rational monodromy = mod1(weight_mod1(shifted) - weight_mod1(up) - weight_mod1(w));
      if (b_form_u0(p, w) != monodromy)
        b.fail("p=" + std::to_string(p) + " on " + w.str() + ": " + b_form_u0(p, w).str() + " vs " + monodromy.str());
    }
    ++stab.cases;
    std::vector<std::int64_t> expected{0};
    if (k % 2 == 1 && 2 * w.i() == k - 1) expected.push_back(k);
    if (stabilizing_currents(w) != expected) stab.fail(w.str());
  }
  return {cur, b, stab};
}

inline std::vector<CheckResult> check_pf_ring(std::int64_t level, bool associativity) {
  FusionTable<ParafermionLabel> t(parafermion_labels(level), fuse_pf);
  auto out = check_ring_axioms("pf(k=" + std::to_string(level) + ")", t, ParafermionLabel::vacuum(level), associativity);
  CheckResult theta{"pf.theta(k=" + std::to_string(level) + ")"};
  const auto& L = t.labels();
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b) {
      ++theta.cases;
      FusionSum<ParafermionLabel> image;
      for (const auto& [c, m] : t.product(a, b)) image.add(pf_theta(c).label, m);
      if (!(image == fuse_pf(pf_theta(L[a]).label, pf_theta(L[b]).label))) theta.fail(L[a].str() + " * " + L[b].str());
    }
  out.push_back(theta);
  return out;
}

inline std::vector<CheckResult> check_virasoro_ring(std::int64_t m) {
  FusionTable<VirasoroLabel> t(virasoro_labels(m), fuse_virasoro);
  return check_ring_axioms("vir(m=" + std::to_string(m) + ")", t, VirasoroLabel::canonical(m, 1, 1), true);
}

/// Top levels of U^{0,l} found by minimizing summand weights against the closed forms,
/// plus the P(j) formulas and the predicted minimizing j.
inline CheckResult check_simple_current_top_levels(std::int64_t k) {
  CheckResult r{"u0.simple-current-top-level(k=" + std::to_string(k) + ")"};
  for (std::int64_t l = 0; l < 2 * k; ++l) {
    ++r.cases;
    const TopLevel found = top_level(k, 0, l);
    const TopLevel closed = simple_current::top_level_closed_form(k, l);
    if (!(found == closed))
      r.fail("l=" + std::to_string(l) + ": minimized (" + found.weight.str() + "," + std::to_string(found.dimension) +
             ") vs closed form (" + closed.weight.str() + "," + std::to_string(closed.dimension) + ")");
    if (weight_mod1(U0Label::canonical(k, 0, l)) != simple_current::weight_mod1_closed_form(k, l))
      r.fail("l=" + std::to_string(l) + ": weight mod 1 disagrees with (k-1)l^2/4k");
  }
  if (k < 3) return r;
  for (std::int64_t l = 1; l <= k; ++l) {
    std::vector<std::int64_t> argmin;
    Rational best(0);
    for (std::int64_t j = 0; j <= k - 2; ++j) {
      const Rational w = summand_weight({k, 0, j, l}).weight;
      const Rational p = Rational(j) <= simple_current::range_boundary(k, l) ? simple_current::p_lower(k, l, j)
                                                                        : simple_current::p_upper(k, l, j);
      if (w != p) r.fail("P(j) mismatch at l=" + std::to_string(l) + ", j=" + std::to_string(j));
      if (argmin.empty() || w < best) {
        argmin = {j};
        best = w;
      } else if (w == best) {
        argmin.push_back(j);
      }
    }
    auto predicted = simple_current::predicted_minimizers(k, l);
    std::sort(predicted.begin(), predicted.end());
    if (argmin != predicted) r.fail("minimizing j differ from the case analysis at l=" + std::to_string(l));
  }
  return r;
}

inline CheckResult check_positive_weights(std::int64_t k) {
  CheckResult r{"u0.positive-weights(k=" + std::to_string(k) + ")"};
  for (const auto& a : u0_labels(k)) {
    ++r.cases;
    const TopLevel t = top_level(a);
    if (a.is_vacuum() ? !(t.weight.is_zero() && t.dimension == 1) : !(t.weight > Rational(0)))
      r.fail(a.str() + " has top weight " + t.weight.str());
  }
  return r;
}

inline CheckResult check_weight_difference(std::int64_t k) {
  CheckResult r{"u0.weight-difference(k=" + std::to_string(k) + ")"};
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < k - 1; ++j)
      for (std::int64_t s = 0; s < 2 * (k - 1) * k; ++s) {
        ++r.cases;
        if (!verify_weight_difference(k, i, j, s))
          r.fail("i=" + std::to_string(i) + " j=" + std::to_string(j) + " s=" + std::to_string(s));
      }
  return r;
}

inline ResidueVector random_residue_vector(std::int64_t modulus, std::size_t length, std::mt19937_64& rng) {
  std::vector<std::int64_t> e(length);
  for (auto& x : e) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus));
  return ResidueVector(modulus, e);
}

inline IrrU0Label random_irr_label(std::int64_t k, std::size_t length, std::mt19937_64& rng) {
  std::vector<std::int64_t> mu(length), nu(length);
  for (std::size_t r = 0; r < length; ++r) {
    mu[r] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k));
    nu[r] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * k));
  }
  return IrrU0Label(k, mu, nu);
}

/// Random code whose classification is Case A or Case B, by rejection.
inline Code random_valid_code(std::int64_t k, std::size_t length, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<ResidueVector> gens;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t g = 0; g < count; ++g) {
      // mixing in entries from {0, k} keeps the acceptance rate reasonable
      std::vector<std::int64_t> e(length);
      for (auto& x : e) x = rng() % 2 ? static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * k)) : k * static_cast<std::int64_t>(rng() % 2);
      gens.emplace_back(2 * k, e);
    }
    Code c = Code::enumerate(k, length, gens);
    if (c.classification() != CodeCase::Invalid) return c;
  }
  throw InternalError("random_valid_code: no valid code found");
}

inline CheckResult check_lattice_basics(std::int64_t k) {
  CheckResult r{"lattice.basics(k=" + std::to_string(k) + ")"};
  try {
    special_vectors(k);
  } catch (const InternalError& e) {
    r.fail(e.what());
  }
  ++r.cases;
  if (!verify_coset_index(k)) r.fail("coset index is not k");
  // N~^{(l)} is the coset N(j, (0,...,0,a_k)) attached to U^{0,l}
  for (std::int64_t l = 0; l < 2 * k; ++l) {
    ++r.cases;
    const NCoset c = u0_module_coset(U0Label::canonical(k, 0, l));
    if (!in_coset(k, NtildeCoset{l}, coset_rep(k, c))) r.fail("N~(" + std::to_string(l) + ") is not its N(j,a)");
  }
  // every N(j,a) sits in the dual of N
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k) && mask < 4096; ++mask) {
    for (std::int64_t p = 0; p < k; ++p) a[static_cast<std::size_t>(p)] = (mask >> p) & 1;
    for (std::int64_t j = 0; j < k; ++j) {
      ++r.cases;
      if (!in_dual_of_N(coset_rep(k, NCoset{j, a}))) r.fail("N(j,a) rep outside the dual of N");
    }
  }
  return r;
}

inline CheckResult check_discriminant(std::int64_t k) {
  CheckResult r{"discriminant(k=" + std::to_string(k) + ")"};
  r.cases = 1;
  const auto got = discriminant_group(k);
  std::string s = "(";
  for (std::size_t n = 0; n < got.size(); ++n) s += (n ? "," : "") + got[n].str();
  s += ")";
  if (got != discriminant_pattern(k)) r.fail("divisors " + s);
  else r.detail = s;
  return r;
}

inline CheckResult check_ntilde_pairing(std::int64_t k, int samples, std::uint64_t seed) {
  CheckResult r{"lattice.ntilde-pairing(k=" + std::to_string(k) + ")"};
  for (std::int64_t p = 0; p < 2 * k; ++p)
    for (std::int64_t q = 0; q < 2 * k; ++q) {
      ++r.cases;
      if (!verify_ntilde_pairing(k, p, q, samples, seed + static_cast<std::uint64_t>(p * 2 * k + q)))
        r.fail("p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
  return r;
}

inline CheckResult check_code_coset_pairing(std::int64_t k, std::size_t length, int trials, int samples, std::uint64_t seed) {
  CheckResult r{"lattice.code-coset-pairing(k=" + std::to_string(k) + ",l=" + std::to_string(length) + ")"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++r.cases;
    const auto xi = random_residue_vector(2 * k, length, rng);
    const auto eta = random_residue_vector(2 * k, length, rng);
    if (!verify_code_coset_pairing(k, xi, eta, samples, rng())) r.fail("xi=" + xi.str() + " eta=" + eta.str());
  }
  return r;
}

inline CheckResult check_module_pairing(std::int64_t k, std::size_t length, int trials, int samples, std::uint64_t seed) {
  CheckResult r{"lattice.module-pairing(k=" + std::to_string(k) + ",l=" + std::to_string(length) + ")"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++r.cases;
    const auto xi = random_residue_vector(2 * k, length, rng);
    const auto x = random_irr_label(k, length, rng);
    if (!verify_module_pairing(xi, x, samples, rng())) r.fail("xi=" + xi.str() + " X=" + x.str());
  }
  return r;
}

/// Lattice parity of Gamma_D against the code classification on random valid codes.
inline CheckResult check_parity_vs_case(std::int64_t k_max, std::size_t length_max, int codes, std::uint64_t seed) {
  CheckResult r{"lattice.parity-vs-case"};
  std::mt19937_64 rng(seed);
  for (int n = 0; n < codes; ++n) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k_max - 1));
    const std::size_t length = 1 + rng() % length_max;
    const Code c = random_valid_code(k, length, rng);
    ++r.cases;
    const LatticeParity p = gamma_d_parity(c, 2, rng());
    const bool agree = (p == LatticeParity::Even && c.classification() == CodeCase::CaseA) ||
                       (p == LatticeParity::Odd && c.classification() == CodeCase::CaseB);
    if (!agree) {
      std::string gens;
      for (const auto& g : c.generators()) gens += g.str();
      r.fail("k=" + std::to_string(k) + " gens " + gens + ": " + to_string(p) + " vs " + to_string(c.classification()));
    }
  }
  return r;
}

/// Counting consistency for every Case A code with |D| <= max_size.
inline CheckResult check_counting(std::int64_t k, std::size_t length, std::size_t max_size) {
  CheckResult r{"ud.counting(k=" + std::to_string(k) + ",l=" + std::to_string(length) + ")"};
  const std::uint64_t labels = detail::checked_power(k * k, length, kDefaultLabelLimit);
  for (const Code& code : all_codes(k, length)) {
    if (code.classification() != CodeCase::CaseA || code.size() > max_size) continue;
    ++r.cases;
    const std::string where = "code of size " + std::to_string(code.size()) + " gen " +
                              (code.generators().empty() ? std::string("{}") : code.generators().front().str());
    const OrbitCensus census = orbits(code);
    std::int64_t census_total = 0;
    for (const auto& o : census.orbits) {
      const std::int64_t contribution = detail::orbit_contribution(k, o);
      census_total += contribution;
      const InducedModuleReport rep = induce(code, o.representative);
      if (static_cast<std::int64_t>(rep.summand_count) != contribution) r.fail(where + ": induce disagrees on " + o.representative.str());
      if (rep.total_decomposition().length() != static_cast<std::int64_t>(code.size()))
        r.fail(where + ": U_0-length of U_D x X is not |D| at " + o.representative.str());
    }
    std::int64_t by_character = 0;
    for (const auto& chi : character_group(code)) by_character += count_twisted(code, chi);
    if (by_character != census_total) r.fail(where + ": character sum " + std::to_string(by_character) + " vs census " + std::to_string(census_total));
    if (k % 2 == 0 && census_total * static_cast<std::int64_t>(code.size()) != static_cast<std::int64_t>(labels))
      r.fail(where + ": total is not k^(2l)/|D|");
  }
  return r;
}

/// {chi_X} = D* and chi constant on D-orbits, over every Case A or Case B code.
inline CheckResult check_characters(std::int64_t k, std::size_t length) {
  CheckResult r{"ud.characters(k=" + std::to_string(k) + ",l=" + std::to_string(length) + ")"};
  const LabelSpace space(k, length);
  for (const Code& code : all_codes(k, length)) {
    if (code.classification() == CodeCase::Invalid) continue;
    ++r.cases;
    const auto group = character_group(code);
    std::set<CharacterLabel> seen;
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
      const IrrU0Label x = space.label(idx);
      const CharacterLabel chi = character_of(x, code);
      seen.insert(chi);
      for (const auto& xi : code.generators())
        if (!(character_of(act(xi, x), code) == chi)) r.fail("chi not constant on the orbit of " + x.str());
    }
    if (group.size() != code.size()) r.fail("|D*| != |D| for a code of size " + std::to_string(code.size()));
    if (seen != std::set<CharacterLabel>(group.begin(), group.end()))
      r.fail("characters of labels miss part of D* (|D| = " + std::to_string(code.size()) + ")");
  }
  return r;
}

/// h(U_xi) mod 1 is 0 on Case A codes and 1/2 exactly on D^1 for Case B codes.
inline CheckResult check_code_weights(std::int64_t k, std::size_t length) {
  CheckResult r{"codes.weights(k=" + std::to_string(k) + ",l=" + std::to_string(length) + ")"};
  for (const Code& code : all_codes(k, length)) {
    if (code.classification() == CodeCase::Invalid) continue;
    ++r.cases;
    if (code.classification() == CodeCase::CaseA) {
      for (const auto& xi : code.elements())
        if (!weight_mod1_uxi(k, xi).is_zero()) r.fail("Case A codeword " + xi.str() + " has nonintegral weight");
    } else {
      const auto split = split_even_odd(code);
      for (const auto& xi : split.even.elements())
        if (!weight_mod1_uxi(k, xi).is_zero()) r.fail("D^0 codeword " + xi.str() + " has nonintegral weight");
      for (const auto& xi : split.odd)
        if (weight_mod1_uxi(k, xi) != Rational(1, 2)) r.fail("D^1 codeword " + xi.str() + " is not in Z + 1/2");
    }
  }
  return r;
}

/// Largest parameters each suite will run at, whatever upper bound is requested.
inline constexpr std::int64_t kAssociativityCap = 6;
inline constexpr std::int64_t kLatticeCap = 6;
inline constexpr std::int64_t kCountingCap = 4;
inline constexpr std::int64_t kCharacterCap = 3;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fusion-axioms", "appendix-a", "lattice-lemmas", "discriminant",
                                              "counting"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name, std::int64_t k_max, std::uint64_t seed) {
  require(k_max >= 2, "verify: --k must be >= 2");
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };

  if (name == "fusion-axioms") {
    for (std::int64_t k = 2; k <= k_max; ++k) {
      out.push_back(check_label_count(k));
      append(check_u0_ring(k, k <= kAssociativityCap));
      append(check_u0_symmetries(k));
      append(check_simple_currents(k));
      if (k <= kAssociativityCap) append(check_pf_ring(k, true));
    }
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(k_max, 5); ++m) append(check_virasoro_ring(m));
  } else if (name == "appendix-a") {
    for (std::int64_t k = 2; k <= k_max; ++k) {
      out.push_back(check_simple_current_top_levels(k));
      out.push_back(check_positive_weights(k));
      if (k <= kLatticeCap) out.push_back(check_weight_difference(k));
    }
  } else if (name == "lattice-lemmas") {
    const std::int64_t top = std::min(k_max, kLatticeCap);
    for (std::int64_t k = 2; k <= top; ++k) {
      const auto s = seed + static_cast<std::uint64_t>(k) * 1000;
      out.push_back(check_lattice_basics(k));
      out.push_back(check_ntilde_pairing(k, 20, s));
      for (std::size_t length = 1; length <= 3; ++length) {
        out.push_back(check_code_coset_pairing(k, length, 10, 20, s + length));
        out.push_back(check_module_pairing(k, length, 10, 20, s + 10 + length));
      }
    }
    out.push_back(check_parity_vs_case(top, 4, 100, seed));
  } else if (name == "discriminant") {
    for (std::int64_t k = 2; k <= k_max; ++k) out.push_back(check_discriminant(k));
  } else if (name == "counting") {
    for (std::int64_t k = 2; k <= std::min(k_max, kCountingCap); ++k)
      for (std::size_t length = 1; length <= 2; ++length) {
        out.push_back(check_counting(k, length, 64));
        out.push_back(check_code_weights(k, length));
        if (k <= kCharacterCap) out.push_back(check_characters(k, length));
      }
  } else {
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace cosetvoa
