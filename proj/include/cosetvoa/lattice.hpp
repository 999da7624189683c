#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "integer_matrix.hpp"
#include "rational.hpp"
#include "residue.hpp"
#include "ud_modules.hpp"

namespace cosetvoa {

/// Vector of Q (x) L^{(k)} in the orthogonal basis alpha_1..alpha_k, <alpha_r, alpha_s> = 2 delta_rs.
class LatticeVector {
 public:
  explicit LatticeVector(std::int64_t k) : coords_(static_cast<std::size_t>(k), Rational(0)) {
    require(k >= 1, "LatticeVector: rank must be positive");
  }
  explicit LatticeVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    require(!coords_.empty(), "LatticeVector: rank must be positive");
  }

  /// alpha_r, 1-based as in the usual notation.
  static LatticeVector alpha(std::int64_t k, std::int64_t r) {
    require(1 <= r && r <= k, "alpha: index out of range");
    LatticeVector v(k);
    v.coords_[static_cast<std::size_t>(r - 1)] = 1;
    return v;
  }

  std::int64_t rank() const { return static_cast<std::int64_t>(coords_.size()); }
  const Rational& operator[](std::size_t r) const { return coords_[r]; }
  const std::vector<Rational>& coords() const { return coords_; }

  LatticeVector& operator+=(const LatticeVector& o) {
    check(o);
    for (std::size_t r = 0; r < coords_.size(); ++r) coords_[r] += o.coords_[r];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check(o);
    for (std::size_t r = 0; r < coords_.size(); ++r) coords_[r] -= o.coords_[r];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Rational& c, LatticeVector v) {
    for (auto& x : v.coords_) x *= c;
    return v;
  }

  /// In L^{(k)}: all coordinates integral.
  bool in_L() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.is_integer(); });
  }
  Rational coordinate_sum() const {
    Rational s(0);
    for (const auto& x : coords_) s += x;
    return s;
  }
  /// In N = { x in L^{(k)} : <x, gamma_k> = 0 }.
  bool in_N() const { return in_L() && coordinate_sum().is_zero(); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t r = 0; r < coords_.size(); ++r) s += (r ? "," : "") + coords_[r].str();
    return s + ")";
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  void check(const LatticeVector& o) const { require(rank() == o.rank(), "LatticeVector: rank mismatch"); }
  std::vector<Rational> coords_;
};

inline Rational inner(const LatticeVector& x, const LatticeVector& y) {
  require(x.rank() == y.rank(), "inner: rank mismatch");
  Rational s(0);
  for (std::size_t r = 0; r < x.coords().size(); ++r) s += x[r] * y[r];
  return Rational(2) * s;
}

using LatticeTuple = std::vector<LatticeVector>;

inline Rational inner(const LatticeTuple& x, const LatticeTuple& y) {
  require(x.size() == y.size(), "inner: tuple length mismatch");
  Rational s(0);
  for (std::size_t r = 0; r < x.size(); ++r) s += inner(x[r], y[r]);
  return s;
}

struct SpecialVectors {
  LatticeVector gamma_km1;  ///< alpha_1 + ... + alpha_{k-1}
  LatticeVector gamma_k;    ///< alpha_1 + ... + alpha_k
  LatticeVector d;          ///< gamma_{k-1} - (k-1) alpha_k
};

inline SpecialVectors special_vectors(std::int64_t k) {
  require(k >= 2, "special_vectors: k must be >= 2");
  std::vector<Rational> g1(static_cast<std::size_t>(k), Rational(1));
  g1.back() = 0;
  std::vector<Rational> g(static_cast<std::size_t>(k), Rational(1));
  LatticeVector gamma_km1(g1), gamma_k(g);
  LatticeVector d = gamma_km1 - Rational(k - 1) * LatticeVector::alpha(k, k);
  ensure(inner(gamma_k, gamma_k) == Rational(2 * k), "special_vectors: <gamma_k,gamma_k> != 2k");
  ensure(inner(d, d) == Rational(2 * (k - 1) * k), "special_vectors: <d,d> != 2(k-1)k");
  ensure(inner(gamma_k, d).is_zero(), "special_vectors: <gamma_k,d> != 0");
  return {gamma_km1, gamma_k, d};
}

/// delta_a = (1/2) sum a_p alpha_p for a in {0,1}^k
inline LatticeVector delta(const std::vector<int>& a) {
  std::vector<Rational> c;
  for (int bit : a) {
    require(bit == 0 || bit == 1, "delta: entries must be 0 or 1");
    c.emplace_back(bit, 2);
  }
  return LatticeVector(c);
}

/// beta_r = alpha_r - alpha_{r+1}, r = 1..k-1: a Z-basis of N.
inline std::vector<LatticeVector> n_basis(std::int64_t k) {
  std::vector<LatticeVector> out;
  for (std::int64_t r = 1; r < k; ++r) out.push_back(LatticeVector::alpha(k, r) - LatticeVector::alpha(k, r + 1));
  return out;
}

/// Coset N - l d/2k.
struct NtildeCoset {
  std::int64_t l;
};
/// Coset N + delta_a - j alpha_k + (2j - |a|)/2k gamma_k.
struct NCoset {
  std::int64_t j;
  std::vector<int> a;
};
using CosetSpec = std::variant<NtildeCoset, NCoset>;

inline LatticeVector coset_rep(std::int64_t k, const CosetSpec& spec) {
  const SpecialVectors sv = special_vectors(k);
  if (const auto* t = std::get_if<NtildeCoset>(&spec)) return Rational(-mod(t->l, 2 * k), 2 * k) * sv.d;
  const auto& c = std::get<NCoset>(spec);
  require(static_cast<std::int64_t>(c.a.size()) == k, "coset_rep: a must have k entries");
  std::int64_t weight = 0;
  for (int bit : c.a) weight += bit;
  const std::int64_t j = mod(c.j, k);
  return delta(c.a) - Rational(j) * LatticeVector::alpha(k, k) + Rational(2 * j - weight, 2 * k) * sv.gamma_k;
}

inline bool in_coset(std::int64_t k, const CosetSpec& spec, const LatticeVector& x) {
  return (x - coset_rep(k, spec)).in_N();
}

/// x pairs integrally with N and is orthogonal to gamma_k.
inline bool in_dual_of_N(const LatticeVector& x) {
  const std::int64_t k = x.rank();
  if (!inner(x, special_vectors(k).gamma_k).is_zero()) return false;
  for (const auto& b : n_basis(k))
    if (!inner(x, b).is_integer()) return false;
  return true;
}

/// Bounded random element of N: sum c_r beta_r with c_r in [-3, 3].
inline LatticeVector random_n_element(std::int64_t k, std::mt19937_64& rng) {
  LatticeVector v(k);
  for (const auto& b : n_basis(k)) {
    const std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
    v += Rational(c) * b;
  }
  return v;
}

inline LatticeVector sample_coset(std::int64_t k, const CosetSpec& spec, std::mt19937_64& rng) {
  return coset_rep(k, spec) + random_n_element(k, rng);
}

/// Representative of N~(xi) = N~^{(xi_1)} x ... x N~^{(xi_l)}.
inline LatticeTuple code_coset_rep(std::int64_t k, const ResidueVector& xi) {
  LatticeTuple out;
  for (std::int64_t e : xi.entries()) out.push_back(coset_rep(k, NtildeCoset{e}));
  return out;
}

inline LatticeTuple sample_code_coset(std::int64_t k, const ResidueVector& xi, std::mt19937_64& rng) {
  LatticeTuple out = code_coset_rep(k, xi);
  for (auto& x : out) x += random_n_element(k, rng);
  return out;
}

/// Samples alpha in N~^{(p)}, beta in N~^{(q)} and checks
/// <alpha,beta> in (k-1)pq/2k + Z and <alpha,alpha> in (k-1)p^2/2k + 2Z.
inline bool verify_ntilde_pairing(std::int64_t k, std::int64_t p, std::int64_t q, int samples,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational cross((k - 1) * p * q, 2 * k);
  const Rational norm((k - 1) * p * p, 2 * k);
  for (int n = 0; n < samples; ++n) {
    const LatticeVector a = sample_coset(k, NtildeCoset{p}, rng);
    const LatticeVector b = sample_coset(k, NtildeCoset{q}, rng);
    if (!congruent(inner(a, b), cross, 1)) return false;
    if (!congruent(inner(a, a), norm, 2)) return false;
  }
  return true;
}

/// Vector form over (Z_2k)^l, with xi.eta the integer dot product of representatives.
inline bool verify_code_coset_pairing(std::int64_t k, const ResidueVector& xi, const ResidueVector& eta, int samples,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational cross((k - 1) * xi.integer_dot(eta), 2 * k);
  const Rational norm((k - 1) * xi.integer_dot(xi), 2 * k);
  for (int n = 0; n < samples; ++n) {
    const LatticeTuple a = sample_code_coset(k, xi, rng);
    const LatticeTuple b = sample_code_coset(k, eta, rng);
    if (!congruent(inner(a, b), cross, 1)) return false;
    if (!congruent(inner(a, a), norm, 2)) return false;
  }
  return true;
}

namespace detail {

// Coefficients of x in the orthogonal pair (u, v), or nothing if x leaves their span.
inline std::optional<std::pair<Rational, Rational>> coordinates_in(const LatticeVector& x, const LatticeVector& u,
                                                                  const LatticeVector& v) {
  const Rational a = inner(x, u) / inner(u, u);
  const Rational b = inner(x, v) / inner(v, v);
  if (!(Rational(a) * u + Rational(b) * v == x)) return std::nullopt;
  return std::make_pair(a, b);
}

inline bool in_span_Z(const LatticeVector& x, const LatticeVector& u, const LatticeVector& v) {
  auto c = coordinates_in(x, u, v);
  return c && c->first.is_integer() && c->second.is_integer();
}

}  // namespace detail

/// [Z gamma_{k-1} + Z alpha_k : Z d + Z gamma_k] = k, with coset representatives p alpha_k.
inline bool verify_coset_index(std::int64_t k) {
  const SpecialVectors sv = special_vectors(k);
  const LatticeVector ak = LatticeVector::alpha(k, k);
  const Rational outer = inner(sv.d, sv.d) * inner(sv.gamma_k, sv.gamma_k) - inner(sv.d, sv.gamma_k) * inner(sv.d, sv.gamma_k);
  const Rational inner_det = inner(sv.gamma_km1, sv.gamma_km1) * inner(ak, ak) - inner(sv.gamma_km1, ak) * inner(sv.gamma_km1, ak);
  if (outer / inner_det != Rational(k * k)) return false;

  std::vector<LatticeVector> reps;
  for (std::int64_t p = 0; p < k; ++p) reps.push_back(Rational(p, k) * (sv.gamma_k - sv.d));
  for (std::size_t p = 0; p < reps.size(); ++p) {
    if (!detail::in_span_Z(reps[p], sv.gamma_km1, ak)) return false;
    for (std::size_t q = 0; q < p; ++q)
      if (detail::in_span_Z(reps[p] - reps[q], sv.d, sv.gamma_k)) return false;
  }
  return detail::in_span_Z(reps.front(), sv.d, sv.gamma_k);
}

/// Gram matrix of N in the basis beta_r (4 on the diagonal, -2 beside it).
inline IntegerMatrix n_gram(std::int64_t k) {
  require(k >= 2, "n_gram: k must be >= 2");
  const auto basis = n_basis(k);
  IntegerMatrix g(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t s = 0; s < basis.size(); ++s) g(r, s) = inner(basis[r], basis[s]).numerator();
  return g;
}

/// Elementary divisors of N^o/N.
inline std::vector<BigInt> discriminant_group(std::int64_t k) { return smith_normal_form(n_gram(k)); }

/// The expected pattern (2, ..., 2, 2k) with k-2 twos.
inline std::vector<BigInt> discriminant_pattern(std::int64_t k) {
  std::vector<BigInt> out(static_cast<std::size_t>(k - 2), BigInt(2));
  out.push_back(BigInt(2 * k));
  return out;
}

enum class LatticeParity { Even, Odd, NotIntegral };

inline std::string to_string(LatticeParity p) {
  switch (p) {
    case LatticeParity::Even: return "Even";
    case LatticeParity::Odd: return "Odd";
    case LatticeParity::NotIntegral: return "NotIntegral";
  }
  return "?";
}

inline constexpr std::size_t kParityCodeLimit = std::size_t{1} << 16;

/// Parity of Gamma_D = union of N~(xi), xi in D, decided from coordinates alone:
/// norms of every codeword representative (and sampled N-translates) and the
/// pairings of generator representatives with every codeword representative.
inline LatticeParity gamma_d_parity(const Code& code, int translates = 2, std::uint64_t seed = 0) {
  if (code.size() > kParityCodeLimit) throw EnumerationLimit("gamma_d_parity: code too large");
  const std::int64_t k = code.k();
  std::mt19937_64 rng(seed);
  std::vector<LatticeTuple> reps;
  for (const auto& xi : code.elements()) reps.push_back(code_coset_rep(k, xi));

  bool integral = true;
  bool even = true;
  for (std::size_t n = 0; n < reps.size(); ++n) {
    for (int t = 0; t <= translates; ++t) {
      const LatticeTuple x = t == 0 ? reps[n] : sample_code_coset(k, code.elements()[n], rng);
      const Rational norm = inner(x, x);
      if (!norm.is_integer()) integral = false;
      else if (!congruent(norm, 0, 2)) even = false;
    }
  }
  for (const auto& g : code.generators()) {
    const LatticeTuple gx = code_coset_rep(k, g);
    for (const auto& x : reps)
      if (!inner(gx, x).is_integer()) integral = false;
  }
  if (!integral) return LatticeParity::NotIntegral;
  return even ? LatticeParity::Even : LatticeParity::Odd;
}

/// The coset N(j, (0,...,0,a_{k-1},a_k)) whose lattice VOA contains U^{i,l}:
/// i = a_{k-1}, l = a_{k-1} + a_k (mod 2), j = (a_{k-1} + a_k - l)/2 (mod k).
inline NCoset u0_module_coset(const U0Label& x) {
  const std::int64_t k = x.k();
  const int a1 = static_cast<int>(mod(x.i(), 2));
  const int a2 = static_cast<int>(mod(x.l() - a1, 2));
  const std::int64_t twice_j = a1 + a2 - x.l();
  ensure(twice_j % 2 == 0, "u0_module_coset: parity");
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  a[static_cast<std::size_t>(k - 2)] = a1;
  a[static_cast<std::size_t>(k - 1)] = a2;
  return {mod(twice_j / 2, k), a};
}

/// Samples x in N~(xi) and y in N(eta, delta1, delta2) (the coset containing X) and checks
/// <x, y> in b(U_xi, X) + Z.
inline bool verify_module_pairing(const ResidueVector& xi, const IrrU0Label& module, int samples, std::uint64_t seed) {
  const std::int64_t k = module.k();
  require(xi.modulus() == 2 * k && xi.size() == module.length(), "verify_module_pairing: shape mismatch");
  std::mt19937_64 rng(seed);
  const Rational b = b_form_vec(xi, module);
  std::vector<CosetSpec> cosets;
  for (const auto& c : module.components()) cosets.emplace_back(u0_module_coset(c));
  for (int n = 0; n < samples; ++n) {
    const LatticeTuple x = sample_code_coset(k, xi, rng);
    LatticeTuple y;
    for (const auto& spec : cosets) y.push_back(sample_coset(k, spec, rng));
    if (!congruent(inner(x, y), b, 1)) return false;
  }
  return true;
}

}  // namespace cosetvoa
