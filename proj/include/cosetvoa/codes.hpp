#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "residue.hpp"

namespace cosetvoa {

enum class CodeCase { CaseA, CaseB, Invalid };

inline std::string to_string(CodeCase c) {
  switch (c) {
    case CodeCase::CaseA: return "CaseA";
    case CodeCase::CaseB: return "CaseB";
    case CodeCase::Invalid: return "Invalid";
  }
  return "?";
}

inline constexpr std::size_t kDefaultCodeLimit = std::size_t{1} << 20;

/// (k-1)(xi . eta)/2k, with xi . eta the integer dot product of [0, 2k) representatives.
inline Rational code_pairing(std::int64_t k, const ResidueVector& xi, const ResidueVector& eta) {
  return Rational((k - 1) * xi.integer_dot(eta), 2 * k);
}

/// Additive subgroup D of (Z_2k)^length, fully enumerated.
class Code {
 public:
  /// Closure of the generators under addition (breadth first).
  static Code enumerate(std::int64_t k, std::size_t length, const std::vector<ResidueVector>& generators,
                        std::size_t max_size = kDefaultCodeLimit) {
    require(k >= 2, "Code: k must be >= 2");
    require(length >= 1, "Code: length must be >= 1");
    for (const auto& g : generators) {
      require(g.modulus() == 2 * k, "Code: generator modulus must be 2k");
      require(g.size() == length, "Code: generator length mismatch");
    }
    Code code(k, length);
    code.generators_ = generators;
    code.elements_ = closure(k, length, generators, max_size);
    code.classification_ = code.classify();
    return code;
  }

  /// Builds a code from a set already known to be a subgroup; picks a small generating set.
  static Code from_subgroup(std::int64_t k, std::size_t length, std::vector<ResidueVector> elements,
                            std::size_t max_size = kDefaultCodeLimit) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<ResidueVector> gens;
    std::set<ResidueVector> span{ResidueVector::zero(2 * k, length)};
    for (const auto& e : elements) {
      if (span.contains(e)) continue;
      gens.push_back(e);
      // span + <e>
      std::vector<ResidueVector> grown;
      for (const auto& s : span) {
        ResidueVector t = s + e;
        while (!span.contains(t)) {
          grown.push_back(t);
          t = t + e;
        }
      }
      span.insert(grown.begin(), grown.end());
    }
    Code code = enumerate(k, length, gens, max_size);
    ensure(code.elements_ == elements, "Code::from_subgroup: input is not a subgroup");
    return code;
  }

  std::int64_t k() const { return k_; }
  std::int64_t modulus() const { return 2 * k_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ResidueVector>& generators() const { return generators_; }
  /// Sorted lexicographically.
  const std::vector<ResidueVector>& elements() const { return elements_; }
  CodeCase classification() const { return classification_; }

  bool contains(const ResidueVector& xi) const {
    return std::binary_search(elements_.begin(), elements_.end(), xi);
  }
  ResidueVector zero() const { return ResidueVector::zero(modulus(), length_); }

  friend bool operator==(const Code& a, const Code& b) {
    return a.k_ == b.k_ && a.length_ == b.length_ && a.elements_ == b.elements_;
  }

 private:
  Code(std::int64_t k, std::size_t length) : k_(k), length_(length) {}

  static std::vector<ResidueVector> closure(std::int64_t k, std::size_t length,
                                            const std::vector<ResidueVector>& generators, std::size_t max_size) {
    std::set<ResidueVector> seen{ResidueVector::zero(2 * k, length)};
    std::deque<ResidueVector> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      ResidueVector x = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& g : generators) {
        ResidueVector y = x + g;
        if (seen.insert(y).second) {
          if (seen.size() > max_size)
            throw EnumerationLimit("code closure exceeds " + std::to_string(max_size) + " elements");
          frontier.push_back(std::move(y));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  CodeCase classify() const {
    bool all_even = true;
    bool integral = true;
    for (const auto& xi : elements_) {
      const Rational q = code_pairing(k_, xi, xi);
      if (!congruent(q, 0, 2)) all_even = false;
      if (!q.is_integer()) integral = false;
    }
    if (all_even) return CodeCase::CaseA;
    // the pairing is bilinear mod Z, so generators against all elements suffice
    for (const auto& g : generators_)
      for (const auto& xi : elements_)
        if (!code_pairing(k_, g, xi).is_integer()) integral = false;
    return integral ? CodeCase::CaseB : CodeCase::Invalid;
  }

  std::int64_t k_;
  std::size_t length_;
  std::vector<ResidueVector> generators_;
  std::vector<ResidueVector> elements_;
  CodeCase classification_ = CodeCase::Invalid;
};

inline Code enumerate_code(std::int64_t k, std::size_t length, const std::vector<ResidueVector>& generators,
                           std::size_t max_size = kDefaultCodeLimit) {
  return Code::enumerate(k, length, generators, max_size);
}

struct EvenOddSplit {
  Code even;                       ///< D^0: codewords with (k-1)xi.xi/2k in 2Z
  std::vector<ResidueVector> odd;  ///< D^1 = D \ D^0
};

inline EvenOddSplit split_even_odd(const Code& code) {
  require(code.classification() == CodeCase::CaseB, "split_even_odd: code is not in Case B");
  std::vector<ResidueVector> even, odd;
  for (const auto& xi : code.elements())
    (congruent(code_pairing(code.k(), xi, xi), 0, 2) ? even : odd).push_back(xi);
  Code d0 = Code::from_subgroup(code.k(), code.length(), even);
  ensure(2 * d0.size() == code.size(), "split_even_odd: D^0 is not of index 2");
  return {std::move(d0), std::move(odd)};
}

/// sum_r min(xi_r^2, (2k - xi_r)^2)
inline std::int64_t euclidean_weight(const ResidueVector& xi) {
  const std::int64_t n = xi.modulus();
  std::int64_t w = 0;
  for (std::int64_t e : xi.entries()) w += std::min(e * e, (n - e) * (n - e));
  return w;
}

namespace detail {

inline std::uint64_t checked_power(std::int64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t r = 0; r < exponent; ++r) {
    v *= static_cast<std::uint64_t>(base);
    if (v > cap) return cap + 1;
  }
  return v;
}

/// Calls f on every vector of (Z_n)^length in lexicographic order.
template <class F>
void for_each_vector(std::int64_t n, std::size_t length, F&& f) {
  std::vector<std::int64_t> digits(length, 0);
  while (true) {
    f(ResidueVector(n, digits));
    std::size_t r = length;
    while (r > 0) {
      --r;
      if (++digits[r] < n) break;
      digits[r] = 0;
      if (r == 0) return;
    }
  }
}

}  // namespace detail

inline constexpr std::uint64_t kAmbientScanLimit = std::uint64_t{1} << 24;

/// D^perp = { eta : (xi|eta) = 0 for all xi in D }, by scanning the ambient space.
inline Code dual_code(const Code& code, std::size_t max_size = kDefaultCodeLimit) {
  const std::uint64_t ambient = detail::checked_power(code.modulus(), code.length(), kAmbientScanLimit);
  if (ambient > kAmbientScanLimit) throw EnumerationLimit("dual_code: ambient space too large to scan");
  if (ambient / code.size() > max_size) throw EnumerationLimit("dual_code: dual exceeds size guard");
  std::vector<ResidueVector> dual;
  detail::for_each_vector(code.modulus(), code.length(), [&](const ResidueVector& eta) {
    for (const auto& g : code.generators())
      if (standard_inner(g, eta) != 0) return;
    dual.push_back(eta);
  });
  return Code::from_subgroup(code.k(), code.length(), std::move(dual), max_size);
}

/// Every subgroup of (Z_2k)^length (each is generated by at most `length` elements).
inline std::vector<Code> all_codes(std::int64_t k, std::size_t length, std::uint64_t tuple_limit = kAmbientScanLimit) {
  const std::uint64_t ambient = detail::checked_power(2 * k, length, tuple_limit);
  const std::uint64_t tuples = detail::checked_power(static_cast<std::int64_t>(ambient), length, tuple_limit);
  if (tuples > tuple_limit) throw EnumerationLimit("all_codes: too many generator tuples");
  std::vector<ResidueVector> space;
  detail::for_each_vector(2 * k, length, [&](const ResidueVector& v) { space.push_back(v); });

  std::set<std::vector<ResidueVector>> seen;
  std::vector<Code> out;
  std::vector<std::size_t> pick(length, 0);
  while (true) {
    std::vector<ResidueVector> gens;
    for (std::size_t idx : pick) gens.push_back(space[idx]);
    Code c = Code::enumerate(k, length, gens);
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
    std::size_t r = length;
    bool done = true;
    while (r > 0) {
      --r;
      if (++pick[r] < space.size()) { done = false; break; }
      pick[r] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements() < b.elements();
  });
  return out;
}

}  // namespace cosetvoa
