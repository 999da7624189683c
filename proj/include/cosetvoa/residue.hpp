#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cosetvoa {

/// Canonical residue of value modulo n, in [0, n).
constexpr std::int64_t mod(std::int64_t value, std::int64_t n) {
  std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

/// A vector in (Z_n)^length with every entry stored in [0, n).
class ResidueVector {
 public:
  ResidueVector() = default;

  ResidueVector(std::int64_t modulus, std::span<const std::int64_t> entries)
      : modulus_(modulus), entries_(entries.begin(), entries.end()) {
    require(modulus >= 1, "ResidueVector: modulus must be positive");
    require(!entries_.empty(), "ResidueVector: length must be at least 1");
    for (auto& e : entries_) e = mod(e, modulus_);
  }
  ResidueVector(std::int64_t modulus, std::initializer_list<std::int64_t> entries)
      : ResidueVector(modulus, std::span<const std::int64_t>(entries.begin(), entries.size())) {}
  ResidueVector(std::int64_t modulus, const std::vector<std::int64_t>& entries)
      : ResidueVector(modulus, std::span<const std::int64_t>(entries)) {}

  static ResidueVector zero(std::int64_t modulus, std::size_t length) {
    return ResidueVector(modulus, std::vector<std::int64_t>(length, 0));
  }

  std::int64_t modulus() const { return modulus_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t r) const { return entries_[r]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
  }

  ResidueVector operator+(const ResidueVector& o) const {
    check_compatible(o);
    std::vector<std::int64_t> out(size());
    for (std::size_t r = 0; r < size(); ++r) out[r] = entries_[r] + o.entries_[r];
    return ResidueVector(modulus_, out);
  }
  ResidueVector operator-() const {
    std::vector<std::int64_t> out(size());
    for (std::size_t r = 0; r < size(); ++r) out[r] = -entries_[r];
    return ResidueVector(modulus_, out);
  }
  ResidueVector operator-(const ResidueVector& o) const { return *this + (-o); }
  ResidueVector scaled(std::int64_t c) const {
    std::vector<std::int64_t> out(size());
    for (std::size_t r = 0; r < size(); ++r) out[r] = c * entries_[r];
    return ResidueVector(modulus_, out);
  }

  /// Plain integer dot product of the [0, n) representatives.
  std::int64_t integer_dot(const ResidueVector& o) const {
    check_compatible(o);
    std::int64_t s = 0;
    for (std::size_t r = 0; r < size(); ++r) s += entries_[r] * o.entries_[r];
    return s;
  }

  void check_compatible(const ResidueVector& o) const {
    require(modulus_ == o.modulus_, "ResidueVector: modulus mismatch");
    require(size() == o.size(), "ResidueVector: length mismatch");
  }

  /// "[a,b,c]"
  std::string str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < size(); ++r) {
      if (r) s += ",";
      s += std::to_string(entries_[r]);
    }
    return s + "]";
  }

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
  friend auto operator<=>(const ResidueVector&, const ResidueVector&) = default;

 private:
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> entries_;
};

/// (xi|eta) = sum xi_r eta_r reduced mod n.
inline std::int64_t standard_inner(const ResidueVector& xi, const ResidueVector& eta) {
  return mod(xi.integer_dot(eta), xi.modulus());
}

}  // namespace cosetvoa
