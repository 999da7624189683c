#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "errors.hpp"

namespace cosetvoa {

/// Finite formal sum of canonical labels with positive integer multiplicities.
template <class Label>
class FusionSum {
 public:
  using Terms = std::map<Label, std::int64_t>;

  FusionSum() = default;
  explicit FusionSum(const Label& single) { add(single); }

  void add(const Label& label, std::int64_t multiplicity = 1) {
    if (multiplicity == 0) return;
    ensure(multiplicity > 0, "FusionSum: negative multiplicity");
    terms_[label] += multiplicity;
  }
  void add(const FusionSum& other, std::int64_t scale = 1) {
    for (const auto& [label, mult] : other.terms_) add(label, mult * scale);
  }

  std::int64_t multiplicity(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
  }
  bool contains(const Label& label) const { return terms_.contains(label); }

  /// Number of distinct labels.
  std::size_t size() const { return terms_.size(); }
  /// Sum of all multiplicities.
  std::int64_t length() const {
    std::int64_t s = 0;
    for (const auto& [label, mult] : terms_) s += mult;
    return s;
  }
  bool empty() const { return terms_.empty(); }
  bool multiplicity_free() const {
    for (const auto& [label, mult] : terms_)
      if (mult != 1) return false;
    return true;
  }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const FusionSum&, const FusionSum&) = default;

 private:
  Terms terms_;
};

/// Bilinear extension of a label-level fusion product to formal sums.
template <class Label, class Fuse>
FusionSum<Label> fuse_sums(const FusionSum<Label>& a, const FusionSum<Label>& b, Fuse&& fuse) {
  FusionSum<Label> out;
  for (const auto& [la, ma] : a)
    for (const auto& [lb, mb] : b) out.add(std::invoke(fuse, la, lb), ma * mb);
  return out;
}

}  // namespace cosetvoa
