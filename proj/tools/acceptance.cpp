// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cosetvoa/cosetvoa.hpp"

using namespace cosetvoa;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::vector<CheckResult>()> run;
};

template <class T>
void append(std::vector<T>& into, std::vector<T> more) {
  into.insert(into.end(), more.begin(), more.end());
}

constexpr std::uint64_t kSeed = 20240601;

std::vector<CheckResult> classification_count() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 12; ++k) out.push_back(check_label_count(k));
  return out;
}

std::vector<CheckResult> fusion_axioms() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 8; ++k) append(out, check_u0_ring(k, k <= 6));
  return out;
}

std::vector<CheckResult> simple_current_top_levels() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 50; ++k) out.push_back(check_simple_current_top_levels(k));
  return out;
}

std::vector<CheckResult> lattice_congruences() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 6; ++k) {
    const auto s = kSeed + static_cast<std::uint64_t>(k) * 100;
    out.push_back(check_ntilde_pairing(k, 20, s));
    for (std::size_t len = 1; len <= 3; ++len) {
      out.push_back(check_code_coset_pairing(k, len, 10, 20, s + len));
      out.push_back(check_module_pairing(k, len, 10, 20, s + 10 + len));
    }
  }
  return out;
}

std::vector<CheckResult> parity_vs_case() { return {check_parity_vs_case(6, 4, 100, kSeed)}; }

std::vector<CheckResult> discriminant() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 12; ++k) out.push_back(check_discriminant(k));
  return out;
}

std::vector<CheckResult> counting() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 4; ++k)
    for (std::size_t len = 1; len <= 2; ++len) out.push_back(check_counting(k, len, 64));
  return out;
}

std::vector<CheckResult> characters() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 3; ++k)
    for (std::size_t len = 1; len <= 2; ++len) out.push_back(check_characters(k, len));
  return out;
}

std::vector<CheckResult> symmetries() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 6; ++k) append(out, check_u0_symmetries(k));
  return out;
}

std::vector<CheckResult> weights() {
  std::vector<CheckResult> out;
  for (std::int64_t k = 2; k <= 10; ++k) out.push_back(check_positive_weights(k));
  for (std::int64_t k = 2; k <= 4; ++k)
    for (std::size_t len = 1; len <= 2; ++len) out.push_back(check_code_weights(k, len));

  CheckResult random_codes("codes.weights(random)");
  std::mt19937_64 rng(kSeed);
  for (int n = 0; n < 100; ++n) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 5);
    const Code c = random_valid_code(k, 1 + rng() % 4, rng);
    ++random_codes.cases;
    if (c.classification() == CodeCase::CaseA) {
      for (const auto& xi : c.elements())
        if (!weight_mod1_uxi(k, xi).is_zero()) random_codes.fail("Case A codeword " + xi.str());
    } else {
      for (const auto& xi : split_even_odd(c).odd)
        if (weight_mod1_uxi(k, xi) != Rational(1, 2)) random_codes.fail("D^1 codeword " + xi.str());
    }
  }
  out.push_back(random_codes);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "U0 label count equals k^2, k = 2..12", 1.0, classification_count},
      {2, "U0 fusion ring axioms (assoc k<=6, unit/duals k<=8)", 60.0, fusion_axioms},
      {3, "U^l top levels: closed form vs minimization, k <= 50", 30.0, simple_current_top_levels},
      {4, "lattice pairing congruences, k<=6, l<=3", 60.0, lattice_congruences},
      {5, "Gamma_D parity agrees with code case, 100 random codes", 60.0, parity_vs_case},
      {6, "discriminant group (2,...,2,2k), k = 2..12", 1.0, discriminant},
      {7, "twisted module counting consistency, k<=4, l<=2", 120.0, counting},
      {8, "character surjectivity and orbit invariance, k<=3, l<=2", 30.0, characters},
      {9, "theta and phi are fusion symmetries, k<=6", 30.0, symmetries},
      {10, "positive weights and h(U_xi) mod 1 on codes", 30.0, weights},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::uint64_t cases = 0;
    std::string first_failure = error;
    for (const auto& r : results) {
      cases += r.cases;
      if (!r.passed && first_failure.empty()) first_failure = r.name + ": " + r.detail;
    }
    const bool in_time = seconds <= c.limit_seconds;
    if (first_failure.empty() && !in_time) first_failure = "exceeded time limit";
    const bool pass = first_failure.empty();
    failures += !pass;

    std::printf("[%s] %2d  %-58s %9llu cases  %7.3f s / %5.0f s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                static_cast<unsigned long long>(cases), seconds, c.limit_seconds, pass ? "" : "  -- ",
                first_failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
