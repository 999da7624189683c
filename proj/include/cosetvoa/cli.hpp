#pragma once

#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "code_io.hpp"
#include "codes.hpp"
#include "lattice.hpp"
#include "parafermion.hpp"
#include "u0.hpp"
#include "ud_modules.hpp"
#include "verify.hpp"
#include "virasoro.hpp"

namespace cosetvoa::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cosetvoa.report/1";

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

struct Outcome {
  Json report;
  int exit_code = kOk;
};

inline Json make_report(const std::string& command, Json parameters, std::uint64_t seed = 0) {
  Json r;
  r["schema"] = kSchema;
  r["command"] = command;
  r["parameters"] = std::move(parameters);
  r["results"] = Json::object();
  r["verdicts"] = Json::object();
  r["seed"] = seed;
  return r;
}

namespace detail {

inline std::vector<std::int64_t> parse_ints(const std::string& text, char sep = ',') {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(sep, pos);
    const std::string piece = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t a = piece.find_first_not_of(' ');
    std::size_t b = piece.find_last_not_of(' ');
    require(a != std::string::npos, "expected an integer in '" + text + "'");
    std::int64_t v = 0;
    const char* first = piece.data() + a;
    const char* last = piece.data() + b + 1;
    auto [ptr, ec] = std::from_chars(first, last, v);
    require(ec == std::errc() && ptr == last, "expected an integer in '" + text + "'");
    out.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

/// "a,b" or "K;a,b"; a level prefix must agree with `k`.
inline std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, std::int64_t k) {
  std::string body = text;
  if (const auto semi = text.find(';'); semi != std::string::npos) {
    const auto level = parse_ints(text.substr(0, semi));
    require(level.size() == 1 && level[0] == k, "label '" + text + "' is at a different level than --k");
    body = text.substr(semi + 1);
  }
  const auto v = parse_ints(body);
  require(v.size() == 2, "label '" + text + "' must have two entries");
  return {v[0], v[1]};
}

/// "eta=1,0", "η=[1,0]" or "1,0".
inline std::vector<std::int64_t> parse_character(const std::string& text) {
  std::string body = text;
  if (const auto eq = body.find('='); eq != std::string::npos) body = body.substr(eq + 1);
  if (!body.empty() && body.front() == '[') body.erase(body.begin());
  if (!body.empty() && body.back() == ']') body.pop_back();
  return parse_ints(body);
}

template <class Label, class Weight>
Json terms_json(const FusionSum<Label>& s, Weight&& weight) {
  Json out = Json::array();
  for (const auto& [label, mult] : s) {
    Json t;
    t["label"] = label.str();
    t["multiplicity"] = mult;
    weight(t, label);
    out.push_back(std::move(t));
  }
  return out;
}

inline Json codeword_list(const std::vector<ResidueVector>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline Json decomposition_json(const FusionSum<IrrU0Label>& s) {
  Json out = Json::array();
  for (const auto& [label, mult] : s) out.push_back({{"label", label.str()}, {"multiplicity", mult}});
  return out;
}

// Characters print as the eta of the first orbit carrying them, so output is canonical per run.
class CharacterNames {
 public:
  std::string name(const CharacterLabel& chi) {
    auto [it, inserted] = names_.try_emplace(chi.values, "eta=" + chi.eta.str());
    return it->second;
  }

 private:
  std::map<std::vector<std::int64_t>, std::string> names_;
};

}  // namespace detail

inline Outcome cmd_fusion(std::int64_t k, const std::string& left, const std::string& right,
                          const std::string& algebra = "u0") {
  Outcome out{make_report("fusion", {{"k", k}, {"left", left}, {"right", right}, {"algebra", algebra}})};
  auto& res = out.report["results"];
  const auto [a1, a2] = detail::parse_pair(left, k);
  const auto [b1, b2] = detail::parse_pair(right, k);
  if (algebra == "u0") {
    const U0Label a = U0Label::canonical(k, a1, a2), b = U0Label::canonical(k, b1, b2);
    res["left"] = a.str();
    res["right"] = b.str();
    res["terms"] = detail::terms_json(fuse_u0(a, b), [](Json& t, const U0Label& x) {
      const TopLevel top = top_level(x);
      t["weight"] = top.weight.str();
      t["top_dimension"] = top.dimension;
    });
  } else if (algebra == "pf") {
    const auto a = ParafermionLabel::canonical(k, a1, a2), b = ParafermionLabel::canonical(k, b1, b2);
    res["left"] = a.str();
    res["right"] = b.str();
    res["terms"] = detail::terms_json(fuse_pf(a, b), [](Json& t, const ParafermionLabel& x) {
      t["weight"] = pf_weight(x).str();
    });
  } else if (algebra == "vir") {
    const auto a = VirasoroLabel::canonical(k, a1, a2), b = VirasoroLabel::canonical(k, b1, b2);
    res["central_charge"] = central_charge(k).str();
    res["left"] = a.str();
    res["right"] = b.str();
    res["terms"] = detail::terms_json(fuse_virasoro(a, b), [](Json& t, const VirasoroLabel& x) {
      t["weight"] = highest_weight(x).str();
    });
  } else {
    throw std::invalid_argument("fusion: --algebra must be u0, pf or vir");
  }
  return out;
}

inline Outcome cmd_classify(const Code& code, const std::string& source) {
  Outcome out{make_report("classify", {{"code", source}})};
  auto& res = out.report["results"];
  const std::int64_t k = code.k();
  res["k"] = k;
  res["length"] = code.length();
  res["size"] = code.size();
  res["classification"] = to_string(code.classification());
  if (code.classification() == CodeCase::CaseB) {
    const auto split = split_even_odd(code);
    res["even_size"] = split.even.size();
    res["odd_size"] = split.odd.size();
  } else if (code.classification() == CodeCase::CaseA) {
    res["even_size"] = code.size();
    res["odd_size"] = 0;
  } else {
    res["even_size"] = nullptr;
    res["odd_size"] = nullptr;
  }
  Json gens = Json::array();
  for (const auto& g : code.generators())
    gens.push_back({{"codeword", g.str()},
                    {"euclidean_weight", euclidean_weight(g)},
                    {"weight_mod1", weight_mod1_uxi(k, g).str()}});
  res["generators"] = gens;
  res["dual_size"] = dual_code(code).size();
  if (code.size() <= kParityCodeLimit) res["lattice_parity"] = to_string(gamma_d_parity(code));
  return out;
}

inline Outcome cmd_modules(const Code& code, const std::string& source, const std::optional<std::string>& chi_text,
                           bool with_induce) {
  Json params{{"code", source}};
  params["chi"] = chi_text ? Json(*chi_text) : Json(nullptr);
  params["induce"] = with_induce;
  Outcome out{make_report("modules", params)};
  auto& res = out.report["results"];
  res["k"] = code.k();
  res["length"] = code.length();
  res["size"] = code.size();
  res["classification"] = to_string(code.classification());

  if (code.classification() == CodeCase::Invalid)
    throw std::invalid_argument("modules: code is neither Case A nor Case B");

  if (code.classification() == CodeCase::CaseB) {
    require(!chi_text, "modules: --chi applies to Case A codes only");
    const CaseBInventory inv = case_b_inventory(code);
    res["even_code_size"] = inv.even_code.size();
    res["odd_coset"] = detail::codeword_list(inv.odd_coset);
    Json entries = Json::array();
    for (const auto& e : inv.entries)
      entries.push_back({{"representative", e.representative.str()},
                         {"summand", e.summand_index},
                         {"even_part", detail::decomposition_json(e.even_part)},
                         {"induced", detail::decomposition_json(e.induced)},
                         {"splitting", e.splitting}});
    res["inventory"] = entries;
    res["entries"] = inv.entries.size();
    return out;
  }

  std::optional<CharacterLabel> filter;
  if (chi_text) filter = character_from_vector(code, ResidueVector(2 * code.k(), detail::parse_character(*chi_text)));

  const OrbitCensus census = orbits(code, filter);
  detail::CharacterNames names;
  Json table = Json::array();
  std::map<std::string, std::int64_t> counts;
  std::vector<std::string> order;
  std::int64_t total = 0;
  for (const auto& o : census.orbits) {
    const std::string chi = names.name(o.character);
    const InducedModuleReport rep = induce(code, o.representative);
    Json row{{"representative", o.representative.str()},
             {"size", o.members.size()},
             {"stabilizer_order", o.stabilizer.size()},
             {"stabilizer_radical", o.stabilizer_radical},
             {"character", chi},
             {"summand_count", rep.summand_count},
             {"multiplicity", rep.multiplicity}};
    if (with_induce) {
      row["weight_mod1"] = rep.weight_mod1.str();
      row["summand_decomposition"] = detail::decomposition_json(rep.summand_decomposition);
    }
    table.push_back(std::move(row));
    if (!counts.contains(chi)) order.push_back(chi);
    counts[chi] += static_cast<std::int64_t>(rep.summand_count);
    total += static_cast<std::int64_t>(rep.summand_count);
  }
  res["orbits"] = table;
  res["orbit_count"] = census.orbits.size();
  Json per_chi = Json::array();
  for (const auto& chi : order) per_chi.push_back({{"character", chi}, {"count", counts[chi]}});
  res["counts"] = per_chi;
  res["total"] = total;
  return out;
}

inline Outcome cmd_verify(const std::string& suite, std::int64_t k, std::uint64_t seed) {
  Outcome out{make_report("verify", {{"suite", suite}, {"k", k}}, seed)};
  const auto checks = run_suite(suite, k, seed);
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    failed += !c.passed;
  }
  out.report["results"]["checks"] = list;
  out.report["verdicts"] = {{"passed", failed == 0}, {"checks", checks.size()}, {"failed", failed}};
  out.exit_code = failed == 0 ? kOk : kVerificationFailure;
  return out;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Fusion rules, codes and twisted module inventories for the coset algebras U^0 and U_D", "cosetvoa"};
  app.require_subcommand(1);
  bool deterministic = false;
  app.add_flag("--deterministic", deterministic, "Single-threaded evaluation (all commands already are)");

  std::int64_t k = 0;
  std::string left, right, algebra = "u0", code_path, suite;
  std::optional<std::string> chi;
  bool with_induce = false;
  std::uint64_t seed = 0;

  auto* fusion = app.add_subcommand("fusion", "Fusion product of two irreducible modules");
  fusion->add_option("--k", k, "Level (the index m for --algebra vir)")->required();
  fusion->add_option("--left", left, "Label i,l (or K;i,l)")->required();
  fusion->add_option("--right", right, "Label i,l (or K;i,l)")->required();
  fusion->add_option("--algebra", algebra, "u0, pf or vir")->check(CLI::IsMember({"u0", "pf", "vir"}));

  auto* classify = app.add_subcommand("classify", "Classify a Z_2k-code");
  classify->add_option("--code", code_path, "Code JSON file")->required();

  auto* modules = app.add_subcommand("modules", "Orbit census and twisted module counts for U_D");
  modules->add_option("--code", code_path, "Code JSON file")->required();
  modules->add_option("--chi", chi, "Restrict to one character, e.g. eta=1,0");
  modules->add_flag("--induce", with_induce, "Include the U_0-decomposition of each induced summand");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--k", k, "Upper bound on the level")->required();
  verify->add_option("--seed", seed, "Seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Outcome o;
    if (*fusion) o = cmd_fusion(k, left, right, algebra);
    else if (*classify) o = cmd_classify(load_code(code_path), code_path);
    else if (*modules) o = cmd_modules(load_code(code_path), code_path, chi, with_induce);
    else o = cmd_verify(suite, k, seed);
    out << o.report.dump(2) << "\n";
    if (o.exit_code == kVerificationFailure) err << "verification failed\n";
    return o.exit_code;
  } catch (const InternalError& e) {
    err << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace cosetvoa::cli
