#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "errors.hpp"
#include "residue.hpp"

namespace cosetvoa {

/// Parsed form of { "k": int, "length": int, "generators": [[int,...],...] }.
struct CodeSpec {
  std::int64_t k = 0;
  std::size_t length = 0;
  std::vector<ResidueVector> generators;
};

inline CodeSpec parse_code_spec(const nlohmann::json& j) {
  require(j.is_object(), "code file: top level must be an object");
  for (const char* key : {"k", "length", "generators"})
    require(j.contains(key), std::string("code file: missing field '") + key + "'");
  require(j["k"].is_number_integer(), "code file: 'k' must be an integer");
  require(j["length"].is_number_integer(), "code file: 'length' must be an integer");
  require(j["generators"].is_array(), "code file: 'generators' must be an array");

  CodeSpec spec;
  spec.k = j["k"].get<std::int64_t>();
  const auto length = j["length"].get<std::int64_t>();
  require(spec.k >= 2, "code file: k must be >= 2");
  require(length >= 1, "code file: length must be >= 1");
  spec.length = static_cast<std::size_t>(length);

  for (const auto& g : j["generators"]) {
    require(g.is_array() && g.size() == spec.length, "code file: each generator must be an array of 'length' integers");
    std::vector<std::int64_t> entries;
    for (const auto& e : g) {
      require(e.is_number_integer(), "code file: generator entries must be integers");
      entries.push_back(e.get<std::int64_t>());
    }
    spec.generators.emplace_back(2 * spec.k, entries);
  }
  return spec;
}

inline CodeSpec parse_code_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("code file: malformed JSON: ") + e.what());
  }
  return parse_code_spec(j);
}

inline CodeSpec load_code_spec(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "code file: cannot open '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_code_spec(text);
}

inline Code load_code(const std::string& path, std::size_t max_size = kDefaultCodeLimit) {
  const CodeSpec spec = load_code_spec(path);
  return Code::enumerate(spec.k, spec.length, spec.generators, max_size);
}

inline nlohmann::json to_json(const CodeSpec& spec) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : spec.generators) gens.push_back(g.entries());
  return {{"k", spec.k}, {"length", spec.length}, {"generators", gens}};
}

}  // namespace cosetvoa
