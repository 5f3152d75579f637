#pragma once

// End-to-end analysis of a dessin and its JSON/text rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/congruence.hpp"
#include "hecke/dessin.hpp"

namespace hecke {

struct AnalysisOptions {
  Dart base = 1;
  std::vector<std::int64_t> moduli;  // extra moduli for containment checks
  std::uint64_t max_closure = kDefaultClosureCap;
  bool congruence = true;
};

struct GeneratorEntry {
  std::string word;
  std::vector<std::vector<std::string>> matrix;  // empty for free-product dessins

  friend bool operator==(const GeneratorEntry&, const GeneratorEntry&) = default;
};

struct AnalysisReport {
  std::string input;
  std::size_t degree = 0;
  std::optional<int> n;  // Hecke index; nullopt for free-product dessins
  bool free_product = false;
  std::vector<int> valencies;  // distinct white valencies
  std::string sigma0, sigma1;
  Dart base = 1;
  std::size_t index = 0;
  int genus = 0;
  std::uint64_t cusp_width_lcm = 1;
  std::optional<std::uint64_t> level;  // n = 3 only
  std::vector<GeneratorEntry> generators;
  std::optional<CongruenceReport> congruence;
  std::int64_t timing_us = 0;
  std::vector<std::string> notes;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs dessin -> triple -> coset graph -> generators -> congruence.
AnalysisReport analyze(const CleanDessin& d, const std::string& input, const AnalysisOptions& opts = {});

nlohmann::json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const AnalysisReport& r);

/// n names the Hecke family in the "name" fields.
nlohmann::json congruence_to_json(const CongruenceReport& c, int n = 3);
CongruenceReport congruence_from_json(const nlohmann::json& j);

}  // namespace hecke
