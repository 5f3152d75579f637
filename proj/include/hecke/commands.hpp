#pragma once

// Subcommands behind the hecke-dessin executable.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/catalog.hpp"
#include "hecke/report.hpp"

namespace hecke {

struct ListFilter {
  bool trivalent_only = false;
  std::optional<int> hecke;
};

struct ListRow {
  std::string category;
  std::string name;
  std::string display_name;
  std::string V, F, E;  // strings so the prism templates can read "2n"
  std::string vertex_type;
  std::string symmetry;
  bool trivalent = false;
  int hecke_n = 3;
  bool is_template = false;
};

std::vector<ListRow> cmd_list(const ListFilter& filter = {});

struct ResolvedInput {
  std::string descriptor;
  CleanDessin dessin;
  std::vector<Mat2> published;  // generator matrices shipped with the input
};

/// Solid name, fixture name, JSON file path, "prism:n" or "antiprism:n".
ResolvedInput resolve_input(std::string_view text);

AnalysisReport cmd_analyze(std::string_view input, const AnalysisOptions& opts = {});
/// cycle_index is 0-based over the canonical sigma1 cycles.
AnalysisReport cmd_flip(std::string_view input, std::size_t cycle_index, const AnalysisOptions& opts = {});

struct MembershipVerdict {
  std::string matrix;
  std::optional<std::string> word;  // nullopt when the rewrite failed
  bool member = false;
  std::string error;
};

std::vector<MembershipVerdict> cmd_verify(const CleanDessin& d, const std::vector<Mat2>& matrices, Dart base = 1);
std::vector<MembershipVerdict> cmd_verify(std::string_view input, Dart base = 1);

/// A list of matrices, or {"matrices": [...]}; entries are integers,
/// coefficient vectors in λ, or polynomial strings.
std::vector<Mat2> read_matrices(const nlohmann::json& j, HeckeIndex n);

/// Full command line; returns the process exit code (0 ok, 1 usage, 2 computation).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke
