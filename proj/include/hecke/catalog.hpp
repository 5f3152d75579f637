#pragma once

// Built-in data: the Archimedean solids with their permutation listings and
// published generator matrices, a few fixtures, and the prism/antiprism
// families.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/dessin.hpp"
#include "hecke/perm.hpp"
#include "hecke/ring.hpp"

namespace hecke {

class UnknownName : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Category { Platonic, Series, Exceptional };  // I, II, III

struct Classification {
  std::string family;  // "principal": Γ(level)
  int level = 0;
};

struct SolidRecord {
  std::string name;  // kebab-case key
  std::string display_name;
  Category category = Category::Exceptional;
  int V = 0, F = 0, E = 0;
  std::vector<int> vertex_type;
  std::string symmetry;
  bool trivalent = false;
  int hecke_n = 3;
  std::string sigma0_text, sigma1_text;  // empty when given as a rotation graph
  std::optional<RotationGraph> graph;
  std::vector<std::size_t> reversed_sigma1_cycles;  // 1-based, orientation repairs
  std::vector<Mat2> published_generators;
  std::optional<Classification> classification;

  /// Dessin with any listed orientation repairs applied.
  CleanDessin dessin() const;
  /// Dessin exactly as listed.
  CleanDessin verbatim_dessin() const;
};

const std::vector<SolidRecord>& list_solids();
/// Case-insensitive; spaces and underscores match hyphens. Throws UnknownName.
const SolidRecord& get_solid(std::string_view name);

struct PermPair {
  Perm sigma0;
  Perm sigma1;
};

/// Requires n >= 3; degree 6n (prism) or 8n (antiprism).
PermPair prism(int n);
PermPair antiprism(int n);

struct Fixture {
  std::string name;
  CleanDessin dessin;
  std::vector<Mat2> generators;
};

const std::vector<Fixture>& list_fixtures();
const Fixture& get_fixture(std::string_view name);

/// Matrix from [[a, b], [c, d]] with each entry a coefficient vector in λ.
Mat2 matrix_from_json(const nlohmann::json& j, HeckeIndex n);
nlohmann::json matrix_to_json(const Mat2& M);

std::string to_string(Category c);

namespace detail {
struct EmbeddedDocument {
  const char* kind;  // "solids" or "fixtures"
  const char* name;
  const char* text;
};
const std::vector<EmbeddedDocument>& embedded_documents();
}  // namespace detail

}  // namespace hecke
