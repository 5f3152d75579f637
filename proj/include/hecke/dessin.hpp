#pragma once

// Clean dessins: planar rotation graphs, the bivalent-black dessin built from
// them, the coset-graph view, orientation flips and vertex types.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/perm.hpp"
#include "hecke/schreier.hpp"

namespace hecke {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertices with counter-clockwise lists of dart-end ids; every dart-end
/// appears in exactly one rotation and one edge.
struct RotationGraph {
  struct Vertex {
    std::string name;
    std::vector<Dart> ends;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<Dart, Dart>> edges;

  /// Throws GraphError on loops, disconnection or malformed rotation data.
  void validate() const;
};

class CleanDessin {
 public:
  /// Hecke index n when every white valency divides n (n >= 3); otherwise a
  /// free-product dessin. An explicit n must satisfy sigma1^n = 1.
  static CleanDessin from_perms(Perm sigma0, Perm sigma1, std::optional<int> n = std::nullopt);

  const Perm& sigma0() const noexcept { return sigma0_; }
  const Perm& sigma1() const noexcept { return sigma1_; }
  std::size_t degree() const noexcept { return sigma0_.degree(); }
  /// White valencies, one per sigma1 cycle, in cycle order.
  std::vector<int> valencies() const;
  /// Distinct white valencies, ascending.
  std::vector<int> n_list() const;
  std::optional<int> hecke_n() const noexcept { return hecke_n_; }
  bool is_free_product() const noexcept { return !hecke_n_; }
  /// Relation order used for words: n, or the lcm of valencies.
  int relation_order() const noexcept { return order_; }
  PermTriple triple() const;

  friend bool operator==(const CleanDessin&, const CleanDessin&) = default;

 private:
  Perm sigma0_, sigma1_;
  std::optional<int> hecke_n_;
  int order_ = 1;
};

/// Darts are the edge-ends, relabelled 1..2E in increasing id order.
CleanDessin clean_dessin_from_graph(const RotationGraph& g);

/// Coset graph with base point `base`; free-product dessins are flagged.
CosetGraph dessin_to_coset_graph(const CleanDessin& d, Dart base = 1);
CleanDessin coset_graph_to_dessin(const CosetGraph& cg);

/// Reverses the sigma1 cycle with the given 0-based index (cycles ordered by
/// smallest dart, fixed points included).
CleanDessin flip_orientation(const CleanDessin& d, std::size_t cycle_index);
/// Reverses the sigma1 cycle containing the dart.
CleanDessin flip_at_dart(const CleanDessin& d, Dart dart);

/// Face permutation: next dart along a face is (i·sigma0)·sigma1^-1.
Perm face_permutation(const CleanDessin& d);

using VertexType = std::vector<int>;

/// Face sizes around each white vertex, in rotation order, one entry per
/// sigma1 cycle. Throws GraphError on a vertex of degree <= 2.
std::vector<VertexType> vertex_types(const CleanDessin& d);
std::vector<VertexType> vertex_types(const RotationGraph& g);

/// Lexicographically smallest rotation of the type or its reversal.
VertexType canonical_type(const VertexType& t);
bool types_equivalent(const VertexType& a, const VertexType& b);
bool is_archimedean(const CleanDessin& d);
bool is_archimedean(const RotationGraph& g);

/// True when some relabelling of darts carries one dessin to the other;
/// with `allow_mirror` the reflected dessin (sigma1 inverted) also counts.
bool is_isomorphic(const CleanDessin& a, const CleanDessin& b, bool allow_mirror = false);

/// {"n", "sigma0", "sigma1"} with cycles as arrays or text, or
/// {"rotation", "edges"}. "composition": "left" marks listings whose words
/// act right-to-left; they are stored with sigma1 inverted so that every
/// dessin here uses the right action.
CleanDessin dessin_from_json(const nlohmann::json& j);
RotationGraph rotation_graph_from_json(const nlohmann::json& j);
nlohmann::json dessin_to_json(const CleanDessin& d);

/// White vertices as circles, black edge-midpoints as points.
std::string dessin_to_dot(const CleanDessin& d);

}  // namespace hecke
