#pragma once

// Schreier coset graph of a permutation triple: BFS transversal and Schreier
// generators of the stabilizer of the base point.

#include <string>
#include <vector>

#include "hecke/perm.hpp"
#include "hecke/ring.hpp"
#include "hecke/words.hpp"

namespace hecke {

/// Points are the darts 1..N; x-edges i -> i·sigma0, y-edges i -> i·sigma1.
struct CosetGraph {
  Perm x_action;
  Perm y_action;
  int n = 1;                   // order of the y relation
  bool free_product = false;   // white valencies differ
  std::vector<int> valencies;  // distinct y-cycle lengths, ascending
  Dart base = 1;
  std::vector<Word> transversal;  // transversal[i] maps base to i; slot 0 unused
  std::vector<Dart> bfs_order;

  std::size_t size() const noexcept { return x_action.degree(); }
  const Word& word_to(Dart point) const { return transversal.at(point); }
};

/// Level-synchronous BFS from base over the letters x, y, y^-1 (in that
/// order), expanding each level in increasing point order.
CosetGraph build_transversal(const PermTriple& t, Dart base = 1);

struct GeneratorSet {
  std::vector<Word> words;
  std::vector<Mat2> matrices;  // empty for free-product coset graphs
  std::size_t index = 0;
};

/// Words t_i · s · t_{i·s}^-1 for s in {x, y}, reduced, without the identity,
/// duplicates, or inverses of earlier words.
GeneratorSet schreier_generators(const CosetGraph& cg);

/// Membership of w in the stabilizer of the base point.
bool contains(const CosetGraph& cg, const Word& w);

/// Graphviz rendering: y-cycles as directed polygons, x-edges double headed.
std::string coset_graph_to_dot(const CosetGraph& cg);

}  // namespace hecke
