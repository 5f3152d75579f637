#include <doctest.h>

#include <random>

#include "hecke/catalog.hpp"
#include "hecke/dessin.hpp"
#include "hecke/schreier.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace hecke;

namespace {

std::vector<CleanDessin> hecke_inputs() {
  std::vector<CleanDessin> out;
  for (const auto& s : list_solids()) out.push_back(s.dessin());
  for (const auto& f : list_fixtures()) out.push_back(f.dessin);
  for (int n = 3; n <= 8; ++n) {
    const auto p = prism(n);
    out.push_back(CleanDessin::from_perms(p.sigma0, p.sigma1));
  }
  return out;
}

}  // namespace

TEST_CASE("one-dart triple") {
  const CleanDessin d = CleanDessin::from_perms(Perm(1), Perm(1), 3);
  const CosetGraph cg = dessin_to_coset_graph(d);
  CHECK(cg.transversal.size() == 2);
  CHECK(cg.word_to(1).empty());
  const auto gens = schreier_generators(cg);
  CHECK(gens.index == 1);
  REQUIRE(gens.words.size() == 2);
  CHECK(gens.words[0] == Word::x(3));
  CHECK(gens.words[1] == Word::y(3, 1));
  CHECK(gens.matrices.size() == 2);
}

TEST_CASE("transversal words reach their points") {
  for (const auto& d : hecke_inputs()) {
    const CosetGraph cg = dessin_to_coset_graph(d);
    CHECK(cg.bfs_order.size() == d.degree());
    CHECK(cg.word_to(1).empty());
    for (Dart p = 1; p <= d.degree(); ++p) CHECK(act(1, cg.word_to(p), d.sigma0(), d.sigma1()) == p);
  }
  const auto g = dessin_to_coset_graph(get_fixture("gamma0-8").dessin);
  CHECK(g.size() == 12);
  CHECK(dessin_to_coset_graph(get_solid("octahedron").dessin()).size() == 24);
}

TEST_CASE("BFS transversal is geodesic and deterministic") {
  const CleanDessin d = get_solid("truncated-tetrahedron").dessin();
  const CosetGraph a = dessin_to_coset_graph(d), b = dessin_to_coset_graph(d);
  CHECK(a.transversal == b.transversal);
  // letter lengths never decrease along the BFS order
  std::size_t prev = 0;
  for (Dart p : a.bfs_order) {
    CHECK(a.word_to(p).letter_length() >= prev);
    prev = a.word_to(p).letter_length();
  }
}

TEST_CASE("generators fix the base point and generate the full stabilizer") {
  for (const auto& d : hecke_inputs()) {
    const CosetGraph cg = dessin_to_coset_graph(d);
    const auto gens = schreier_generators(cg);
    CHECK(gens.index == d.degree());
    CHECK(gens.matrices.size() == gens.words.size());
    for (std::size_t k = 0; k < gens.words.size(); ++k) {
      CHECK(contains(cg, gens.words[k]));
      CHECK(eval_matrix(gens.words[k]) == gens.matrices[k]);
    }
    // independent coset enumeration of the generated subgroup
    CHECK(oracle::coset_count(cg.n, gens.words) == d.degree());
  }
}

TEST_CASE("coset enumeration oracle sanity") {
  CHECK(oracle::coset_count(3, {Word::x(3), Word::y(3)}) == 1);
  CHECK(oracle::coset_count(4, {Word::x(4), Word::y(4, 2), Word::parse("y1.x.y3", 4)}) == 2);
  CHECK(oracle::coset_count(5, {Word::x(5), Word::y(5, 2)}) == 1);
}

TEST_CASE("free-product dessins give words but no matrices") {
  const CleanDessin d = CleanDessin::from_perms(parse_cycles("(1,4)(2,6)(3,7)(5,8)"), parse_cycles("(1,2,3)(4,5)", 8));
  const CosetGraph cg = dessin_to_coset_graph(d);
  const auto gens = schreier_generators(cg);
  CHECK(gens.matrices.empty());
  CHECK_FALSE(gens.words.empty());
  for (const auto& w : gens.words) CHECK(contains(cg, w));
}

TEST_CASE("membership examples") {
  const CosetGraph g = dessin_to_coset_graph(get_fixture("gamma0-8").dessin);
  CHECK(contains(g, Word(3)));
  CHECK(contains(g, Word::y(3, 2) * Word::x(3)));
  CHECK_FALSE(contains(g, Word::x(3)));
  CHECK_THROWS_AS(contains(g, Word::x(4)), std::invalid_argument);
}

TEST_CASE("generator matrices follow the expected congruence patterns") {
  for (const auto& M : schreier_generators(dessin_to_coset_graph(get_fixture("gamma0-8").dessin)).matrices)
    CHECK(reduce_mod(M, 8).lower_left_zero());
  for (const auto& M : schreier_generators(dessin_to_coset_graph(get_fixture("gamma0-8-flipped").dessin)).matrices)
    CHECK(reduce_mod(M, 5).is_pm_upper_unipotent());
  for (const auto& M : schreier_generators(dessin_to_coset_graph(get_solid("octahedron").dessin())).matrices)
    CHECK(reduce_mod(M, 3).is_pm_identity());
}

TEST_CASE("changing the base point conjugates the stabilizer") {
  for (const char* name : {"tetrahedron", "octahedron", "truncated-tetrahedron", "snub-cube"}) {
    const CleanDessin d = get_solid(name).dessin();
    const CosetGraph c1 = dessin_to_coset_graph(d, 1);
    for (Dart j : {Dart{2}, Dart{5}, static_cast<Dart>(d.degree())}) {
      const CosetGraph cj = dessin_to_coset_graph(d, j);
      const Word& t = c1.word_to(j);  // maps 1 to j
      for (const auto& w : schreier_generators(c1).words) CHECK(contains(cj, t.inverse() * w * t));
      for (const auto& w : schreier_generators(cj).words) CHECK(contains(c1, t * w * t.inverse()));
    }
  }
}

TEST_CASE("coset graph dot output") {
  const std::string dot = coset_graph_to_dot(dessin_to_coset_graph(get_fixture("gamma0-8").dessin));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("dir=both, color=blue") != std::string::npos);
}
