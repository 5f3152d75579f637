#include <doctest.h>

#include <random>
#include <tuple>

#include "hecke/catalog.hpp"
#include "hecke/dessin.hpp"
#include "hecke/rewrite.hpp"
#include "hecke/schreier.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace hecke;
using th::mat;

TEST_CASE("simple decompositions") {
  CHECK(word_from_matrix(hecke_generators(HeckeIndex(3)).S) == Word::x(3));
  CHECK(word_from_matrix(mat(3, "1", "1", "0", "1")) == Word::x(3) * Word::y(3, 1));
  CHECK(word_from_matrix(Mat2::identity(HeckeIndex(5))).empty());
  for (int n = 3; n <= 8; ++n) {
    const auto g = hecke_generators(HeckeIndex(n));
    CHECK(eval_matrix(word_from_matrix(g.y)) == g.y);
    CHECK(eval_matrix(word_from_matrix(g.T)) == g.T);
  }
}

TEST_CASE("published generators rewrite into the stabilizer") {
  const auto M = mat(3, "-3", "2", "-8", "5");
  const Word w = word_from_matrix(M);
  CHECK(eval_matrix(w) == M);
  CHECK(contains(dessin_to_coset_graph(get_fixture("gamma0-8").dessin), w));

  const auto O = mat(4, "-7", "-3λ", "6λ", "5");
  const Word wo = word_from_matrix(O);
  CHECK(eval_matrix(wo) == O);
  CHECK(contains(dessin_to_coset_graph(get_solid("octahedron").dessin()), wo));
}

TEST_CASE("round trip on random words") {
  std::mt19937_64 rng(2024);
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    for (int t = 0; t < 1000; ++t) {
      const Word w = oracle::random_word(rng, n, 12);
      const Mat2 M = eval_matrix(w);
      const Word r = word_from_matrix(M);
      REQUIRE(eval_matrix(r) == M);
      // H_n is a free product, so normal forms are unique
      REQUIRE(r == w);
    }
  }
}

TEST_CASE("long words and larger n") {
  std::mt19937_64 rng(77);
  for (int n = 3; n <= 10; ++n)
    for (int t = 0; t < 50; ++t) {
      const Word w = oracle::random_word(rng, n, 60);
      REQUIRE(word_from_matrix(eval_matrix(w)) == w);
    }
}

TEST_CASE("every integer matrix of determinant one decomposes for n = 3") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-2000, 2000);
  int done = 0;
  while (done < 300) {
    const long a = dist(rng), c = dist(rng);
    // extended Euclid for b, d with ad - bc = 1
    long g0 = a, g1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (g1 != 0) {
      const long q = g0 / g1;
      std::tie(g0, g1) = std::pair{g1, g0 - q * g1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (g0 != 1 && g0 != -1) continue;
    // a*s0 + c*t0 = g0, so d = s0*g0, b = -t0*g0
    const HeckeIndex h(3);
    const Mat2 M(AlgebraicInt(h, a), AlgebraicInt(h, -t0 * g0), AlgebraicInt(h, c), AlgebraicInt(h, s0 * g0));
    CHECK(eval_matrix(word_from_matrix(M)) == M);
    ++done;
  }
}

TEST_CASE("matrices outside the Hecke group are reported") {
  auto kind = [](const Mat2& M, RewriteOptions o = {}) {
    try {
      word_from_matrix(M, o);
    } catch (const RewriteError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  // [[1,1],[0,1]] has no λ in the upper-right entry for n = 4
  CHECK(kind(mat(4, "1", "1", "0", "1")) == static_cast<int>(RewriteError::Kind::ResidueNotUnit));
  CHECK(kind(mat(5, "1", "1", "0", "1")) == static_cast<int>(RewriteError::Kind::ResidueNotUnit));
  // [[1,0],[2,1]] in Z[√2]: not in H_4
  CHECK(kind(mat(4, "1", "0", "2", "1")) != -1);
  // a one-step budget is too small for a long word
  std::mt19937_64 rng(3);
  Word w = oracle::random_word(rng, 3, 40);
  while (w.size() < 30) w = oracle::random_word(rng, 3, 40);
  CHECK(kind(eval_matrix(w), RewriteOptions{1}) == static_cast<int>(RewriteError::Kind::NonTermination));
  CHECK(rewrite_budget(eval_matrix(w)) >= 64);
}
