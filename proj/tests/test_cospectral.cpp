#include <random>

#include "doctest.h"

#include "corpus.hpp"
#include "hikeforge/cospectral.hpp"
#include "hikeforge/fixtures.hpp"
#include "hikeforge/reconstruct.hpp"

using namespace hikeforge;

TEST_SUITE_BEGIN("cospectral");

TEST_CASE("same non-zero spectrum") {
  CHECK(same_nonzero_spectrum(fixtures::expand_demo_small(), fixtures::expand_demo_large()));
  const Digraph k3 = corpus::complete_graph(3).bidirected();
  CHECK(same_nonzero_spectrum(k3, k3));
  CHECK_FALSE(same_nonzero_spectrum(corpus::self_loop_vertex(), Digraph(1, {})));
}

TEST_CASE("hike structure comparison") {
  CHECK(hike_structure_equal(fixtures::slide_pair_left(), fixtures::slide_pair_right()));
  // the expansion pair differs: 2 primes vs 3
  CHECK(hike_structure(fixtures::expand_demo_small()).prime_count == 2);
  CHECK(hike_structure(fixtures::expand_demo_large()).prime_count == 3);
  CHECK_FALSE(hike_structure_equal(fixtures::expand_demo_small(),
                                   fixtures::expand_demo_large()));
  // isomorphic digraphs trivially share their structure
  CHECK(hike_structure_equal(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}),
                             Digraph(3, {{2, 1}, {1, 0}, {0, 2}})));
}

TEST_CASE("equal hike structure forces an equal char polynomial") {
  CHECK(char_poly(fixtures::slide_pair_left()) == char_poly(fixtures::slide_pair_right()));
  CHECK(fingerprint(fixtures::slide_pair_left()) == fingerprint(fixtures::slide_pair_right()));
  CHECK_FALSE(digraphs_isomorphic(fixtures::slide_pair_left(), fixtures::slide_pair_right()));
}

TEST_CASE("expansion reproduces the published 4-vertex partner") {
  const Digraph g = fixtures::expand_demo_small();
  const PrimeCatalog cat = enumerate_primes(g);
  int loop = -1, backtrack = -1;
  for (int i = 0; i < cat.size(); ++i) (cat.prime_length(i) == 1 ? loop : backtrack) = i;
  const Digraph expanded = expand_pathsum(g, cat.primes[loop], cat.primes[backtrack], 1);
  CHECK(expanded.vertex_count() == 4);
  CHECK(digraphs_isomorphic(expanded, fixtures::expand_demo_large()));
  CHECK(same_nonzero_spectrum(g, expanded));
}

TEST_CASE("figure-eight expansion: 2+2 gives six vertices") {
  // two backtracks sharing vertex 0
  const Digraph eight(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});
  const PrimeCatalog cat = enumerate_primes(eight);
  REQUIRE(cat.size() == 2);
  const Digraph expanded = expand_pathsum(eight, cat.primes[0], cat.primes[1], 0);
  CHECK(expanded.vertex_count() == 6);
  CHECK(adjacency_trace_powers(eight, 6) == adjacency_trace_powers(expanded, 6));
  CHECK(char_poly(eight) == char_poly(expanded));
}

TEST_CASE("expansion preserves the spectrum on random pendant figure-eights") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 4);
  for (int iter = 0; iter < 40; ++iter) {
    const int l1 = len(rng), l2 = len(rng);
    // build two cycles of lengths l1, l2 sharing only vertex 0
    std::vector<Arc> arcs;
    int next = 1;
    auto add_cycle = [&](int l) {
      if (l == 1) {
        arcs.push_back({0, 0});
        return;
      }
      std::vector<int> ring{0};
      for (int i = 0; i < l - 1; ++i) ring.push_back(next++);
      for (std::size_t i = 0; i < ring.size(); ++i)
        arcs.push_back({ring[i], ring[(i + 1) % ring.size()]});
    };
    add_cycle(l1);
    if (l1 == 1 && l2 == 1) continue;  // two loops at one vertex collide
    add_cycle(l2);
    const Digraph g(next, arcs);
    const PrimeCatalog cat = enumerate_primes(g);
    REQUIRE(cat.size() == 2);
    const Prime& c1 = cat.prime_length(0) == l1 ? cat.primes[0] : cat.primes[1];
    const Prime& c2 = cat.prime_length(0) == l1 ? cat.primes[1] : cat.primes[0];
    const Digraph expanded = expand_pathsum(g, c1, c2, 0);
    CHECK(expanded.vertex_count() == g.vertex_count() + l1 + l2 - 1);
    CHECK(same_nonzero_spectrum(g, expanded));
    CHECK(char_poly(g) == char_poly(expanded));
  }
}

TEST_CASE("expansion rejects non-local configurations") {
  const Digraph g = fixtures::slide_pair_left();  // cycles with extra structure
  const PrimeCatalog cat = enumerate_primes(g);
  // triangle {0,1,2} and quadrilateral {1,2,3,4} share two vertices
  int tri = -1, quad = -1;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat.prime_length(i) == 3) tri = i;
    if (cat.prime_length(i) == 4) quad = i;
  }
  CHECK_THROWS_AS(expand_pathsum(g, cat.primes[tri], cat.primes[quad], 1),
                  std::invalid_argument);

  // backtrack {4,5} and quadrilateral share exactly vertex 4, but vertex 4
  // carries arcs outside the two cycles
  int bt = -1;
  for (int i = 0; i < cat.size(); ++i)
    if (cat.prime_length(i) == 2) bt = i;
  CHECK_THROWS_AS(expand_pathsum(g, cat.primes[bt], cat.primes[quad], 4),
                  std::invalid_argument);
}

TEST_CASE("intersection slide check on the fixtures") {
  const CheckReport good =
      intersection_slide_check(fixtures::slide_pair_left(), fixtures::slide_pair_right());
  CHECK(good.pass);

  const CheckReport self =
      intersection_slide_check(fixtures::slide_pair_left(), fixtures::slide_pair_left());
  CHECK_FALSE(self.pass);
  for (const auto& [name, ok] : self.conditions)
    if (name == "non-isomorphic") CHECK_FALSE(ok);

  const CheckReport expansion =
      intersection_slide_check(fixtures::expand_demo_small(), fixtures::expand_demo_large());
  CHECK_FALSE(expansion.pass);
  for (const auto& [name, ok] : expansion.conditions) {
    if (name == "same vertex count") CHECK_FALSE(ok);
    if (name == "same non-zero spectrum") CHECK(ok);
  }
}

TEST_SUITE_END();
