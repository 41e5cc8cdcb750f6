#include "doctest.h"

#include "corpus.hpp"
#include "hikeforge/fixtures.hpp"
#include "hikeforge/identities.hpp"
#include "hikeforge/multiseries.hpp"

using namespace hikeforge;

TEST_SUITE_BEGIN("identities");

TEST_CASE("number-theoretic mobius") {
  CHECK(mobius_nat(1) == 1);
  CHECK(mobius_nat(2) == -1);
  CHECK(mobius_nat(4) == 0);
  CHECK(mobius_nat(6) == 1);
  CHECK(mobius_nat(30) == -1);
  CHECK(divisors_nat(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("det-mobius: pentagon coefficients") {
  const Digraph g = fixtures::crossed_pentagon();
  CHECK(char_poly(g) == IntPoly(std::vector<Int>{1, 0, -5, 0, 5, -2}));
  CHECK(check_det_mobius(g, 10).pass);
}

TEST_CASE("det-mobius: acyclic and golden-ratio graphs") {
  CHECK(char_poly(Digraph(4, {{0, 1}, {1, 2}, {2, 3}})) == IntPoly::one());
  CHECK(check_det_mobius(Digraph(4, {{0, 1}, {1, 2}, {2, 3}}), 6).pass);
  CHECK(check_det_mobius(fixtures::expand_demo_small(), 6).pass);
  CHECK(char_poly(fixtures::expand_demo_small()) == IntPoly(std::vector<Int>{1, -1, -1}));
}

TEST_CASE("det-mobius on six-vertex graphs") {
  CHECK(check_det_mobius(fixtures::slide_pair_left(), 6).pass);
  CHECK(check_det_mobius(fixtures::slide_pair_right(), 6).pass);
  CHECK(check_det_mobius(corpus::complete_graph(6).bidirected(), 6).pass);
}

TEST_CASE("perm-liouville: named examples") {
  CHECK(check_perm_liouville(corpus::self_loop_vertex(), 8).pass);
  CHECK(check_perm_liouville(corpus::backtrack_pair(), 8).pass);
  CHECK(check_perm_liouville(corpus::complete_graph(3).bidirected(), 6).pass);
}

TEST_CASE("macmahon: named examples") {
  CHECK(check_macmahon(corpus::self_loop_vertex(), 6).pass);
  CHECK(check_macmahon(corpus::backtrack_pair(), 6).pass);
  CHECK(check_macmahon(corpus::complete_graph(3).bidirected(), 4).pass);
  CHECK_THROWS_AS(check_macmahon(Digraph(9, {}), 4), std::length_error);
}

TEST_CASE("macmahon: single loop inverts to the geometric series") {
  const MultiSeries det = weighted_adjacency_determinant(corpus::self_loop_vertex(), 5);
  const MultiSeries inv = det.inverse();
  for (int k = 0; k <= 5; ++k) CHECK(inv.coeff({k}) == 1);
}

TEST_CASE("trace-mangoldt aggregation") {
  CHECK(check_trace_mangoldt(fixtures::backtrack_triangle(), 6).pass);
  CHECK(check_trace_mangoldt(corpus::complete_graph(3).bidirected(), 6).pass);
  CHECK(check_trace_mangoldt(corpus::self_loop_vertex(), 6).pass);
}

TEST_CASE("primitive orbit counts: frozen examples") {
  const OrbitCounts k3 = primitive_orbit_counts(corpus::complete_graph(3).bidirected(), 6);
  CHECK(k3.at(2) == 3);
  CHECK(k3.at(3) == 2);

  const OrbitCounts loop = primitive_orbit_counts(corpus::self_loop_vertex(), 5);
  CHECK(loop.at(1) == 1);
  for (int l = 2; l <= 5; ++l) CHECK(loop.at(l) == 0);

  const OrbitCounts c3 = primitive_orbit_counts(corpus::directed_cycle(3), 6);
  for (int l = 1; l <= 6; ++l) CHECK(c3.at(l) == (l == 3 ? 1 : 0));
}

TEST_CASE("orbit formula equals brute force") {
  CHECK(check_orbit_counts(corpus::complete_graph(3).bidirected(), 6).pass);
  CHECK(check_orbit_counts(fixtures::backtrack_triangle(), 6).pass);
  CHECK(check_orbit_counts(fixtures::expand_demo_small(), 6).pass);
}

TEST_CASE("ihara factorization") {
  CHECK(check_ihara_factorization(corpus::complete_graph(3).bidirected(), 8).pass);
  CHECK(check_ihara_factorization(corpus::path_graph(3).bidirected(), 8).pass);
  CHECK(check_ihara_factorization(corpus::cycle_graph(5).bidirected(), 8).pass);
  CHECK_THROWS_AS(check_ihara_factorization(corpus::directed_cycle(3), 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_ihara_factorization(corpus::self_loop_vertex(), 6),
                  std::invalid_argument);
}

TEST_CASE("backtrackless orbit oracle: K3 triangles and C5 pentagons") {
  const OrbitCounts k3 = brute_force_backtrackless_orbits(
      corpus::complete_graph(3).bidirected(), 4);
  CHECK(k3.at(1) == 0);
  CHECK(k3.at(2) == 0);
  CHECK(k3.at(3) == 2);  // the two triangle orientations

  const OrbitCounts c5 = brute_force_backtrackless_orbits(
      corpus::cycle_graph(5).bidirected(), 5);
  for (int l = 1; l <= 4; ++l) CHECK(c5.at(l) == 0);
  CHECK(c5.at(5) == 2);

  // a tree has no backtrackless closed walks at all
  const OrbitCounts tree = brute_force_backtrackless_orbits(
      corpus::path_graph(3).bidirected(), 6);
  for (int l = 1; l <= 6; ++l) CHECK(tree.at(l) == 0);
}

TEST_CASE("backtrackless counts: Hashimoto inversion vs brute force") {
  for (int n = 2; n <= 4; ++n) {
    for (const SimpleGraph& sg : corpus::all_connected_graphs_up_to_iso(n)) {
      const Digraph g = sg.bidirected();
      const int bound = 6;
      OrbitCounts formula;
      formula.counts.assign(bound + 1, 0);
      const std::vector<Int> traces = matrix_trace_powers(hashimoto_matrix(g), bound);
      for (int l = 1; l <= bound; ++l) {
        Int acc = 0;
        for (long long d : divisors_nat(l)) acc += mobius_nat(l / d) * traces[d - 1];
        REQUIRE(acc % l == 0);
        formula.counts[l] = acc / l;
      }
      CHECK(formula == brute_force_backtrackless_orbits(g, bound));
    }
  }
}

TEST_CASE("lambert resolvent identity") {
  const Digraph k3 = corpus::complete_graph(3).bidirected();
  CHECK(adjacency_trace_powers(k3, 6).back() == 66);
  CHECK(check_lambert_resolvent(k3, 8).pass);
  CHECK(check_lambert_resolvent(corpus::self_loop_vertex(), 8).pass);
  CHECK(check_lambert_resolvent(corpus::directed_cycle(3), 8).pass);
}

TEST_CASE("orbit and lambert checks are mutually inverse summations") {
  for (const Digraph& g : corpus::acceptance_digraphs()) {
    if (g.vertex_count() > 4) continue;
    CHECK(check_lambert_resolvent(g, 6).pass);
  }
}

TEST_SUITE_END();
