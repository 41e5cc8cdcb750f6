#include <map>
#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "hikeforge/fixtures.hpp"
#include "hikeforge/reconstruct.hpp"

using namespace hikeforge;

TEST_SUITE_BEGIN("reconstruct");

TEST_CASE("dependence graph of basic graphs") {
  // K3: all five primes pairwise intersect
  const SimpleGraph k3gamma = dependence_graph(corpus::complete_graph(3).bidirected());
  CHECK(k3gamma.vertex_count() == 5);
  CHECK(k3gamma.is_complete());

  // 3-star: the three backtracks meet at the hub
  const SimpleGraph stargamma = dependence_graph(corpus::star_graph(3).bidirected());
  CHECK(stargamma.vertex_count() == 3);
  CHECK(stargamma.is_complete());

  // single edge: one prime, no edges
  const SimpleGraph edgegamma = dependence_graph(corpus::path_graph(2).bidirected());
  CHECK(edgegamma.vertex_count() == 1);
  CHECK(edgegamma.edge_count() == 0);

  CHECK_THROWS_AS(dependence_graph(corpus::directed_cycle(3)), std::invalid_argument);
  CHECK_THROWS_AS(dependence_graph(Digraph(1, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("equivalence classes of the demo dependence graph") {
  const auto classes = equivalence_classes(fixtures::reconstruction_demo_gamma());
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2, 4});

  const auto k5 = equivalence_classes(corpus::complete_graph(5));
  REQUIRE(k5.size() == 1);
  CHECK(k5[0].members.size() == 5);

  const auto singletons = equivalence_classes(SimpleGraph(3));
  CHECK(singletons.size() == 3);
}

TEST_CASE("backtrack identification on the demo graph") {
  const auto id = identify_backtracks(fixtures::reconstruction_demo_gamma());
  CHECK_FALSE(id.ambiguous_k5);
  CHECK(id.backtracks == std::vector<int>{0, 1, 2, 3, 4, 7});
}

TEST_CASE("backtrack identification: corner cases") {
  CHECK(identify_backtracks(corpus::complete_graph(5)).ambiguous_k5);

  const auto k3 = identify_backtracks(corpus::complete_graph(3));
  CHECK(k3.backtracks == std::vector<int>{0, 1, 2});

  const auto single = identify_backtracks(SimpleGraph(1));
  CHECK(single.backtracks == std::vector<int>{0});
}

TEST_CASE("line graph inversion") {
  // a single vertex is the line graph of a single edge
  const auto p2 = line_graph_inverse(SimpleGraph(1));
  REQUIRE(p2.ok);
  CHECK(graphs_isomorphic(p2.root, corpus::path_graph(2)));

  // one edge is the line graph of the 3-path
  const auto p3 = line_graph_inverse(corpus::path_graph(2));
  REQUIRE(p3.ok);
  CHECK(graphs_isomorphic(p3.root, corpus::path_graph(3)));

  // the demo line graph (backtrack-induced subgraph) inverts to the demo root
  const SimpleGraph gamma = fixtures::reconstruction_demo_gamma();
  const auto id = identify_backtracks(gamma);
  const auto inv = line_graph_inverse(gamma.induced(id.backtracks));
  REQUIRE(inv.ok);
  CHECK(graphs_isomorphic(inv.root, fixtures::reconstruction_demo_root()));

  // K_{1,3} is not a line graph of anything
  const auto bad = line_graph_inverse(corpus::star_graph(3));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("reconstruct: exceptional and demo cases") {
  const auto amb = reconstruct(corpus::complete_graph(5));
  REQUIRE(amb.outcome == ReconstructionResult::Outcome::Ambiguous);
  REQUIRE(amb.roots.size() == 2);
  CHECK(graphs_isomorphic(amb.roots[0], corpus::complete_graph(3)));
  CHECK(graphs_isomorphic(amb.roots[1], corpus::star_graph(5)));

  const auto k13 = reconstruct(corpus::complete_graph(3));
  REQUIRE(k13.outcome == ReconstructionResult::Outcome::Unique);
  CHECK(graphs_isomorphic(k13.roots[0], corpus::star_graph(3)));

  const auto demo = reconstruct(fixtures::reconstruction_demo_gamma());
  REQUIRE(demo.outcome == ReconstructionResult::Outcome::Unique);
  CHECK(graphs_isomorphic(demo.roots[0], fixtures::reconstruction_demo_root()));

  CHECK(reconstruct(SimpleGraph(0)).outcome == ReconstructionResult::Outcome::Failed);
  SimpleGraph disconnected(4, {{0, 1}, {2, 3}});
  CHECK(reconstruct(disconnected).outcome == ReconstructionResult::Outcome::Failed);
}

TEST_CASE("reconstruct with lengths resolves the K5 ambiguity") {
  const SimpleGraph k5 = corpus::complete_graph(5);
  const auto tri = reconstruct_with_lengths(k5, {2, 2, 2, 3, 3});
  REQUIRE(tri.outcome == ReconstructionResult::Outcome::Unique);
  CHECK(graphs_isomorphic(tri.roots[0], corpus::complete_graph(3)));

  const auto star = reconstruct_with_lengths(k5, {2, 2, 2, 2, 2});
  REQUIRE(star.outcome == ReconstructionResult::Outcome::Unique);
  CHECK(graphs_isomorphic(star.roots[0], corpus::star_graph(5)));

  const auto p2 = reconstruct_with_lengths(SimpleGraph(1), {2});
  REQUIRE(p2.outcome == ReconstructionResult::Outcome::Unique);
  CHECK(graphs_isomorphic(p2.roots[0], corpus::path_graph(2)));

  // a labeled structure no graph realizes
  CHECK(reconstruct_with_lengths(k5, {2, 2, 2, 2, 3}).outcome ==
        ReconstructionResult::Outcome::Failed);
}

TEST_CASE("reconstruct_with_lengths agrees with reconstruct") {
  for (int n = 2; n <= 5; ++n) {
    for (const SimpleGraph& g : corpus::all_connected_graphs_up_to_iso(n)) {
      const PrimeCatalog cat = enumerate_primes(g.bidirected());
      const SimpleGraph gamma = cat.dependence_graph();
      std::vector<int> lengths(cat.size());
      for (int i = 0; i < cat.size(); ++i) lengths[i] = cat.prime_length(i);
      const auto with = reconstruct_with_lengths(gamma, lengths);
      REQUIRE(with.outcome == ReconstructionResult::Outcome::Unique);
      CHECK(graphs_isomorphic(with.roots[0], g));
      const auto without = reconstruct(gamma);
      if (without.outcome == ReconstructionResult::Outcome::Unique)
        CHECK(graphs_isomorphic(without.roots[0], with.roots[0]));
    }
  }
}

TEST_CASE("roundtrip on all connected graphs up to 5 vertices") {
  const SimpleGraph k3 = corpus::complete_graph(3);
  for (int n = 2; n <= 5; ++n) {
    for (const SimpleGraph& g : corpus::all_connected_graphs_up_to_iso(n)) {
      const SimpleGraph gamma = dependence_graph(g.bidirected());
      const auto res = reconstruct(gamma);
      if (graphs_isomorphic(g, k3)) {
        CHECK(res.outcome == ReconstructionResult::Outcome::Ambiguous);
        continue;
      }
      REQUIRE(res.outcome == ReconstructionResult::Outcome::Unique);
      CHECK(graphs_isomorphic(res.roots[0], g));
    }
  }
}

TEST_CASE("class parity matches the true backtrack count") {
  for (int n = 2; n <= 5; ++n) {
    for (const SimpleGraph& g : corpus::all_connected_graphs_up_to_iso(n)) {
      const PrimeCatalog cat = enumerate_primes(g.bidirected());
      const SimpleGraph gamma = cat.dependence_graph();
      for (const auto& c : equivalence_classes(gamma)) {
        int true_backtracks = 0;
        for (int v : c.members) true_backtracks += cat.prime_length(v) == 2;
        CHECK(true_backtracks % 2 == static_cast<int>(c.members.size()) % 2);
        // clique-neighborhood classes consist of backtracks only
        // (guaranteed away from the K5 exception)
        if (c.clique_neighborhood && !(gamma.vertex_count() == 5 && gamma.is_complete()))
          CHECK(true_backtracks == static_cast<int>(c.members.size()));
      }
    }
  }
}

TEST_CASE("isomorphism tests") {
  const SimpleGraph c5 = corpus::cycle_graph(5);
  CHECK(graphs_isomorphic(c5, c5));
  CHECK_FALSE(graphs_isomorphic(corpus::complete_graph(3), corpus::star_graph(3)));
  // the 5-cycle is self-complementary
  CHECK(graphs_isomorphic(c5, c5.complement()));
  CHECK_THROWS_AS(graphs_isomorphic(SimpleGraph(13), SimpleGraph(13)), std::length_error);

  CHECK(digraphs_isomorphic(corpus::directed_cycle(4), corpus::directed_cycle(4)));
  CHECK_FALSE(digraphs_isomorphic(corpus::directed_cycle(3),
                                  corpus::complete_graph(3).bidirected()));
  // relabeled copy
  CHECK(digraphs_isomorphic(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}),
                            Digraph(3, {{2, 1}, {1, 0}, {0, 2}})));
}

TEST_SUITE_END();
