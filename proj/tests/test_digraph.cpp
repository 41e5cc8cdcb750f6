#include <sstream>

#include "doctest.h"

#include "corpus.hpp"
#include "hikeforge/digraph.hpp"

using namespace hikeforge;

TEST_SUITE_BEGIN("digraph");

TEST_CASE("load arc form") {
  const Digraph g = digraph_from_json_text(R"({"n":2, "arcs":[[0,1],[1,0]]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.arc_count() == 2);
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(1, 0));
  CHECK(g.is_bidirected());
}

TEST_CASE("undirected form expands to two arcs per edge") {
  const Digraph g = digraph_from_json_text(
      R"({"n":5, "undirected":true, "edges":[[0,2],[0,3],[1,3],[1,4],[2,4]]})");
  CHECK(g.vertex_count() == 5);
  CHECK(g.arc_count() == 10);
  CHECK(g.is_bidirected());
  CHECK(g.weakly_connected());
}

TEST_CASE("self-loop permitted") {
  const Digraph g = digraph_from_json_text(R"({"n":1, "arcs":[[0,0]]})");
  CHECK(g.arc_count() == 1);
  CHECK(g.has_self_loop());
}

TEST_CASE("rejects malformed input with position info") {
  CHECK_THROWS_WITH_AS(digraph_from_json_text(R"({"n":2, "arcs":[[0,1],[0,7]]})"),
                       doctest::Contains("arcs[1]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(digraph_from_json_text(R"({"n":2, "arcs":[[0,1],[0,1]]})"),
                       doctest::Contains("duplicate arc"), std::invalid_argument);
  CHECK_THROWS_AS(digraph_from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(digraph_from_json_text(R"({"arcs":[]})"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(digraph_from_json_text(R"({"n":2, "arcs":[[0]]})"),
                       doctest::Contains("arcs[0]"), std::invalid_argument);
}

TEST_CASE("load-serialize-load is the identity on canonical form") {
  for (const Digraph& g : corpus::acceptance_digraphs()) {
    const Digraph again = digraph_from_json_text(digraph_to_json(g));
    CHECK(again == g);
  }
}

TEST_CASE("simple graph basics") {
  SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.connected());
  CHECK(g.degree(1) == 2);
  CHECK_FALSE(g.is_complete());
  CHECK(g.complement().has_edge(0, 3));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);

  const Digraph d = g.bidirected();
  CHECK(d.arc_count() == 6);
  CHECK(underlying_graph(d) == g);
}

TEST_CASE("simple graph json round trip") {
  const SimpleGraph g = corpus::cycle_graph(5);
  CHECK(simple_graph_from_json_text(simple_graph_to_json(g)) == g);
}

TEST_SUITE_END();
