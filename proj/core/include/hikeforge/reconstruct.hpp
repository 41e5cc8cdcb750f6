#pragma once

#include <string>
#include <vector>

#include "hikeforge/digraph.hpp"
#include "hikeforge/primes.hpp"
#include "hikeforge/report.hpp"

namespace hikeforge {

/// Maximal set of gamma-vertices that are pairwise adjacent with identical
/// closed neighborhoods (a clique that is also a module).
struct EquivalenceClass {
  std::vector<int> members;
  bool clique_neighborhood = false;  // N(c) induces a clique
  std::vector<int> common_neighbors;  // T(C), neighbors shared by all members
};

/// Hike dependence graph of a connected, loop-free, bidirected digraph:
/// vertices are the primes, edges join vertex-intersecting primes.
SimpleGraph dependence_graph(const Digraph& g);

/// Partition of gamma's vertices by closed-neighborhood equality.
std::vector<EquivalenceClass> equivalence_classes(const SimpleGraph& gamma);

struct BacktrackIdentification {
  bool ambiguous_k5 = false;  // gamma = K5: two non-isomorphic sources exist
  std::vector<int> backtracks;
  std::vector<EquivalenceClass> classes;
};

/// Marks which gamma-vertices are backtracks, per class:
///  - clique neighborhood: all members;
///  - otherwise odd size: one member (lowest index);
///  - size 4: two members iff some common neighbor has gamma-degree
///    exactly 4;
///  - even size != 4: none.
/// Representative choice within a class is immaterial: members share their
/// closed neighborhoods, so any choice induces the same subgraph.
BacktrackIdentification identify_backtracks(const SimpleGraph& gamma);

struct LineGraphInverse {
  bool ok = false;
  SimpleGraph root;
  std::string witness;  // failure evidence when !ok
};

/// Root graph of a line graph via a Krausz partition: edges split into
/// cliques with every vertex inside at most two of them; cliques and
/// pendant attachments become root vertices, lg-vertices become root edges.
/// A triangle is the one connected line graph with two non-isomorphic
/// roots; callers resolve it from context.
LineGraphInverse line_graph_inverse(const SimpleGraph& lg);

struct ReconstructionResult {
  enum class Outcome { Unique, Ambiguous, Failed };
  Outcome outcome = Outcome::Failed;
  std::vector<Digraph> graphs;  // bidirected; two entries when Ambiguous
  std::vector<SimpleGraph> roots;
  std::string reason;
  std::vector<EquivalenceClass> classes;
  std::vector<int> backtracks;
};

/// Rebuild the undirected graph (as its bidirected digraph) from its hike
/// dependence graph alone. gamma = K5 is genuinely ambiguous between the
/// triangle and the 5-star.
ReconstructionResult reconstruct(const SimpleGraph& gamma);

/// Rebuild from gamma plus the per-prime length labels; no K5 exception.
/// Backtracks are the length-2 primes; the triangle/3-star line-graph
/// ambiguity is resolved by matching the candidate's forward map against
/// the input.
ReconstructionResult reconstruct_with_lengths(const SimpleGraph& gamma,
                                              const std::vector<int>& lengths);

/// Exact backtracking isomorphism on undirected graphs (<= 12 vertices),
/// with degree/neighborhood-degree pruning.
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
/// Variant requiring a vertex-label-preserving isomorphism.
bool graphs_isomorphic_labeled(const SimpleGraph& a, const SimpleGraph& b,
                               const std::vector<int>& la, const std::vector<int>& lb);
/// Directed variant with in/out-degree pruning.
bool digraphs_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace hikeforge
