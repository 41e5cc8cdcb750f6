#pragma once

#include "hikeforge/digraph.hpp"

namespace hikeforge::fixtures {

/// Bidirected 5-cycle in its crossed labeling: edges {0,2},{0,3},{1,3},
/// {1,4},{2,4}. Seven primes: five backtracks and the two pentagon
/// orientations.
Digraph crossed_pentagon();

/// Four vertices: a backtrack on {0,1} and a directed triangle 1->2->3->1.
/// The two primes intersect at vertex 1, so their two products are distinct
/// hikes with different von Mangoldt values (3 and 2).
Digraph backtrack_triangle();

/// Dependence graph of the worked reconstruction example (8 primes,
/// 17 edges) and the 6-vertex graph it reconstructs to.
SimpleGraph reconstruction_demo_gamma();
SimpleGraph reconstruction_demo_root();

/// A strongly connected cospectral pair produced by sliding a cycle
/// intersection: same hike structure, same char/perm polynomials,
/// non-isomorphic.
Digraph slide_pair_left();
Digraph slide_pair_right();

/// A loop+backtrack graph and its 4-vertex path-sum expansion: different
/// hike structures but identical non-zero spectrum (golden-ratio pair).
Digraph expand_demo_small();
Digraph expand_demo_large();

}  // namespace hikeforge::fixtures
