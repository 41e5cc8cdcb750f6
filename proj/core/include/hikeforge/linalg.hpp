#pragma once

#include <map>
#include <vector>

#include "hikeforge/digraph.hpp"
#include "hikeforge/numeric.hpp"
#include "hikeforge/poly.hpp"

namespace hikeforge {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix adjacency_matrix(const Digraph& g);
IntMatrix identity_matrix(int n);
IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b);
Int matrix_trace(const IntMatrix& a);

/// [Tr(M^1), ..., Tr(M^max_power)].
std::vector<Int> matrix_trace_powers(const IntMatrix& m, int max_power);
/// Entry k (1-based) = Tr(A^k) of the 0/1 adjacency matrix, exact.
std::vector<Int> adjacency_trace_powers(const Digraph& g, int max_power);

/// det(I - zM) via the Faddeev-LeVerrier recurrence; every division by k is
/// exact over the integers.
IntPoly char_poly(const IntMatrix& m);
/// det(I - zA), the reversed characteristic polynomial of g.
IntPoly char_poly(const Digraph& g);

/// perm(I + uA) via Ryser's formula with Gray-code column updates.
/// 2^n cost; refuses n beyond the cap.
IntPoly permanental_poly(const Digraph& g, int vertex_cap = 14);

/// Directed-edge adjacency matrix: rows/cols indexed by arcs (in Digraph
/// arc order); B[a][b] = 1 iff head(a) == tail(b) and b is not the reversal
/// of a. Requires a loop-free digraph.
IntMatrix hashimoto_matrix(const Digraph& g);

/// Permutation expansion of det(I - W) with the arcs kept as formal
/// variables, grouped by arc set: each vertex-disjoint union of simple
/// cycles (loops allowed) contributes (-1)^{#cycles} at its sorted arc set.
/// The empty arc set carries +1. Exponential in n; meant for small graphs.
std::map<std::vector<Arc>, long long> signed_cycle_cover_terms(const Digraph& g,
                                                               int vertex_cap = 8);

}  // namespace hikeforge
