// Deterministic graph corpora for the unit and acceptance suites.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hikeforge/digraph.hpp"

namespace corpus {

using hikeforge::Arc;
using hikeforge::Digraph;
using hikeforge::SimpleGraph;

inline SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return SimpleGraph(n, edges);
}

inline SimpleGraph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return SimpleGraph(leaves + 1, edges);
}

inline SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(n, edges);
}

inline SimpleGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n),
                                                 std::max(i, (i + 1) % n));
  return SimpleGraph(n, edges);
}

inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

inline Digraph self_loop_vertex() { return Digraph(1, {{0, 0}}); }

inline Digraph backtrack_pair() { return Digraph(2, {{0, 1}, {1, 0}}); }

// Every weakly connected digraph on exactly n labeled vertices (loops
// allowed); exhaustive, so n <= 3 in practice.
inline std::vector<Digraph> all_connected_digraphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1u) arcs.push_back({slots[b].first, slots[b].second});
    Digraph g(n, arcs);
    if (g.weakly_connected()) out.push_back(std::move(g));
  }
  return out;
}

// The shared acceptance corpus: >= 200 weakly connected digraphs on at most
// 5 vertices. Exhaustive on n <= 3, seeded deterministic samples on n = 4,5,
// plus the named fixtures the worked examples use.
inline const std::vector<Digraph>& acceptance_digraphs() {
  static const std::vector<Digraph> corpus = [] {
    std::vector<Digraph> out;
    for (int n = 1; n <= 3; ++n)
      for (Digraph& g : all_connected_digraphs(n)) out.push_back(std::move(g));

    std::mt19937 rng(20240817);
    std::set<std::vector<std::pair<int, int>>> seen;
    auto sample = [&](int n, int count, double arc_prob) {
      std::bernoulli_distribution coin(arc_prob);
      int added = 0, guard = 0;
      while (added < count && ++guard < 10000) {
        std::vector<Arc> arcs;
        std::vector<std::pair<int, int>> key;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (coin(rng)) {
              arcs.push_back({i, j});
              key.emplace_back(i, j);
            }
        Digraph g(n, arcs);
        if (!g.weakly_connected() || !seen.insert(key).second) continue;
        out.push_back(std::move(g));
        ++added;
      }
    };
    sample(4, 40, 0.33);
    sample(5, 30, 0.25);

    out.push_back(complete_graph(3).bidirected());
    out.push_back(complete_graph(4).bidirected());
    out.push_back(cycle_graph(5).bidirected());
    out.push_back(Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 1}}));
    out.push_back(Digraph(2, {{0, 1}, {1, 0}, {1, 1}}));
    out.push_back(directed_cycle(3));
    return out;
  }();
  return corpus;
}

// All connected undirected graphs on exactly n vertices, one per
// isomorphism class (canonical = lexicographically least adjacency mask
// over vertex permutations); n <= 7 feasible, n <= 6 used.
inline std::vector<SimpleGraph> all_connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int b = 0; b < m; ++b)
    pair_index[pairs[b].first][pairs[b].second] =
        pair_index[pairs[b].second][pairs[b].first] = b;

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  auto connected = [&](std::uint64_t mask) {
    if (n == 1) return true;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    int parts = n;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1u) {
        int a = find(pairs[b].first), c = find(pairs[b].second);
        if (a != c) {
          comp[a] = c;
          --parts;
        }
      }
    return parts == 1;
  };

  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    if (!connected(mask)) continue;
    bool canonical = true;
    for (const auto& p : perms) {
      std::uint64_t remapped = 0;
      for (int b = 0; b < m; ++b)
        if (mask >> b & 1u) remapped |= 1ull << pair_index[p[pairs[b].first]][p[pairs[b].second]];
      if (remapped < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1u) edges.push_back(pairs[b]);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace corpus
