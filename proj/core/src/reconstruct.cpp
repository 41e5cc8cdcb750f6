#include "hikeforge/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hikeforge {

SimpleGraph dependence_graph(const Digraph& g) {
  if (!g.is_bidirected())
    throw std::invalid_argument("dependence_graph: digraph must be bidirected");
  if (g.has_self_loop())
    throw std::invalid_argument("dependence_graph: self-loops not supported");
  if (!g.weakly_connected())
    throw std::invalid_argument("dependence_graph: graph must be connected");
  return enumerate_primes(g).dependence_graph();
}

std::vector<EquivalenceClass> equivalence_classes(const SimpleGraph& gamma) {
  const int n = gamma.vertex_count();
  std::map<std::vector<int>, std::vector<int>> by_closed_nbhd;
  for (int v = 0; v < n; ++v) {
    std::vector<int> closed = gamma.neighbors(v);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    by_closed_nbhd[closed].push_back(v);
  }
  std::vector<EquivalenceClass> classes;
  for (const auto& [closed, members] : by_closed_nbhd) {
    EquivalenceClass c;
    c.members = members;
    const auto nbrs = gamma.neighbors(members.front());
    c.clique_neighborhood = true;
    for (std::size_t i = 0; i < nbrs.size() && c.clique_neighborhood; ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!gamma.has_edge(nbrs[i], nbrs[j])) {
          c.clique_neighborhood = false;
          break;
        }
    // T(C): common neighbors of all members (members never qualify)
    for (int w : nbrs) {
      bool common = true;
      for (int m : members)
        if (w == m || !gamma.has_edge(m, w)) {
          common = false;
          break;
        }
      if (common) c.common_neighbors.push_back(w);
    }
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) {
              return a.members.front() < b.members.front();
            });
  return classes;
}

BacktrackIdentification identify_backtracks(const SimpleGraph& gamma) {
  BacktrackIdentification out;
  out.classes = equivalence_classes(gamma);
  if (gamma.vertex_count() == 5 && gamma.is_complete()) {
    out.ambiguous_k5 = true;
    return out;
  }
  for (const EquivalenceClass& c : out.classes) {
    const auto size = c.members.size();
    if (c.clique_neighborhood) {
      out.backtracks.insert(out.backtracks.end(), c.members.begin(), c.members.end());
    } else if (size % 2 == 1) {
      out.backtracks.push_back(c.members.front());
    } else if (size == 4) {
      bool two = false;
      for (int w : c.common_neighbors)
        if (gamma.degree(w) == 4) two = true;
      if (two) {
        out.backtracks.push_back(c.members[0]);
        out.backtracks.push_back(c.members[1]);
      }
    }
  }
  std::sort(out.backtracks.begin(), out.backtracks.end());
  return out;
}

namespace {

// Krausz partition search: split the edges of lg into cliques with every
// vertex in at most two of them.
struct KrauszSearch {
  const SimpleGraph& lg;
  std::vector<std::vector<int>> parts;
  std::vector<int> part_count;
  std::set<std::pair<int, int>> assigned;
  std::string witness;

  explicit KrauszSearch(const SimpleGraph& g) : lg(g), part_count(g.vertex_count(), 0) {}

  bool edge_assigned(int a, int b) const {
    if (a > b) std::swap(a, b);
    return assigned.count({a, b}) != 0;
  }

  void mark_part(const std::vector<int>& q, bool on) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      part_count[q[i]] += on ? 1 : -1;
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        auto e = std::minmax(q[i], q[j]);
        if (on)
          assigned.insert({e.first, e.second});
        else
          assigned.erase({e.first, e.second});
      }
    }
  }

  // cliques Q >= {u,v} with all internal edges unassigned and room in every
  // member, largest first
  std::vector<std::vector<int>> candidates(int u, int v) {
    std::vector<int> common;
    for (int w = 0; w < lg.vertex_count(); ++w)
      if (w != u && w != v && lg.has_edge(u, w) && lg.has_edge(v, w) && part_count[w] < 2 &&
          !edge_assigned(u, w) && !edge_assigned(v, w))
        common.push_back(w);
    std::vector<std::vector<int>> out;
    std::vector<int> cur{u, v};
    auto grow = [&](auto&& self, std::size_t next) -> void {
      out.push_back(cur);
      for (std::size_t i = next; i < common.size(); ++i) {
        const int w = common[i];
        bool ok = true;
        for (std::size_t j = 2; j < cur.size() && ok; ++j)
          ok = lg.has_edge(cur[j], w) && !edge_assigned(cur[j], w);
        if (!ok) continue;
        cur.push_back(w);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    grow(grow, 0);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
  }

  bool complete_and_simple() const {
    // each lg vertex becomes a root edge between its containers; the root
    // must stay simple
    std::set<std::pair<int, int>> root_edges;
    int fresh = static_cast<int>(parts.size());
    for (int v = 0; v < lg.vertex_count(); ++v) {
      std::vector<int> containers;
      for (std::size_t p = 0; p < parts.size(); ++p)
        if (std::find(parts[p].begin(), parts[p].end(), v) != parts[p].end())
          containers.push_back(static_cast<int>(p));
      while (containers.size() < 2) containers.push_back(fresh++);
      auto e = std::minmax(containers[0], containers[1]);
      if (!root_edges.insert({e.first, e.second}).second) return false;
    }
    return true;
  }

  bool solve() {
    int u = -1, v = -1;
    for (auto [a, b] : lg.edges())
      if (!edge_assigned(a, b)) {
        u = a;
        v = b;
        break;
      }
    if (u < 0) return complete_and_simple();
    if (part_count[u] >= 2 || part_count[v] >= 2) {
      std::ostringstream os;
      os << "vertex " << (part_count[u] >= 2 ? u : v) << " would need a third clique";
      witness = os.str();
      return false;
    }
    for (const auto& q : candidates(u, v)) {
      mark_part(q, true);
      parts.push_back(q);
      if (solve()) return true;
      parts.pop_back();
      mark_part(q, false);
    }
    if (witness.empty()) witness = "no clique partition covers the edge (" +
                                   std::to_string(u) + "," + std::to_string(v) + ")";
    return false;
  }

  SimpleGraph build_root() const {
    int fresh = static_cast<int>(parts.size());
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < lg.vertex_count(); ++v) {
      std::vector<int> containers;
      for (std::size_t p = 0; p < parts.size(); ++p)
        if (std::find(parts[p].begin(), parts[p].end(), v) != parts[p].end())
          containers.push_back(static_cast<int>(p));
      while (containers.size() < 2) containers.push_back(fresh++);
      edges.emplace_back(std::min(containers[0], containers[1]),
                         std::max(containers[0], containers[1]));
    }
    return SimpleGraph(fresh, edges);
  }
};

}  // namespace

LineGraphInverse line_graph_inverse(const SimpleGraph& lg) {
  LineGraphInverse out;
  if (lg.vertex_count() == 0) {
    out.witness = "empty input";
    return out;
  }
  KrauszSearch search(lg);
  if (!search.solve()) {
    out.witness = search.witness.empty() ? "no Krausz partition exists" : search.witness;
    return out;
  }
  out.ok = true;
  out.root = search.build_root();
  return out;
}

namespace {

SimpleGraph triangle_graph() { return SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimpleGraph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return SimpleGraph(leaves + 1, edges);
}

bool is_triangle(const SimpleGraph& g) { return g.vertex_count() == 3 && g.is_complete(); }

std::vector<int> catalog_lengths(const PrimeCatalog& cat) {
  std::vector<int> out(cat.size());
  for (int i = 0; i < cat.size(); ++i) out[i] = cat.prime_length(i);
  return out;
}

}  // namespace

ReconstructionResult reconstruct(const SimpleGraph& gamma) {
  ReconstructionResult res;
  if (gamma.vertex_count() == 0) {
    res.reason = "empty dependence graph: no primes to work from";
    return res;
  }
  if (!gamma.connected()) {
    res.reason = "disconnected dependence graph; split per component and reconstruct each";
    return res;
  }
  BacktrackIdentification id = identify_backtracks(gamma);
  res.classes = id.classes;
  res.backtracks = id.backtracks;
  if (id.ambiguous_k5) {
    res.outcome = ReconstructionResult::Outcome::Ambiguous;
    res.roots = {triangle_graph(), star_graph(5)};
    res.graphs = {triangle_graph().bidirected(), star_graph(5).bidirected()};
    res.reason = "gamma = K5: the triangle and the 5-star share this dependence graph";
    return res;
  }
  const SimpleGraph lg = gamma.induced(id.backtracks);
  if (is_triangle(lg)) {
    // the 3-star is the only graph whose dependence graph is K3
    res.outcome = ReconstructionResult::Outcome::Unique;
    res.roots = {star_graph(3)};
    res.graphs = {star_graph(3).bidirected()};
    return res;
  }
  LineGraphInverse inv = line_graph_inverse(lg);
  if (!inv.ok) {
    res.reason = "backtrack subgraph is not a line graph: " + inv.witness;
    return res;
  }
  res.outcome = ReconstructionResult::Outcome::Unique;
  res.roots = {inv.root};
  res.graphs = {inv.root.bidirected()};
  return res;
}

ReconstructionResult reconstruct_with_lengths(const SimpleGraph& gamma,
                                              const std::vector<int>& lengths) {
  ReconstructionResult res;
  if (static_cast<int>(lengths.size()) != gamma.vertex_count()) {
    res.reason = "length labels do not match the dependence graph";
    return res;
  }
  if (gamma.vertex_count() == 0 || !gamma.connected()) {
    res.reason = "dependence graph must be non-empty and connected";
    return res;
  }
  std::vector<int> backtracks;
  for (int v = 0; v < gamma.vertex_count(); ++v)
    if (lengths[v] == 2) backtracks.push_back(v);
  res.backtracks = backtracks;
  if (backtracks.empty()) {
    res.reason = "no length-2 primes: not the hike structure of a graph with an edge";
    return res;
  }

  SimpleGraph root;
  const SimpleGraph lg = gamma.induced(backtracks);
  if (is_triangle(lg)) {
    root = triangle_graph();  // provisional; disambiguated below
    const std::vector<SimpleGraph> candidates{triangle_graph(), star_graph(3)};
    bool matched = false;
    for (const SimpleGraph& cand : candidates) {
      const PrimeCatalog cat = enumerate_primes(cand.bidirected());
      if (graphs_isomorphic_labeled(cat.dependence_graph(), gamma, catalog_lengths(cat),
                                    lengths)) {
        root = cand;
        matched = true;
        break;
      }
    }
    if (!matched) {
      res.reason = "no graph realizes this labeled hike structure";
      return res;
    }
  } else {
    LineGraphInverse inv = line_graph_inverse(lg);
    if (!inv.ok) {
      res.reason = "backtrack subgraph is not a line graph: " + inv.witness;
      return res;
    }
    root = inv.root;
    // forward-map verification
    const PrimeCatalog cat = enumerate_primes(root.bidirected());
    if (!graphs_isomorphic_labeled(cat.dependence_graph(), gamma, catalog_lengths(cat),
                                   lengths)) {
      res.reason = "reconstructed graph does not reproduce the labeled hike structure";
      return res;
    }
  }
  res.outcome = ReconstructionResult::Outcome::Unique;
  res.roots = {root};
  res.graphs = {root.bidirected()};
  return res;
}

namespace {

std::string vertex_signature(int degree, std::vector<int> nbr_degrees, int label) {
  std::sort(nbr_degrees.begin(), nbr_degrees.end());
  std::string s = std::to_string(label) + "/" + std::to_string(degree) + ":";
  for (int d : nbr_degrees) s += std::to_string(d) + ",";
  return s;
}

bool iso_search(int n, const std::vector<char>& a, const std::vector<char>& b,
                const std::vector<std::string>& siga, const std::vector<std::string>& sigb) {
  {
    std::vector<std::string> sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> assign(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || siga[v] != sigb[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = a[std::size_t(v) * n + u] == b[std::size_t(w) * n + assign[u]] &&
             a[std::size_t(u) * n + v] == b[std::size_t(assign[u]) * n + w];
      if (!ok) continue;
      assign[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      assign[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<char> adjacency_flat(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> a(std::size_t(n) * n, 0);
  for (auto [x, y] : g.edges()) {
    a[std::size_t(x) * n + y] = 1;
    a[std::size_t(y) * n + x] = 1;
  }
  return a;
}

std::vector<std::string> signatures(const SimpleGraph& g, const std::vector<int>* labels) {
  const int n = g.vertex_count();
  std::vector<std::string> out(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    out[v] = vertex_signature(g.degree(v), std::move(nd), labels ? (*labels)[v] : 0);
  }
  return out;
}

}  // namespace

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() > 12 || b.vertex_count() > 12)
    throw std::length_error("graphs_isomorphic: at most 12 vertices supported");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return iso_search(a.vertex_count(), adjacency_flat(a), adjacency_flat(b),
                    signatures(a, nullptr), signatures(b, nullptr));
}

bool graphs_isomorphic_labeled(const SimpleGraph& a, const SimpleGraph& b,
                               const std::vector<int>& la, const std::vector<int>& lb) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return iso_search(a.vertex_count(), adjacency_flat(a), adjacency_flat(b), signatures(a, &la),
                    signatures(b, &lb));
}

bool digraphs_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  const int n = a.vertex_count();
  auto flat = [n](const Digraph& g) {
    std::vector<char> m(std::size_t(n) * n, 0);
    for (const Arc& e : g.arcs()) m[std::size_t(e.tail) * n + e.head] = 1;
    return m;
  };
  auto sigs = [n](const Digraph& g) {
    std::vector<std::string> out(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nd;
      for (int w : g.out_neighbors(v))
        nd.push_back(int(g.out_neighbors(w).size()) * 64 + int(g.in_neighbors(w).size()));
      for (int w : g.in_neighbors(v))
        nd.push_back(-(int(g.out_neighbors(w).size()) * 64 + int(g.in_neighbors(w).size())));
      out[v] = vertex_signature(int(g.out_neighbors(v).size()) * 64 +
                                    int(g.in_neighbors(v).size()),
                                std::move(nd), 0);
    }
    return out;
  };
  return iso_search(n, flat(a), flat(b), sigs(a), sigs(b));
}

}  // namespace hikeforge
