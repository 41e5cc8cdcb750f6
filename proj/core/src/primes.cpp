#include "hikeforge/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace hikeforge {

std::vector<int> Prime::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (vertex_mask >> v & 1u) out.push_back(v);
  return out;
}

Prime make_prime(const std::vector<Arc>& cycle_arcs) {
  if (cycle_arcs.empty()) throw std::invalid_argument("empty arc sequence");
  std::size_t best = 0;
  for (std::size_t i = 1; i < cycle_arcs.size(); ++i)
    if (cycle_arcs[i].tail < cycle_arcs[best].tail) best = i;
  Prime p;
  p.arcs.reserve(cycle_arcs.size());
  for (std::size_t i = 0; i < cycle_arcs.size(); ++i)
    p.arcs.push_back(cycle_arcs[(best + i) % cycle_arcs.size()]);
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    const Arc& a = p.arcs[i];
    const Arc& b = p.arcs[(i + 1) % p.arcs.size()];
    if (a.head != b.tail) throw std::invalid_argument("arc sequence not a closed contiguous cycle");
    if (a.tail >= 64) throw std::invalid_argument("vertex index beyond mask width");
    if (p.vertex_mask >> a.tail & 1u)
      throw std::invalid_argument("arc sequence revisits a vertex");
    p.vertex_mask |= 1ull << a.tail;
  }
  return p;
}

int PrimeCatalog::find(const Prime& p) const {
  for (int i = 0; i < size(); ++i)
    if (primes[i] == p) return i;
  return -1;
}

SimpleGraph PrimeCatalog::independence_graph() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!dependent(i, j)) edges.emplace_back(i, j);
  return SimpleGraph(size(), edges);
}

SimpleGraph PrimeCatalog::dependence_graph() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (dependent(i, j)) edges.emplace_back(i, j);
  return SimpleGraph(size(), edges);
}

std::vector<int> PrimeCatalog::length_multiset() const {
  std::vector<int> out;
  out.reserve(primes.size());
  for (const Prime& p : primes) out.push_back(p.length());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t default_enumeration_cap() {
  if (const char* env = std::getenv("HIKE_FORGE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

namespace {

// Strongly connected components (Tarjan) of the subgraph induced on the
// vertex set marked `alive`.
struct Scc {
  const std::vector<std::vector<int>>& adj;
  const std::vector<char>& alive;
  std::vector<int> index, low, comp;
  std::vector<char> on_stack;
  std::vector<int> stack;
  int counter = 0, ncomp = 0;

  Scc(const std::vector<std::vector<int>>& a, const std::vector<char>& al)
      : adj(a), alive(al), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1),
        on_stack(a.size(), 0) {
    for (std::size_t v = 0; v < a.size(); ++v)
      if (alive[v] && index[v] < 0) dfs(static_cast<int>(v));
  }

  void dfs(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w : adj[v]) {
      if (!alive[w]) continue;
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  }
};

struct JohnsonState {
  const Digraph& g;
  std::size_t cap;
  std::vector<std::vector<int>> loopless_adj;
  std::vector<char> blocked;
  std::vector<std::set<int>> blist;
  std::vector<int> stack;
  std::vector<char> in_comp;
  int start = 0;
  std::vector<Prime>* out = nullptr;

  explicit JohnsonState(const Digraph& graph, std::size_t cap_limit)
      : g(graph), cap(cap_limit), loopless_adj(graph.vertex_count()),
        blocked(graph.vertex_count(), 0), blist(graph.vertex_count()),
        in_comp(graph.vertex_count(), 0) {
    for (const Arc& a : g.arcs())
      if (a.tail != a.head) loopless_adj[a.tail].push_back(a.head);
  }

  void unblock(int v) {
    blocked[v] = 0;
    std::set<int> pending;
    pending.swap(blist[v]);
    for (int w : pending)
      if (blocked[w]) unblock(w);
  }

  void emit() {
    std::vector<Arc> arcs;
    arcs.reserve(stack.size());
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) arcs.push_back({stack[i], stack[i + 1]});
    arcs.push_back({stack.back(), stack.front()});
    if (out->size() >= cap) throw std::length_error("enumerate_primes: prime count cap exceeded");
    out->push_back(make_prime(arcs));
  }

  bool circuit(int v) {
    bool found = false;
    stack.push_back(v);
    blocked[v] = 1;
    for (int w : loopless_adj[v]) {
      if (!in_comp[w]) continue;
      if (w == start) {
        emit();
        found = true;
      } else if (!blocked[w]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : loopless_adj[v])
        if (in_comp[w]) blist[w].insert(v);
    }
    stack.pop_back();
    return found;
  }
};

}  // namespace

PrimeCatalog enumerate_primes(const Digraph& g, std::size_t cap) {
  if (g.vertex_count() > 64)
    throw std::invalid_argument("enumerate_primes: at most 64 vertices supported");
  std::vector<Prime> primes;
  for (const Arc& a : g.arcs())
    if (a.tail == a.head) primes.push_back(make_prime({a}));
  if (primes.size() > cap) throw std::length_error("enumerate_primes: prime count cap exceeded");

  JohnsonState st(g, cap);
  st.out = &primes;
  const int n = g.vertex_count();
  for (int s = 0; s < n; ++s) {
    std::vector<char> alive(n, 0);
    for (int v = s; v < n; ++v) alive[v] = 1;
    Scc scc(st.loopless_adj, alive);
    std::fill(st.in_comp.begin(), st.in_comp.end(), 0);
    int members = 0;
    for (int v = s; v < n; ++v)
      if (scc.comp[v] == scc.comp[s]) {
        st.in_comp[v] = 1;
        ++members;
      }
    if (members < 2) continue;
    for (int v = s; v < n; ++v) {
      st.blocked[v] = 0;
      st.blist[v].clear();
    }
    st.start = s;
    st.circuit(s);
  }

  std::sort(primes.begin(), primes.end(), [](const Prime& a, const Prime& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arcs < b.arcs;
  });
  PrimeCatalog cat;
  cat.graph_n = g.vertex_count();
  cat.primes = std::move(primes);
  return cat;
}

}  // namespace hikeforge
