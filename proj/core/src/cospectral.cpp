#include "hikeforge/cospectral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hikeforge/reconstruct.hpp"

namespace hikeforge {

SpectralFingerprint fingerprint(const Digraph& g) {
  SpectralFingerprint fp;
  fp.char_poly = char_poly(g);
  fp.perm_poly = permanental_poly(g);
  fp.traces = g.vertex_count() >= 1 ? adjacency_trace_powers(g, g.vertex_count())
                                    : std::vector<Int>{};
  return fp;
}

HikeStructure hike_structure(const Digraph& g) {
  const PrimeCatalog cat = enumerate_primes(g);
  HikeStructure hs;
  hs.prime_count = cat.size();
  hs.gamma = cat.dependence_graph();
  hs.lengths.resize(cat.size());
  for (int i = 0; i < cat.size(); ++i) hs.lengths[i] = cat.prime_length(i);
  return hs;
}

bool same_nonzero_spectrum(const Digraph& a, const Digraph& b) {
  const int k = std::max(a.vertex_count(), b.vertex_count());
  if (k == 0) return true;
  return adjacency_trace_powers(a, k) == adjacency_trace_powers(b, k);
}

bool hike_structure_equal(const Digraph& a, const Digraph& b) {
  const HikeStructure ha = hike_structure(a);
  const HikeStructure hb = hike_structure(b);
  if (ha.prime_count != hb.prime_count) return false;
  std::vector<int> la = ha.lengths, lb = hb.lengths;
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  return graphs_isomorphic_labeled(ha.gamma, hb.gamma, ha.lengths, hb.lengths);
}

namespace {

bool prime_of(const Digraph& g, const Prime& p) {
  for (const Arc& a : p.arcs)
    if (!g.has_arc(a.tail, a.head)) return false;
  return true;
}

}  // namespace

Digraph expand_pathsum(const Digraph& g, const Prime& cycle1, const Prime& cycle2,
                       int shared_vertex) {
  if (!prime_of(g, cycle1) || !prime_of(g, cycle2))
    throw std::invalid_argument("expand_pathsum: cycles are not cycles of the graph");
  const std::uint64_t inter = cycle1.vertex_mask & cycle2.vertex_mask;
  if (shared_vertex < 0 || shared_vertex >= g.vertex_count() ||
      inter != (1ull << shared_vertex))
    throw std::invalid_argument(
        "expand_pathsum: cycles must intersect exactly at shared_vertex");
  const std::uint64_t both = cycle1.vertex_mask | cycle2.vertex_mask;
  std::set<Arc> own(cycle1.arcs.begin(), cycle1.arcs.end());
  own.insert(cycle2.arcs.begin(), cycle2.arcs.end());
  for (const Arc& a : g.arcs()) {
    const bool touches = (both >> a.tail & 1u) || (both >> a.head & 1u);
    if (touches && !own.count(a))
      throw std::invalid_argument(
          "expand_pathsum: the two cycles must carry every arc at their vertices");
  }

  const int l1 = cycle1.length();
  const int l2 = cycle2.length();

  // drop cycle1's arcs and its non-shared vertices; keep everything else
  std::vector<int> relabel(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const bool dropped = (cycle1.vertex_mask >> v & 1u) && v != shared_vertex;
    if (!dropped) relabel[v] = next++;
  }
  std::set<Arc> c1_arcs(cycle1.arcs.begin(), cycle1.arcs.end());
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs())
    if (!c1_arcs.count(a)) arcs.push_back({relabel[a.tail], relabel[a.head]});

  // fresh cycle of length l1+l2 through the shared vertex
  const int v0 = relabel[shared_vertex];
  std::vector<int> ring{v0};
  for (int i = 0; i < l1 + l2 - 1; ++i) ring.push_back(next++);
  for (std::size_t i = 0; i < ring.size(); ++i)
    arcs.push_back({ring[i], ring[(i + 1) % ring.size()]});

  // re-attach a copy of cycle1 at the l2-th fresh vertex
  const int attach = ring[l2];
  if (l1 == 1) {
    arcs.push_back({attach, attach});
  } else {
    std::vector<int> petal{attach};
    for (int i = 0; i < l1 - 1; ++i) petal.push_back(next++);
    for (std::size_t i = 0; i < petal.size(); ++i)
      arcs.push_back({petal[i], petal[(i + 1) % petal.size()]});
  }
  return Digraph(next, std::move(arcs));
}

CheckReport intersection_slide_check(const Digraph& a, const Digraph& b) {
  CheckReport rep{.name = "intersection-slide"};
  const bool structure = hike_structure_equal(a, b);
  const bool vertices = a.vertex_count() == b.vertex_count();
  const bool spectrum = same_nonzero_spectrum(a, b);
  const bool noniso = !digraphs_isomorphic(a, b);
  rep.conditions = {{"hike-structure equal", structure},
                    {"same vertex count", vertices},
                    {"same non-zero spectrum", spectrum},
                    {"non-isomorphic", noniso}};
  rep.pass = structure && vertices && spectrum && noniso;
  if (!rep.pass) {
    if (!noniso)
      rep.counterexample = "isomorphic - not a valid pair";
    else if (!vertices)
      rep.counterexample = "vertex counts differ";
    else if (!structure)
      rep.counterexample = "hike structures differ";
    else
      rep.counterexample = "closed-walk counts differ";
  }
  return rep;
}

}  // namespace hikeforge
