// Brute-force oracles used to freeze expected values. Everything here is
// deliberately independent of the library's algorithmic path: determinants
// and permanents by Leibniz sums, circuits by plain DFS, walk counts by
// string enumeration, divisibility by trying every interleaving.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hikeforge/digraph.hpp"
#include "hikeforge/hike.hpp"
#include "hikeforge/numeric.hpp"
#include "hikeforge/poly.hpp"

namespace oracles {

using hikeforge::Arc;
using hikeforge::Digraph;
using hikeforge::Hike;
using hikeforge::Int;
using hikeforge::IntPoly;
using hikeforge::PrimeCatalog;

// Number of closed walks of length k, by enumerating arc strings.
inline long long closed_walk_count(const Digraph& g, int k) {
  long long count = 0;
  auto dfs = [&](auto&& self, int start, int at, int left) -> void {
    if (left == 0) {
      if (at == start) ++count;
      return;
    }
    for (int w : g.out_neighbors(at)) self(self, start, w, left - 1);
  };
  for (int v = 0; v < g.vertex_count(); ++v) dfs(dfs, v, v, k);
  return count;
}

// Every elementary circuit as a canonical vertex sequence starting at its
// minimum vertex.
inline std::set<std::vector<int>> elementary_circuits(const Digraph& g) {
  std::set<std::vector<int>> found;
  std::vector<int> path;
  std::vector<char> on(g.vertex_count(), 0);
  auto dfs = [&](auto&& self, int start, int at) -> void {
    for (int w : g.out_neighbors(at)) {
      if (w == start) found.insert(path);
      if (w > start && !on[w]) {
        on[w] = 1;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on[w] = 0;
      }
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    dfs(dfs, s, s);
  }
  // the self-loop circuits (w == start covers them when the arc exists)
  return found;
}

// det(I - zA) straight from the Leibniz sum; n <= 8.
inline IntPoly char_poly_leibniz(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly det;
  do {
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    const int sign = ((n - cycles) % 2 == 0) ? 1 : -1;
    IntPoly term = IntPoly::constant(sign);
    bool vanish = false;
    for (int i = 0; i < n && !vanish; ++i) {
      const bool arc = g.has_arc(i, perm[i]);
      if (i == perm[i]) {
        if (arc) term = term * IntPoly(std::vector<Int>{1, -1});
      } else if (arc) {
        term = term * IntPoly::monomial(-1, 1);
      } else {
        vanish = true;
      }
    }
    if (!vanish) det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// perm(I + uA), same expansion without signs; n <= 8.
inline IntPoly perm_poly_leibniz(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly acc;
  do {
    IntPoly term = IntPoly::one();
    bool vanish = false;
    for (int i = 0; i < n && !vanish; ++i) {
      const bool arc = g.has_arc(i, perm[i]);
      if (i == perm[i]) {
        term = term * (arc ? IntPoly(std::vector<Int>{1, 1}) : IntPoly::one());
      } else if (arc) {
        term = term * IntPoly::monomial(1, 1);
      } else {
        vanish = true;
      }
    }
    if (!vanish) acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Left divisibility by trying every interleaving of the leftover primes.
inline bool divides_by_interleaving(const PrimeCatalog& cat, const Hike& h, const Hike& d) {
  std::vector<int> hm = hikeforge::occurrence_multiset(h);
  std::vector<int> dm = hikeforge::occurrence_multiset(d);
  std::vector<int> rest;
  {
    auto it = hm.begin();
    for (int p : dm) {
      it = std::find(hm.begin(), hm.end(), p);
      if (it == hm.end()) return false;
      hm.erase(it);
    }
    rest = hm;
  }
  std::sort(rest.begin(), rest.end());
  do {
    if (hikeforge::multiply(cat, d, hikeforge::hike_from_primes(cat, rest)) == h) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

}  // namespace oracles
