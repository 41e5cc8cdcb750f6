#include "hikeforge/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hikeforge {

IntMatrix adjacency_matrix(const Digraph& g) {
  const int n = g.vertex_count();
  IntMatrix a(n, std::vector<Int>(n, 0));
  for (const Arc& e : g.arcs()) a[e.tail][e.head] = 1;
  return a;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = n == 0 ? 0 : static_cast<int>(a[0].size());
  const int m = k == 0 ? 0 : static_cast<int>(b[0].size());
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Int matrix_trace(const IntMatrix& a) {
  Int t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

std::vector<Int> matrix_trace_powers(const IntMatrix& m, int max_power) {
  if (max_power < 1) throw std::invalid_argument("max_power must be >= 1");
  std::vector<Int> out;
  out.reserve(max_power);
  IntMatrix p = m;
  out.push_back(matrix_trace(p));
  for (int k = 2; k <= max_power; ++k) {
    p = matrix_multiply(p, m);
    out.push_back(matrix_trace(p));
  }
  return out;
}

std::vector<Int> adjacency_trace_powers(const Digraph& g, int max_power) {
  return matrix_trace_powers(adjacency_matrix(g), max_power);
}

IntPoly char_poly(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Int> c(n + 1);
  c[0] = 1;
  IntMatrix m = a;
  for (int k = 1; k <= n; ++k) {
    Int t = matrix_trace(m);
    // c_k = -Tr(M_k)/k; divisibility is guaranteed by the recurrence
    c[k] = -t / k;
    if (c[k] * k != -t) throw std::logic_error("Faddeev-LeVerrier division not exact");
    if (k == n) break;
    for (int i = 0; i < n; ++i) m[i][i] += c[k];
    m = matrix_multiply(a, m);
  }
  return IntPoly(std::move(c));
}

IntPoly char_poly(const Digraph& g) { return char_poly(adjacency_matrix(g)); }

IntPoly permanental_poly(const Digraph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap)
    throw std::length_error("permanental_poly: vertex count exceeds the 2^n cost cap");
  if (n == 0) return IntPoly::one();

  // Row sums over the current column subset S of M = I + uA are linear
  // polynomials a_i + b_i u; Gray code toggles one column at a time.
  std::vector<int> a(n, 0), b(n, 0);
  std::vector<Int> total(n + 1, 0);
  std::vector<Int> prod;
  unsigned prev = 0;
  for (unsigned code = 1; code < (1u << n); ++code) {
    const unsigned gray = code ^ (code >> 1u);
    const unsigned diff = gray ^ prev;
    int j = std::countr_zero(diff);
    const int sign = (gray & diff) ? 1 : -1;
    prev = gray;
    a[j] += sign;
    for (int i = 0; i < n; ++i)
      if (g.has_arc(i, j)) b[i] += sign;

    // product of the n linear row sums
    prod.assign(1, 1);
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      if (a[i] == 0 && b[i] == 0) {
        zero = true;
        break;
      }
      std::vector<Int> next(prod.size() + 1, 0);
      for (std::size_t d = 0; d < prod.size(); ++d) {
        if (a[i] != 0) next[d] += prod[d] * a[i];
        if (b[i] != 0) next[d + 1] += prod[d] * b[i];
      }
      prod = std::move(next);
    }
    if (zero) continue;
    const int subset_sign = (std::popcount(gray) % 2 == 0) ? 1 : -1;
    for (std::size_t d = 0; d < prod.size() && d <= std::size_t(n); ++d)
      total[d] += subset_sign * prod[d];
  }
  const int outer = (n % 2 == 0) ? 1 : -1;
  for (Int& t : total) t *= outer;
  return IntPoly(std::move(total));
}

IntMatrix hashimoto_matrix(const Digraph& g) {
  if (g.has_self_loop())
    throw std::invalid_argument("hashimoto_matrix: self-loops not supported");
  const auto& arcs = g.arcs();
  const int m = static_cast<int>(arcs.size());
  IntMatrix b(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (arcs[i].head == arcs[j].tail && arcs[j].head != arcs[i].tail) b[i][j] = 1;
  return b;
}

namespace {

void cycle_covers(const Digraph& g, int next, std::vector<int>& unused,
                  std::vector<Arc>& arcs, int cycles,
                  std::map<std::vector<Arc>, long long>& out) {
  {
    std::vector<Arc> key = arcs;
    std::sort(key.begin(), key.end());
    out[key] += (cycles % 2 == 0) ? 1 : -1;
  }
  // extend by one more cycle whose minimum vertex is unused and >= next
  for (std::size_t s = 0; s < unused.size(); ++s) {
    const int start = unused[s];
    if (start < next) continue;
    // DFS paths start -> ... -> start through unused vertices > start
    std::vector<int> path{start};
    std::vector<char> on(g.vertex_count(), 0);
    on[start] = 1;
    auto walk = [&](auto&& self, int v) -> void {
      for (int w : g.out_neighbors(v)) {
        if (w == start) {
          std::vector<Arc> saved = arcs;
          for (std::size_t i = 0; i + 1 < path.size(); ++i)
            arcs.push_back({path[i], path[i + 1]});
          arcs.push_back({path.back(), start});
          std::vector<int> rest;
          for (int u : unused)
            if (!on[u]) rest.push_back(u);
          std::vector<int> saved_unused = std::move(unused);
          unused = rest;
          cycle_covers(g, start + 1, unused, arcs, cycles + 1, out);
          unused = std::move(saved_unused);
          arcs = std::move(saved);
        } else if (w > start && !on[w] &&
                   std::find(unused.begin(), unused.end(), w) != unused.end()) {
          on[w] = 1;
          path.push_back(w);
          self(self, w);
          path.pop_back();
          on[w] = 0;
        }
      }
    };
    walk(walk, start);
  }
}

}  // namespace

std::map<std::vector<Arc>, long long> signed_cycle_cover_terms(const Digraph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw std::length_error("signed_cycle_cover_terms: vertex count exceeds cap");
  std::map<std::vector<Arc>, long long> out;
  std::vector<int> unused(g.vertex_count());
  std::iota(unused.begin(), unused.end(), 0);
  std::vector<Arc> arcs;
  cycle_covers(g, 0, unused, arcs, 0, out);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace hikeforge
