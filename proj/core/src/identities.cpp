#include "hikeforge/identities.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hikeforge/functions.hpp"
#include "hikeforge/incidence.hpp"
#include "hikeforge/multiseries.hpp"

namespace hikeforge {

int mobius_nat(long long m) {
  if (m <= 0) throw std::invalid_argument("mobius_nat: argument must be positive");
  int factors = 0;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    ++factors;
  }
  if (m > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

std::vector<long long> divisors_nat(long long m) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d != m / d) out.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Visit every clique of the independence structure (every self-avoiding
// hike) with total length <= cap.
template <class Visit>
void for_each_clique(const PrimeCatalog& cat, int cap, Visit&& visit) {
  auto rec = [&](auto&& self, int next, std::uint64_t mask, int count, int length) -> void {
    visit(count, length);
    for (int p = next; p < cat.size(); ++p) {
      if (cat.primes[p].vertex_mask & mask) continue;
      const int nl = length + cat.prime_length(p);
      if (nl > cap) continue;
      self(self, p + 1, mask | cat.primes[p].vertex_mask, count + 1, nl);
    }
  };
  rec(rec, 0, 0, 0, 0);
}

}  // namespace

std::vector<Int> self_avoiding_signed_by_length(const PrimeCatalog& cat, int max_length) {
  std::vector<Int> out(max_length + 1, 0);
  for_each_clique(cat, max_length, [&](int count, int length) {
    out[length] += (count % 2 == 0) ? 1 : -1;
  });
  return out;
}

std::vector<Int> self_avoiding_count_by_length(const PrimeCatalog& cat, int max_length) {
  std::vector<Int> out(max_length + 1, 0);
  for_each_clique(cat, max_length, [&](int, int length) { out[length] += 1; });
  return out;
}

CheckReport check_det_mobius(const Digraph& g, int bound) {
  CheckReport rep{.name = "det-mobius", .bound = bound};
  const int cap = std::min(bound, g.vertex_count());
  const IntPoly det = char_poly(g);
  const PrimeCatalog cat = enumerate_primes(g);
  const std::vector<Int> mu_sums = self_avoiding_signed_by_length(cat, cap);
  for (int k = 0; k <= cap; ++k) {
    if (det.coeff(k) != mu_sums[k]) {
      std::ostringstream os;
      os << "degree " << k << ": det coefficient " << det.coeff(k) << " != mu aggregate "
         << mu_sums[k];
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

CheckReport check_perm_liouville(const Digraph& g, int bound) {
  CheckReport rep{.name = "perm-liouville", .bound = bound};
  const IntPoly perm = permanental_poly(g);
  const PrimeCatalog cat = enumerate_primes(g);

  const int cap = std::min(bound, g.vertex_count());
  const std::vector<Int> sa_counts = self_avoiding_count_by_length(cat, cap);
  for (int k = 0; k <= cap; ++k) {
    if (perm.coeff(k) != sa_counts[k]) {
      std::ostringstream os;
      os << "perm coefficient " << k << " = " << perm.coeff(k) << " but " << sa_counts[k]
         << " self-avoiding hikes of that length";
      rep.fail(os.str());
      return rep;
    }
  }

  std::vector<Int> liouville_sums(bound + 1, 0);
  for (const Hike& h : enumerate_hikes(cat, bound)) liouville_sums[h.length] += liouville(h);
  const IntPoly s(std::move(liouville_sums));
  const IntPoly prod = s.times_truncated(perm, bound);
  if (!(prod == IntPoly::one())) {
    rep.fail("sum of liouville(h) u^l(h) times perm(I + uA) != 1 mod u^" +
             std::to_string(bound + 1) + " (got " + prod.to_string("u") + ")");
  }
  return rep;
}

CheckReport check_macmahon(const Digraph& g, int degree) {
  CheckReport rep{.name = "macmahon", .bound = degree};
  const int n = g.vertex_count();
  if (n > 8 || degree > 8)
    throw std::length_error("check_macmahon: vertex count or degree beyond caps");
  const MultiSeries det = weighted_adjacency_determinant(g, degree);
  const MultiSeries inv = det.inverse();

  const PrimeCatalog cat = enumerate_primes(g);
  MultiSeries hikes_sum(n, degree);
  for (const Hike& h : enumerate_hikes(cat, degree))
    hikes_sum.add_term(visit_counts(cat, h), 1);

  if (!(inv == hikes_sum)) {
    const MultiSeries diff = inv - hikes_sum;
    rep.fail("1/det(I - TA) != sum of visit monomials; difference " + diff.to_string());
  }
  return rep;
}

CheckReport check_trace_mangoldt(const Digraph& g, int bound) {
  CheckReport rep{.name = "trace-mangoldt", .bound = bound};
  const PrimeCatalog cat = enumerate_primes(g);
  const std::vector<Hike> hikes = enumerate_hikes(cat, bound);

  // Lambda = l * mu per hike, batched: every factorization h = d.(h/d) with
  // mu(h/d) != 0 appears exactly once as a product (hike, self-avoiding hike).
  std::vector<Hike> sa;
  for (const Hike& h : hikes)
    if (is_self_avoiding(h)) sa.push_back(h);
  std::map<std::string, long long> lambda;
  std::map<std::string, int> length_of;
  for (const Hike& a : hikes) {
    for (const Hike& b : sa) {
      if (a.length + b.length > bound) continue;
      const Hike prod = multiply(cat, a, b);
      lambda[hike_key(prod)] += static_cast<long long>(a.length) * mobius(b);
      length_of[hike_key(prod)] = prod.length;
    }
  }

  std::vector<Int> sums(bound + 1, 0);
  for (const auto& [key, value] : lambda) sums[length_of[key]] += value;
  const std::vector<Int> traces = bound >= 1 ? adjacency_trace_powers(g, bound)
                                             : std::vector<Int>{};
  for (int k = 1; k <= bound; ++k) {
    if (sums[k] != traces[k - 1]) {
      std::ostringstream os;
      os << "k = " << k << ": sum of Lambda over length-" << k << " hikes = " << sums[k]
         << " != Tr(A^" << k << ") = " << traces[k - 1];
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

OrbitCounts primitive_orbit_counts(const Digraph& g, int bound) {
  if (bound < 1) throw std::invalid_argument("primitive_orbit_counts: bound must be >= 1");
  const std::vector<Int> traces = adjacency_trace_powers(g, bound);
  OrbitCounts oc;
  oc.counts.assign(bound + 1, 0);
  for (int l = 1; l <= bound; ++l) {
    Int acc = 0;
    for (long long d : divisors_nat(l)) acc += mobius_nat(l / d) * traces[d - 1];
    if (acc % l != 0)
      throw std::logic_error("primitive_orbit_counts: non-integral Mobius inversion");
    oc.counts[l] = acc / l;
  }
  return oc;
}

namespace {

std::vector<int> min_rotation(const std::vector<int>& s) {
  const std::size_t m = s.size();
  std::vector<int> best = s;
  std::vector<int> cur(m);
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) cur[i] = s[(i + r) % m];
    if (cur < best) best = cur;
  }
  return best;
}

bool aperiodic(const std::vector<int>& s) {
  const std::size_t m = s.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < m && periodic; ++i) periodic = s[i] == s[(i + p) % m];
    if (periodic) return false;
  }
  return true;
}

// Arc strings of closed walks of each length up to the bound, with an
// optional cyclic no-immediate-reversal constraint.
OrbitCounts orbit_census(const Digraph& g, int bound, bool backtrackless) {
  const auto& arcs = g.arcs();
  const int m = static_cast<int>(arcs.size());
  OrbitCounts oc;
  oc.counts.assign(bound + 1, 0);
  std::vector<std::vector<int>> out_arcs(g.vertex_count());
  for (int i = 0; i < m; ++i) out_arcs[arcs[i].tail].push_back(i);
  auto reverses = [&](int a, int b) {
    return arcs[a].tail == arcs[b].head && arcs[a].head == arcs[b].tail;
  };

  for (int len = 1; len <= bound; ++len) {
    std::set<std::vector<int>> orbits;
    std::vector<int> seq;
    auto dfs = [&](auto&& self, int start, int at) -> void {
      if (static_cast<int>(seq.size()) == len) {
        if (at != start) return;
        if (backtrackless && reverses(seq.back(), seq.front())) return;
        const std::vector<int> canon = min_rotation(seq);
        if (aperiodic(canon)) orbits.insert(canon);
        return;
      }
      for (int a : out_arcs[at]) {
        if (backtrackless && !seq.empty() && reverses(seq.back(), a)) continue;
        seq.push_back(a);
        self(self, start, arcs[a].head);
        seq.pop_back();
      }
    };
    for (int v = 0; v < g.vertex_count(); ++v) dfs(dfs, v, v);
    oc.counts[len] = static_cast<long long>(orbits.size());
  }
  return oc;
}

}  // namespace

OrbitCounts brute_force_orbits(const Digraph& g, int bound) {
  return orbit_census(g, bound, false);
}

OrbitCounts brute_force_backtrackless_orbits(const Digraph& g, int bound) {
  return orbit_census(g, bound, true);
}

CheckReport check_orbit_counts(const Digraph& g, int bound) {
  CheckReport rep{.name = "orbit-counts", .bound = bound};
  const OrbitCounts formula = primitive_orbit_counts(g, bound);
  const OrbitCounts oracle = brute_force_orbits(g, bound);
  for (int l = 1; l <= bound; ++l) {
    if (formula.at(l) != oracle.at(l)) {
      std::ostringstream os;
      os << "pi(" << l << "): formula " << formula.at(l) << " != oracle " << oracle.at(l);
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

IntPoly euler_product_truncated(const std::vector<Int>& exponents, int bound) {
  IntPoly acc = IntPoly::one();
  for (int l = 1; l < static_cast<int>(exponents.size()) && l <= bound; ++l) {
    if (exponents[l] == 0) continue;
    if (exponents[l] < 0)
      throw std::invalid_argument("euler_product_truncated: negative exponent");
    // (1 - u^l)^(-e) truncated
    std::vector<Int> base(bound + 1, 0);
    base[0] = 1;
    if (l <= bound) base[l] = -1;
    acc = acc.times_truncated(
        IntPoly(std::move(base)).inverse_truncated(bound).pow_truncated(
            static_cast<unsigned>(exponents[l].convert_to<unsigned long long>()), bound),
        bound);
  }
  return acc;
}

CheckReport check_ihara_factorization(const Digraph& g, int bound) {
  if (!g.is_bidirected() || g.has_self_loop())
    throw std::invalid_argument(
        "check_ihara_factorization: graph must be bidirected and loop-free");
  CheckReport rep{.name = "ihara-factorization", .bound = bound};

  const OrbitCounts pi_all = primitive_orbit_counts(g, bound);

  // Backtrackless orbit counts from the directed-edge adjacency matrix.
  OrbitCounts pi_bt;
  pi_bt.counts.assign(bound + 1, 0);
  IntPoly det_b = IntPoly::one();
  if (g.arc_count() > 0) {
    const IntMatrix b = hashimoto_matrix(g);
    const std::vector<Int> traces = matrix_trace_powers(b, bound);
    for (int l = 1; l <= bound; ++l) {
      Int acc = 0;
      for (long long d : divisors_nat(l)) acc += mobius_nat(l / d) * traces[d - 1];
      if (acc % l != 0)
        throw std::logic_error("check_ihara_factorization: non-integral inversion for B");
      pi_bt.counts[l] = acc / l;
    }
    det_b = char_poly(b);
  }

  std::vector<Int> pi_b(bound + 1, 0);
  for (int l = 1; l <= bound; ++l) {
    pi_b[l] = pi_all.at(l) - pi_bt.at(l);
    if (pi_b[l] < 0) {
      std::ostringstream os;
      os << "length " << l << ": backtrackless orbit count " << pi_bt.at(l)
         << " exceeds total " << pi_all.at(l);
      rep.fail(os.str());
      return rep;
    }
  }

  const IntPoly zeta_a = char_poly(g).inverse_truncated(bound);
  const IntPoly zeta_a_product = euler_product_truncated(pi_all.counts, bound);
  if (!(zeta_a == zeta_a_product)) {
    rep.fail("Euler product over all primitive orbits != 1/det(I - uA): product " +
             zeta_a_product.to_string("u") + " vs " + zeta_a.to_string("u"));
    return rep;
  }

  const IntPoly zeta_i = det_b.inverse_truncated(bound);
  const IntPoly zeta_i_product = euler_product_truncated(pi_bt.counts, bound);
  if (!(zeta_i == zeta_i_product)) {
    rep.fail("Euler product over backtrackless orbits != 1/det(I - uB)");
    return rep;
  }

  const IntPoly zeta_b = euler_product_truncated(pi_b, bound);
  if (!(zeta_i.times_truncated(zeta_b, bound) == zeta_a)) {
    rep.fail("zeta_A != zeta_I * zeta_b coefficient-wise");
  }
  return rep;
}

CheckReport check_lambert_resolvent(const Digraph& g, int bound) {
  CheckReport rep{.name = "lambert-resolvent", .bound = bound};
  const OrbitCounts pi = primitive_orbit_counts(g, bound);
  const std::vector<Int> traces = adjacency_trace_powers(g, bound);
  for (int m = 1; m <= bound; ++m) {
    Int rhs = 0;
    for (long long l : divisors_nat(m)) rhs += l * pi.at(static_cast<int>(l));
    if (traces[m - 1] != rhs) {
      std::ostringstream os;
      os << "m = " << m << ": Tr(A^m) = " << traces[m - 1] << " != sum l pi(l) = " << rhs;
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

}  // namespace hikeforge
