#include "hikeforge/nt_bridge.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hikeforge/functions.hpp"
#include "hikeforge/incidence.hpp"

namespace hikeforge {

Digraph disjoint_cycles_graph(const std::vector<int>& lengths) {
  int n = 0;
  std::vector<Arc> arcs;
  for (int len : lengths) {
    if (len <= 0) throw std::invalid_argument("cycle lengths must be positive");
    for (int i = 0; i < len; ++i) arcs.push_back({n + i, n + (i + 1) % len});
    n += len;
  }
  return Digraph(n, std::move(arcs));
}

namespace {

long long nth_prime(int j) {
  // j-th prime, 0-based; trial division is plenty at desk scale
  int found = 0;
  for (long long c = 2;; ++c) {
    bool prime = true;
    for (long long d = 2; d * d <= c && prime; ++d) prime = c % d != 0;
    if (prime && found++ == j) return c;
  }
}

}  // namespace

NTCorrespondence::NTCorrespondence(const PrimeCatalog& cat) {
  integer_primes.reserve(cat.size());
  for (int j = 0; j < cat.size(); ++j) integer_primes.push_back(nth_prime(j));
}

Int NTCorrespondence::value(const Hike& h) const {
  Int m = 1;
  for (int p : occurrence_multiset(h)) m *= integer_primes.at(p);
  return m;
}

int big_omega_nat(const Int& m) {
  if (m <= 0) throw std::invalid_argument("big_omega_nat: argument must be positive");
  Int v = m;
  int count = 0;
  for (Int p = 2; p * p <= v; ++p)
    while (v % p == 0) {
      v /= p;
      ++count;
    }
  if (v > 1) ++count;
  return count;
}

long long divisor_count_nat(const Int& m) {
  if (m <= 0) throw std::invalid_argument("divisor_count_nat: argument must be positive");
  Int v = m;
  long long count = 1;
  for (Int p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (v > 1) count *= 2;
  return count;
}

int mobius_nat_big(const Int& m) {
  if (m <= 0) throw std::invalid_argument("mobius_nat_big: argument must be positive");
  Int v = m;
  int factors = 0;
  for (Int p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    v /= p;
    if (v % p == 0) return 0;
    ++factors;
  }
  if (v > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

long long prime_power_base(const Int& m) {
  if (m <= 1) return 0;
  Int v = m;
  Int base = 0;
  for (Int p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    base = p;
    while (v % p == 0) v /= p;
    if (v != 1) return 0;
    return base.convert_to<long long>();
  }
  return v.convert_to<long long>();  // v itself prime
}

CheckReport check_nt_isomorphism(int k, int bound) {
  std::vector<int> lengths(k);
  std::iota(lengths.begin(), lengths.end(), 1);
  return check_nt_isomorphism(lengths, bound);
}

CheckReport check_nt_isomorphism(const std::vector<int>& lengths, int bound) {
  CheckReport rep{.name = "nt-isomorphism", .bound = bound};
  const Digraph g = disjoint_cycles_graph(lengths);
  const PrimeCatalog cat = enumerate_primes(g);
  if (cat.size() != static_cast<int>(lengths.size())) {
    rep.fail("catalog does not list one prime per cycle");
    return rep;
  }
  const NTCorrespondence phi(cat);

  for (const Hike& h : enumerate_hikes(cat, bound)) {
    const Int m = phi.value(h);
    std::ostringstream at;
    at << "h = " << (h.trivial() ? "1" : hike_key(h)) << " -> m = " << m;
    if (mobius(h) != mobius_nat_big(m)) {
      rep.fail(at.str() + ": mobius mismatch");
      return rep;
    }
    if (tau(cat, h) != divisor_count_nat(m)) {
      rep.fail(at.str() + ": tau/divisor-count mismatch");
      return rep;
    }
    if (h.omega != big_omega_nat(m)) {
      rep.fail(at.str() + ": Omega mismatch");
      return rep;
    }
    const long long lam = mangoldt(cat, h);
    const long long base = prime_power_base(m);
    if ((lam != 0) != (base != 0)) {
      rep.fail(at.str() + ": Lambda prime-power criterion mismatch");
      return rep;
    }
    if (base != 0) {
      // the graph prime paired with the integer prime `base`
      int j = -1;
      for (int i = 0; i < cat.size(); ++i)
        if (phi.integer_primes[i] == base) j = i;
      if (j < 0 || lam != cat.prime_length(j)) {
        rep.fail(at.str() + ": Lambda != length of the corresponding prime");
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace hikeforge
