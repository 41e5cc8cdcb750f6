#pragma once

#include <vector>

#include "hikeforge/hike.hpp"
#include "hikeforge/numeric.hpp"
#include "hikeforge/report.hpp"

namespace hikeforge {

/// Digraph made of vertex-disjoint directed cycles of the given lengths.
/// On such a graph all primes commute and hike arithmetic collapses to
/// integer arithmetic.
Digraph disjoint_cycles_graph(const std::vector<int>& lengths);

/// The monoid homomorphism h -> product of p_j^{multiplicity of prime j},
/// pairing the j-th catalog prime with the j-th integer prime.
struct NTCorrespondence {
  std::vector<long long> integer_primes;  // one per catalog prime

  explicit NTCorrespondence(const PrimeCatalog& cat);
  Int value(const Hike& h) const;
};

// Integer-side counterparts (trial factorization; desk-scale arguments).
int big_omega_nat(const Int& m);
long long divisor_count_nat(const Int& m);
int mobius_nat_big(const Int& m);
/// If m = p^k with k >= 1, returns p; else 0.
long long prime_power_base(const Int& m);

/// On a union of k disjoint cycles with lengths 1..k: for every hike with
/// length <= bound and image m, checks mu(h) = mu_N(m), tau(h) = d(m),
/// Omega(h) = Omega_N(m), and the Lambda prime-power criterion
/// (Lambda(h) != 0 iff m = p_j^r, and then Lambda(h) = l(c_j)).
CheckReport check_nt_isomorphism(int k, int bound);
CheckReport check_nt_isomorphism(const std::vector<int>& lengths, int bound);

}  // namespace hikeforge
