#pragma once

#include <vector>

#include "hikeforge/hike.hpp"
#include "hikeforge/linalg.hpp"
#include "hikeforge/report.hpp"

namespace hikeforge {

/// counts[l] = number of primitive orbits of length l (index 0 unused).
struct OrbitCounts {
  std::vector<Int> counts;

  int max_length() const { return static_cast<int>(counts.size()) - 1; }
  const Int& at(int l) const { return counts.at(l); }
  bool operator==(const OrbitCounts& o) const { return counts == o.counts; }
};

/// Number-theoretic Mobius function by trial factorization.
int mobius_nat(long long m);
std::vector<long long> divisors_nat(long long m);

/// Signed self-avoiding hike census: entry k = sum of mu over self-avoiding
/// hikes of length k (clique enumeration over the independence structure).
std::vector<Int> self_avoiding_signed_by_length(const PrimeCatalog& cat, int max_length);
/// Entry k = number of self-avoiding hikes of length k.
std::vector<Int> self_avoiding_count_by_length(const PrimeCatalog& cat, int max_length);

/// det(I - zA) coefficient k == sum of mu over hikes of length k, for all
/// degrees <= min(bound, n).
CheckReport check_det_mobius(const Digraph& g, int bound);

/// (a) permanental coefficients count the self-avoiding hikes by length;
/// (b) (sum over hikes of liouville(h) u^l(h)) * perm(I + uA) == 1 mod
/// u^(bound+1). Abelianization arc -> u throughout.
CheckReport check_perm_liouville(const Digraph& g, int bound);

/// Truncated inverse of det(I - TA) equals the sum over hikes of their
/// per-vertex visit monomials, to total degree `degree`.
CheckReport check_macmahon(const Digraph& g, int degree);

/// sum_{l(h) = k} Lambda(h) == Tr(A^k) for 1 <= k <= bound; Lambda computed
/// per hike by the convolution route (batched as the series product of the
/// length and Mobius series).
CheckReport check_trace_mangoldt(const Digraph& g, int bound);

/// Mobius inversion of the trace sequence:
/// pi(l) = (1/l) sum_{n | l} mu_N(l/n) Tr(A^n). The division must be exact;
/// a non-integral value signals an internal bug (std::logic_error).
OrbitCounts primitive_orbit_counts(const Digraph& g, int bound);

/// Independent oracle: enumerate closed-walk arc strings, group by rotation,
/// discard proper powers.
OrbitCounts brute_force_orbits(const Digraph& g, int bound);

/// Backtrackless variant of the oracle (cyclically no arc followed by its
/// reversal), for the Ihara side.
OrbitCounts brute_force_backtrackless_orbits(const Digraph& g, int bound);

/// Compares the two orbit computations (CLI/test convenience).
CheckReport check_orbit_counts(const Digraph& g, int bound);

/// For a loop-free bidirected graph: Euler products over primitive orbits
/// (all orbits from Tr(A^n), backtrackless from the Hashimoto matrix) must
/// reproduce 1/det(I-uA) and 1/det(I-uB) coefficient-wise to the bound, the
/// backtrack-bearing exponents pi_all - pi_backtrackless must all be >= 0,
/// and the three-way factorization must close multiplicatively.
CheckReport check_ihara_factorization(const Digraph& g, int bound);

/// Tr(A^m) == sum_{l | m} l pi(l) for 1 <= m <= bound (Lambert form of the
/// resolvent trace).
CheckReport check_lambert_resolvent(const Digraph& g, int bound);

/// prod_{l <= bound} (1 - u^l)^(-exponents[l]) truncated past the bound.
IntPoly euler_product_truncated(const std::vector<Int>& exponents, int bound);

}  // namespace hikeforge
