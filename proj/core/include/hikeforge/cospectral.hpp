#pragma once

#include <vector>

#include "hikeforge/linalg.hpp"
#include "hikeforge/primes.hpp"
#include "hikeforge/report.hpp"

namespace hikeforge {

/// Exact spectral data: det(I - zA), perm(I + uA), Tr(A^k) for k = 1..n.
struct SpectralFingerprint {
  IntPoly char_poly;
  IntPoly perm_poly;
  std::vector<Int> traces;

  bool operator==(const SpectralFingerprint& o) const = default;
};

SpectralFingerprint fingerprint(const Digraph& g);

/// Prime count, dependence graph, prime lengths: the data of the hike poset.
struct HikeStructure {
  int prime_count = 0;
  SimpleGraph gamma;
  std::vector<int> lengths;  // per gamma-vertex
};

HikeStructure hike_structure(const Digraph& g);

/// Equal numbers of closed walks of every length up to max(n_a, n_b).
bool same_nonzero_spectrum(const Digraph& a, const Digraph& b);

/// Equal prime-length multisets plus a length-preserving isomorphism of the
/// dependence graphs.
bool hike_structure_equal(const Digraph& a, const Digraph& b);

/// Local rewrite on a pendant figure-eight: two simple cycles meeting only
/// at shared_vertex, with no other arcs incident to any of their vertices.
/// cycle1 is removed and re-created on fresh vertices attached to a new
/// cycle of length l1+l2 through shared_vertex; det(I - zA) is preserved
/// exactly, hence the non-zero spectrum at every order.
Digraph expand_pathsum(const Digraph& g, const Prime& cycle1, const Prime& cycle2,
                       int shared_vertex);

/// Validates a claimed cospectral-partner pair: hike structures equal, same
/// vertex count, same non-zero spectrum, digraphs non-isomorphic. The report
/// carries one condition entry per test.
CheckReport intersection_slide_check(const Digraph& a, const Digraph& b);

}  // namespace hikeforge
