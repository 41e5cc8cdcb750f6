#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hikeforge/primes.hpp"

namespace hikeforge {

/// An element of the trace monoid of hikes, stored only in Cartier-Foata
/// normal form: ordered layers of prime indices, each layer sorted.
///
/// Invariants:
///  - within a layer, primes are pairwise vertex-disjoint (a clique of the
///    independence graph), so an index appears at most once per layer;
///  - every occurrence in layer k+1 shares a vertex with some occurrence in
///    layer k;
///  - the empty layer list is the trivial hike 1.
struct Hike {
  std::vector<std::vector<int>> layers;
  int length = 0;  // total arc count
  int omega = 0;   // prime occurrences, counted with multiplicity

  bool trivial() const { return layers.empty(); }
  bool operator==(const Hike& o) const { return layers == o.layers; }
};

Hike trivial_hike();

/// Canonical serialization of the layers; equal hikes <=> equal keys.
std::string hike_key(const Hike& h);

/// Foata normal form of a product of primes, built by heap stacking: each
/// prime falls to 1 + the max stack height over its vertices.
Hike hike_from_primes(const PrimeCatalog& cat, std::span<const int> word);
Hike hike_from_primes(const PrimeCatalog& cat, std::initializer_list<int> word);

/// Normal form of the concatenation x.y; associative, identity 1.
Hike multiply(const PrimeCatalog& cat, const Hike& x, const Hike& y);

/// The quotient h/d when d left-divides h, else nullopt. Works by repeated
/// removal of a prime occurrence minimal in both d and the rest of h;
/// minimal-letter removal in a trace monoid is confluent, so any choice of
/// common letter is sound.
std::optional<Hike> left_divide(const PrimeCatalog& cat, const Hike& h, const Hike& d);

/// All pairs (d, h/d) with d a left divisor of h, including (1, h) and
/// (h, 1). DFS over removals of layer-1 occurrences, memoized on the
/// remainder's key; the divisor is determined by the remainder since the
/// monoid is cancellative.
std::vector<std::pair<Hike, Hike>> left_divisors(const PrimeCatalog& cat, const Hike& h);

/// True iff h has at most one layer.
bool is_self_avoiding(const Hike& h);

/// True iff h != 1 and exactly one occurrence is maximal (no occurrence in a
/// later layer intersects its vertex set); such hikes are the closed walks.
bool is_walk(const PrimeCatalog& cat, const Hike& h);

/// Prime index of the unique maximal occurrence of a walk, or -1.
int unique_prime_right_divisor(const PrimeCatalog& cat, const Hike& h);

/// Every hike with length <= max_length exactly once, in non-decreasing
/// length order (BFS over right multiplication by primes, deduplicated).
/// Deterministic: hikes of equal length are ordered by key.
std::vector<Hike> enumerate_hikes(const PrimeCatalog& cat, int max_length,
                                  std::size_t cap = default_enumeration_cap());

/// Flattened, sorted prime indices of h (with multiplicity).
std::vector<int> occurrence_multiset(const Hike& h);

/// Per-vertex visit counts (= arcs of h entering each vertex).
std::vector<int> visit_counts(const PrimeCatalog& cat, const Hike& h);

std::uint64_t hike_vertex_mask(const PrimeCatalog& cat, const Hike& h);

}  // namespace hikeforge
