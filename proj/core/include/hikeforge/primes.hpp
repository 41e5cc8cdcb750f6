#pragma once

#include <cstdint>
#include <vector>

#include "hikeforge/digraph.hpp"

namespace hikeforge {

/// Canonical representative of a simple cycle: the contiguous arc sequence
/// rotated to start at its minimum vertex. A self-loop has length 1.
struct Prime {
  std::vector<Arc> arcs;
  std::uint64_t vertex_mask = 0;

  int length() const { return static_cast<int>(arcs.size()); }
  int min_vertex() const { return arcs.front().tail; }
  std::vector<int> vertices() const;
  bool operator==(const Prime& o) const { return arcs == o.arcs; }
};

Prime make_prime(const std::vector<Arc>& cycle_arcs);

/// The alphabet of the hike monoid: every elementary circuit of a digraph,
/// sorted by (length, arc sequence). Two primes are dependent iff their
/// vertex sets intersect.
struct PrimeCatalog {
  int graph_n = 0;
  std::vector<Prime> primes;

  int size() const { return static_cast<int>(primes.size()); }
  bool dependent(int i, int j) const {
    return (primes[i].vertex_mask & primes[j].vertex_mask) != 0;
  }
  int prime_length(int i) const { return primes[i].length(); }
  /// Index of an equal canonical prime, or -1.
  int find(const Prime& p) const;

  /// Edge (i,j) iff vertex sets disjoint.
  SimpleGraph independence_graph() const;
  /// Complement of the independence graph; no self-loops.
  SimpleGraph dependence_graph() const;
  /// Multiset of prime lengths, sorted.
  std::vector<int> length_multiset() const;
};

/// Enumeration cap; reads HIKE_FORGE_CAP when set, else 10^6.
std::size_t default_enumeration_cap();

/// Johnson-style elementary-circuit enumeration (output-sensitive cost).
/// Throws std::length_error when the catalog would exceed the cap.
PrimeCatalog enumerate_primes(const Digraph& g, std::size_t cap = default_enumeration_cap());

}  // namespace hikeforge
