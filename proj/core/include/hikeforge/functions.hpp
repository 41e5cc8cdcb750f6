#pragma once

#include <string>
#include <vector>

#include "hikeforge/incidence.hpp"
#include "hikeforge/multiseries.hpp"
#include "hikeforge/report.hpp"

namespace hikeforge {

// The named functions on hikes. length and big Omega live on the Hike
// itself; the rest need the catalog.

/// Number of distinct prime (left) divisors = size of layer 1.
int small_omega(const Hike& h);
/// Number of left divisors, tau = 1*1.
long long tau(const PrimeCatalog& cat, const Hike& h);
bool is_prime_hike(const Hike& h);
int liouville(const Hike& h);

/// Walk von Mangoldt function via Lambda = l * mu (exact divisor sum).
long long mangoldt(const PrimeCatalog& cat, const Hike& h);

/// Independent oracle: counts the contiguous representations of h, i.e. the
/// closed-walk orderings of its arc multiset that are trace-equivalent to h
/// (arcs commute iff their tails differ). Exponential; capped by length.
long long mangoldt_contiguous(const PrimeCatalog& cat, const Hike& h, int length_cap = 10);

/// Verifies f*mu(h) = f(c) on non-trivial walks (c the unique prime
/// right-divisor) and 0 elsewhere, for a totally additive f, over every hike
/// of length <= bound. Total additivity itself is spot-checked by sampling.
CheckReport check_additive_mobius(const PrimeCatalog& cat,
                                  const IncidenceFn<Rat>& f, const std::string& fname,
                                  int bound);

/// Verifies (mu f) * f = delta for a totally multiplicative f over every
/// hike of length <= bound; multiplicativity spot-checked by sampling.
CheckReport check_multiplicative_inverse(const PrimeCatalog& cat,
                                         const IncidenceFn<Rat>& f, const std::string& fname,
                                         int bound);
/// Same check in the multivariate-series ring (e.g. the per-vertex weight
/// monomial function of MacMahon's theorem).
CheckReport check_multiplicative_inverse(const PrimeCatalog& cat,
                                         const IncidenceFn<MultiSeries>& f,
                                         const std::string& fname, int nvars, int bound);

/// The per-vertex weight monomial: f(h) = prod over visited vertices of t_v,
/// one factor per visit. Totally multiplicative.
IncidenceFn<MultiSeries> fn_weight_monomial(const PrimeCatalog& cat, int bound);

/// Named function registry for the CLI: mobius|one|tau|lambda|mangoldt|
/// delta|length|omega|small-omega|prime|walk.
IncidenceFn<Rat> named_function(const PrimeCatalog& cat, const std::string& name);
std::vector<std::string> named_function_list();

}  // namespace hikeforge
