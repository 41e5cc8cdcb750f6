#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hikeforge/hike.hpp"
#include "hikeforge/numeric.hpp"

namespace hikeforge {

/// A function of the reduced incidence algebra, evaluated on demand.
/// The value ring only needs +, * and a zero default-construction, so the
/// same convolution serves rationals and multivariate series alike.
template <class R>
using IncidenceFn = std::function<R(const Hike&)>;

/// Dirichlet convolution f*g(h) = sum over left divisors d of f(d) g(h/d).
/// Non-commutative in general.
template <class R>
R convolve(const PrimeCatalog& cat, const IncidenceFn<R>& f, const IncidenceFn<R>& g,
           const Hike& h) {
  const auto divisors = left_divisors(cat, h);  // never empty: contains (1, h)
  R acc = f(divisors[0].first) * g(divisors[0].second);
  for (std::size_t i = 1; i < divisors.size(); ++i)
    acc = acc + f(divisors[i].first) * g(divisors[i].second);
  return acc;
}

/// 1 at the trivial hike, (-1)^Omega on self-avoiding hikes, 0 otherwise.
int mobius(const Hike& h);

/// Truncated formal series sum_{l(h) <= bound} c(h) h with exact rational
/// coefficients, complete over every hike up to the bound. The formal
/// parameter only enters through the length grading.
struct HikeSeries {
  int bound = 0;
  std::vector<Hike> support;  // all hikes with length <= bound, fixed order
  std::unordered_map<std::string, Rat> coeff;

  Rat at(const Hike& h) const;
  Rat at_key(const std::string& key) const;
};

HikeSeries series_of(const PrimeCatalog& cat, const IncidenceFn<Rat>& f, int bound);
/// Coefficient of h is the convolution of the underlying functions; computed
/// by pairwise hike multiplication with the length-sum capped at the bound.
HikeSeries series_multiply(const PrimeCatalog& cat, const HikeSeries& x, const HikeSeries& y);
/// Right inverse: series_multiply(x, result) is the delta series. Computed
/// by length-graded forward substitution; requires a nonzero coefficient at
/// the trivial hike.
HikeSeries series_invert(const PrimeCatalog& cat, const HikeSeries& x);

bool series_equal(const HikeSeries& x, const HikeSeries& y);

// Ubiquitous incidence functions.
IncidenceFn<Rat> fn_delta();
IncidenceFn<Rat> fn_one();
IncidenceFn<Rat> fn_mobius();
IncidenceFn<Rat> fn_length();
IncidenceFn<Rat> fn_big_omega();
IncidenceFn<Rat> fn_liouville();

}  // namespace hikeforge
