#pragma once

#include <map>
#include <string>
#include <vector>

#include "hikeforge/digraph.hpp"
#include "hikeforge/numeric.hpp"

namespace hikeforge {

/// Truncated multivariate series over per-vertex variables t_0..t_{n-1},
/// exact rational coefficients, all stored exponent vectors of total
/// degree <= bound. Arithmetic discards terms beyond the bound.
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(int nvars, int bound) : nvars_(nvars), bound_(bound) {}
  static MultiSeries constant(int nvars, int bound, const Rat& c);
  static MultiSeries monomial(int nvars, int bound, const std::vector<int>& exps,
                              const Rat& c = 1);

  int nvars() const { return nvars_; }
  int bound() const { return bound_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  Rat coeff(const std::vector<int>& exps) const;
  void add_term(const std::vector<int>& exps, const Rat& c);

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator-(const MultiSeries& o) const;
  MultiSeries operator*(const MultiSeries& o) const;
  /// Series inverse; requires a nonzero constant term.
  MultiSeries inverse() const;

  bool operator==(const MultiSeries& o) const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  int bound_ = 0;
  std::map<std::vector<int>, Rat> terms_;  // zero coefficients never stored
};

/// det(I - T A) for the digraph's 0/1 adjacency A, where the arc (i,j)
/// carries the weight t_j of its head; Leibniz expansion, exponential in n.
MultiSeries weighted_adjacency_determinant(const Digraph& g, int bound, int vertex_cap = 8);

}  // namespace hikeforge
