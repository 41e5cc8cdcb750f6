#pragma once

#include <string>
#include <vector>

#include "hikeforge/numeric.hpp"

namespace hikeforge {

/// Exact univariate integer polynomial; coefficient index = degree.
/// Normalized form never stores trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, int degree);
  static IntPoly one() { return constant(1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Int& coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  /// Drop all terms of degree > cap.
  IntPoly truncated(int cap) const;
  IntPoly times_truncated(const IntPoly& o, int cap) const;
  /// Power series inverse modulo x^(cap+1); requires coeff(0) == +-1.
  IntPoly inverse_truncated(int cap) const;
  IntPoly pow_truncated(unsigned e, int cap) const;

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string(const char* var = "z") const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

}  // namespace hikeforge
