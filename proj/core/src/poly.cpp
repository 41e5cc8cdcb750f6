#include "hikeforge/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hikeforge {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::monomial(Int c, int degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(int(i)) + o.coeff(int(i));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(int(i)) - o.coeff(int(i));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::truncated(int cap) const {
  if (cap < 0) return {};
  std::vector<Int> v(coeffs_.begin(),
                     coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), cap + 1));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::times_truncated(const IntPoly& o, int cap) const {
  if (is_zero() || o.is_zero() || cap < 0) return {};
  std::vector<Int> v(std::min<int>(cap, degree() + o.degree()) + 1);
  for (std::size_t i = 0; i < coeffs_.size() && int(i) <= cap; ++i)
    for (std::size_t j = 0; j < o.coeffs_.size() && int(i + j) <= cap; ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::inverse_truncated(int cap) const {
  if (is_zero() || (coeffs_[0] != 1 && coeffs_[0] != -1))
    throw std::invalid_argument("IntPoly::inverse_truncated: constant term must be +-1");
  const Int c0 = coeffs_[0];
  std::vector<Int> inv(cap + 1);
  inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (int k = 1; k <= cap; ++k) {
    Int acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeff(j) * inv[k - j];
    inv[k] = -acc * c0;
  }
  return IntPoly(std::move(inv));
}

IntPoly IntPoly::pow_truncated(unsigned e, int cap) const {
  IntPoly acc = IntPoly::one();
  IntPoly base = truncated(cap);
  while (e != 0) {
    if (e & 1u) acc = acc.times_truncated(base, cap);
    base = base.times_truncated(base, cap);
    e >>= 1u;
  }
  return acc;
}

std::string IntPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Int a = abs(c);
    if (k == 0 || a != 1) os << a.str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hikeforge
