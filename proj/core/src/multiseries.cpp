#include "hikeforge/multiseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hikeforge {

namespace {
int total_degree(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}
}  // namespace

MultiSeries MultiSeries::constant(int nvars, int bound, const Rat& c) {
  MultiSeries s(nvars, bound);
  s.add_term(std::vector<int>(nvars, 0), c);
  return s;
}

MultiSeries MultiSeries::monomial(int nvars, int bound, const std::vector<int>& exps,
                                  const Rat& c) {
  MultiSeries s(nvars, bound);
  s.add_term(exps, c);
  return s;
}

Rat MultiSeries::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiSeries::add_term(const std::vector<int>& exps, const Rat& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("MultiSeries: exponent vector arity mismatch");
  if (c == 0 || total_degree(exps) > bound_) return;
  Rat& slot = terms_[exps];
  slot += c;
  if (slot == 0) terms_.erase(exps);
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  MultiSeries out(nvars_, std::min(bound_, o.bound_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const {
  MultiSeries out(nvars_, std::min(bound_, o.bound_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  MultiSeries out(nvars_, std::min(bound_, o.bound_));
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + total_degree(eb) > out.bound_) continue;
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

// All exponent vectors with total degree <= bound, graded order.
void enumerate_exponents(int nvars, int bound, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  for (int d = 0; d <= bound; ++d) {
    std::size_t before = out.size();
    rec(rec, 0, d);
    // keep only exact degree d from this pass
    out.erase(std::remove_if(out.begin() + before, out.end(),
                             [&](const std::vector<int>& e) { return total_degree(e) != d; }),
              out.end());
  }
}

}  // namespace

MultiSeries MultiSeries::inverse() const {
  const std::vector<int> zero(nvars_, 0);
  const Rat c0 = coeff(zero);
  if (c0 == 0) throw std::invalid_argument("MultiSeries::inverse: zero constant term");

  std::vector<std::vector<int>> monomials;
  enumerate_exponents(nvars_, bound_, monomials);

  MultiSeries inv(nvars_, bound_);
  inv.add_term(zero, 1 / c0);
  std::vector<int> diff(nvars_);
  for (const auto& m : monomials) {
    if (m == zero) continue;
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      if (e == zero) continue;
      bool fits = true;
      for (int i = 0; i < nvars_ && fits; ++i) {
        diff[i] = m[i] - e[i];
        fits = diff[i] >= 0;
      }
      if (fits) acc += c * inv.coeff(diff);
    }
    if (acc != 0) inv.add_term(m, -acc / c0);
  }
  return inv;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string MultiSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*t" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiSeries weighted_adjacency_determinant(const Digraph& g, int bound, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap)
    throw std::length_error("weighted_adjacency_determinant: vertex count exceeds cap");
  MultiSeries det(n, bound);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> exps(n);
  do {
    // sign of the permutation from its cycle count
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    const int sign = ((n - cycles) % 2 == 0) ? 1 : -1;

    // product over i of (I - TA)_{i,perm(i)}: diagonal entries contribute
    // 1 - t_i [A_ii], off-diagonal -t_{perm(i)} A_{i,perm(i)}
    MultiSeries term = MultiSeries::constant(n, bound, sign);
    bool vanish = false;
    for (int i = 0; i < n && !vanish; ++i) {
      const int j = perm[i];
      const bool arc = g.has_arc(i, j);
      if (i == j) {
        if (!arc) continue;  // entry is 1
        std::fill(exps.begin(), exps.end(), 0);
        exps[j] = 1;
        MultiSeries entry = MultiSeries::constant(n, bound, 1) -
                            MultiSeries::monomial(n, bound, exps);
        term = term * entry;
      } else {
        if (!arc) {
          vanish = true;
          break;
        }
        std::fill(exps.begin(), exps.end(), 0);
        exps[j] = 1;
        term = term * MultiSeries::monomial(n, bound, exps, -1);
      }
    }
    if (!vanish) det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace hikeforge
