#include "hikeforge/incidence.hpp"

#include <stdexcept>

namespace hikeforge {

int mobius(const Hike& h) {
  if (h.trivial()) return 1;
  if (!is_self_avoiding(h)) return 0;
  return h.omega % 2 == 0 ? 1 : -1;
}

Rat HikeSeries::at(const Hike& h) const { return at_key(hike_key(h)); }

Rat HikeSeries::at_key(const std::string& key) const {
  auto it = coeff.find(key);
  return it == coeff.end() ? Rat(0) : it->second;
}

HikeSeries series_of(const PrimeCatalog& cat, const IncidenceFn<Rat>& f, int bound) {
  HikeSeries s;
  s.bound = bound;
  s.support = enumerate_hikes(cat, bound);
  for (const Hike& h : s.support) {
    Rat v = f(h);
    if (v != 0) s.coeff.emplace(hike_key(h), std::move(v));
  }
  return s;
}

HikeSeries series_multiply(const PrimeCatalog& cat, const HikeSeries& x, const HikeSeries& y) {
  HikeSeries out;
  out.bound = std::min(x.bound, y.bound);
  const HikeSeries& shorter = x.bound <= y.bound ? x : y;
  out.support.reserve(shorter.support.size());
  for (const Hike& h : shorter.support)
    if (h.length <= out.bound) out.support.push_back(h);

  for (const Hike& a : x.support) {
    if (a.length > out.bound) continue;
    const Rat ca = x.at_key(hike_key(a));
    if (ca == 0) continue;
    for (const Hike& b : y.support) {
      if (a.length + b.length > out.bound) continue;
      const Rat cb = y.at_key(hike_key(b));
      if (cb == 0) continue;
      std::string key = hike_key(multiply(cat, a, b));
      Rat& slot = out.coeff[key];
      slot += ca * cb;
      if (slot == 0) out.coeff.erase(key);
    }
  }
  return out;
}

HikeSeries series_invert(const PrimeCatalog& cat, const HikeSeries& x) {
  const Rat c0 = x.at(trivial_hike());
  if (c0 == 0)
    throw std::invalid_argument("series_invert: coefficient at the trivial hike is zero");
  HikeSeries inv;
  inv.bound = x.bound;
  inv.support = x.support;
  // support is length-graded, so h/d with d != 1 is already solved
  for (const Hike& h : inv.support) {
    if (h.trivial()) {
      inv.coeff[hike_key(h)] = 1 / c0;
      continue;
    }
    Rat acc = 0;
    for (const auto& [d, q] : left_divisors(cat, h)) {
      if (d.trivial()) continue;
      acc += x.at(d) * inv.at(q);
    }
    Rat v = -acc / c0;
    if (v != 0) inv.coeff.emplace(hike_key(h), std::move(v));
  }
  return inv;
}

bool series_equal(const HikeSeries& x, const HikeSeries& y) {
  if (x.bound != y.bound) return false;
  for (const Hike& h : x.support)
    if (x.at(h) != y.at(h)) return false;
  return x.support.size() == y.support.size();
}

IncidenceFn<Rat> fn_delta() {
  return [](const Hike& h) { return Rat(h.trivial() ? 1 : 0); };
}

IncidenceFn<Rat> fn_one() {
  return [](const Hike&) { return Rat(1); };
}

IncidenceFn<Rat> fn_mobius() {
  return [](const Hike& h) { return Rat(mobius(h)); };
}

IncidenceFn<Rat> fn_length() {
  return [](const Hike& h) { return Rat(h.length); };
}

IncidenceFn<Rat> fn_big_omega() {
  return [](const Hike& h) { return Rat(h.omega); };
}

IncidenceFn<Rat> fn_liouville() {
  return [](const Hike& h) { return Rat(h.omega % 2 == 0 ? 1 : -1); };
}

}  // namespace hikeforge
