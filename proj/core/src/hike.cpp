#include "hikeforge/hike.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hikeforge {

Hike trivial_hike() { return {}; }

std::string hike_key(const Hike& h) {
  std::string key;
  key.reserve(h.omega * 3 + h.layers.size());
  for (const auto& layer : h.layers) {
    for (int p : layer) {
      key += std::to_string(p);
      key += ',';
    }
    key += '|';
  }
  return key;
}

namespace {

// Stacking state: per-vertex height of the heap built so far.
struct Stacker {
  const PrimeCatalog& cat;
  Hike h;
  std::vector<int> height;

  explicit Stacker(const PrimeCatalog& cat_) : cat(cat_), height(cat_.graph_n, 0) {}

  void push(int prime) {
    if (prime < 0 || prime >= cat.size())
      throw std::invalid_argument("prime index out of catalog range");
    const Prime& p = cat.primes[prime];
    int level = 0;
    for (int v = 0; v < cat.graph_n; ++v)
      if (p.vertex_mask >> v & 1u) level = std::max(level, height[v]);
    ++level;
    if (static_cast<int>(h.layers.size()) < level) h.layers.resize(level);
    auto& layer = h.layers[level - 1];
    layer.insert(std::lower_bound(layer.begin(), layer.end(), prime), prime);
    for (int v = 0; v < cat.graph_n; ++v)
      if (p.vertex_mask >> v & 1u) height[v] = level;
    h.length += p.length();
    h.omega += 1;
  }

  void push_all(const Hike& y) {
    for (const auto& layer : y.layers)
      for (int p : layer) push(p);
  }
};

Stacker stacker_of(const PrimeCatalog& cat, const Hike& x) {
  Stacker st(cat);
  st.push_all(x);
  return st;
}

// h with one occurrence of `prime` removed from layer 1, re-stacked.
Hike remove_minimal(const PrimeCatalog& cat, const Hike& h, int prime) {
  Stacker st(cat);
  bool removed = false;
  for (std::size_t li = 0; li < h.layers.size(); ++li) {
    for (int p : h.layers[li]) {
      if (li == 0 && !removed && p == prime) {
        removed = true;
        continue;
      }
      st.push(p);
    }
  }
  if (!removed) throw std::invalid_argument("remove_minimal: prime not in layer 1");
  return std::move(st.h);
}

}  // namespace

Hike hike_from_primes(const PrimeCatalog& cat, std::span<const int> word) {
  Stacker st(cat);
  for (int p : word) st.push(p);
  return std::move(st.h);
}

Hike hike_from_primes(const PrimeCatalog& cat, std::initializer_list<int> word) {
  return hike_from_primes(cat, std::span<const int>(word.begin(), word.size()));
}

Hike multiply(const PrimeCatalog& cat, const Hike& x, const Hike& y) {
  Stacker st = stacker_of(cat, x);
  st.push_all(y);
  return std::move(st.h);
}

std::optional<Hike> left_divide(const PrimeCatalog& cat, const Hike& h, const Hike& d) {
  Hike rest = h;
  Hike need = d;
  while (!need.trivial()) {
    if (rest.trivial()) return std::nullopt;
    // any layer-1 letter of `need` that is also layer-1 in `rest`
    int common = -1;
    for (int p : need.layers[0]) {
      if (std::binary_search(rest.layers[0].begin(), rest.layers[0].end(), p)) {
        common = p;
        break;
      }
    }
    if (common < 0) return std::nullopt;
    need = remove_minimal(cat, need, common);
    rest = remove_minimal(cat, rest, common);
  }
  return rest;
}

std::vector<std::pair<Hike, Hike>> left_divisors(const PrimeCatalog& cat, const Hike& h) {
  std::vector<std::pair<Hike, Hike>> out;
  std::unordered_set<std::string> seen;
  std::vector<int> taken;
  auto dfs = [&](auto&& self, const Hike& rest) -> void {
    if (!seen.insert(hike_key(rest)).second) return;
    out.emplace_back(hike_from_primes(cat, taken), rest);
    if (rest.trivial()) return;
    for (int p : rest.layers[0]) {
      taken.push_back(p);
      self(self, remove_minimal(cat, rest, p));
      taken.pop_back();
    }
  };
  dfs(dfs, h);
  return out;
}

bool is_self_avoiding(const Hike& h) { return h.layers.size() <= 1; }

namespace {

int count_maximal(const PrimeCatalog& cat, const Hike& h, int* last_prime) {
  int count = 0;
  for (std::size_t li = 0; li < h.layers.size(); ++li) {
    for (int p : h.layers[li]) {
      const std::uint64_t mask = cat.primes[p].vertex_mask;
      bool covered = false;
      for (std::size_t lj = li + 1; lj < h.layers.size() && !covered; ++lj)
        for (int q : h.layers[lj])
          if (cat.primes[q].vertex_mask & mask) {
            covered = true;
            break;
          }
      if (!covered) {
        ++count;
        if (last_prime) *last_prime = p;
      }
    }
  }
  return count;
}

}  // namespace

bool is_walk(const PrimeCatalog& cat, const Hike& h) {
  return !h.trivial() && count_maximal(cat, h, nullptr) == 1;
}

int unique_prime_right_divisor(const PrimeCatalog& cat, const Hike& h) {
  if (h.trivial()) return -1;
  int prime = -1;
  if (count_maximal(cat, h, &prime) != 1) return -1;
  return prime;
}

std::vector<Hike> enumerate_hikes(const PrimeCatalog& cat, int max_length, std::size_t cap) {
  if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
  std::vector<std::vector<Hike>> bucket(max_length + 1);
  std::unordered_set<std::string> seen;
  bucket[0].push_back(trivial_hike());
  seen.insert(hike_key(trivial_hike()));
  std::size_t total = 1;

  for (int len = 0; len <= max_length; ++len) {
    auto& cur = bucket[len];
    std::sort(cur.begin(), cur.end(),
              [](const Hike& a, const Hike& b) { return hike_key(a) < hike_key(b); });
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (int p = 0; p < cat.size(); ++p) {
        const int nlen = len + cat.prime_length(p);
        if (nlen > max_length) continue;
        Stacker st = stacker_of(cat, cur[i]);
        st.push(p);
        if (seen.insert(hike_key(st.h)).second) {
          if (++total > cap) throw std::length_error("enumerate_hikes: count cap exceeded");
          bucket[nlen].push_back(std::move(st.h));
        }
      }
    }
  }

  std::vector<Hike> out;
  out.reserve(total);
  for (auto& b : bucket)
    for (Hike& h : b) out.push_back(std::move(h));
  return out;
}

std::vector<int> occurrence_multiset(const Hike& h) {
  std::vector<int> out;
  out.reserve(h.omega);
  for (const auto& layer : h.layers) out.insert(out.end(), layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> visit_counts(const PrimeCatalog& cat, const Hike& h) {
  std::vector<int> counts(cat.graph_n, 0);
  for (const auto& layer : h.layers)
    for (int p : layer)
      for (const Arc& a : cat.primes[p].arcs) ++counts[a.head];
  return counts;
}

std::uint64_t hike_vertex_mask(const PrimeCatalog& cat, const Hike& h) {
  std::uint64_t mask = 0;
  for (const auto& layer : h.layers)
    for (int p : layer) mask |= cat.primes[p].vertex_mask;
  return mask;
}

}  // namespace hikeforge
