#include "hikeforge/functions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hikeforge {

int small_omega(const Hike& h) {
  return h.trivial() ? 0 : static_cast<int>(h.layers[0].size());
}

long long tau(const PrimeCatalog& cat, const Hike& h) {
  return static_cast<long long>(left_divisors(cat, h).size());
}

bool is_prime_hike(const Hike& h) { return h.omega == 1; }

int liouville(const Hike& h) { return h.omega % 2 == 0 ? 1 : -1; }

long long mangoldt(const PrimeCatalog& cat, const Hike& h) {
  long long acc = 0;
  for (const auto& [d, q] : left_divisors(cat, h)) acc += static_cast<long long>(d.length) * mobius(q);
  return acc;
}

namespace {

// Foata normal form over the arc alphabet: arcs commute iff their tails
// differ, so a letter falls to 1 + the height at its tail.
std::string arc_trace_key(const std::vector<Arc>& word, int n) {
  std::vector<int> height(n, 0);
  std::vector<std::vector<Arc>> layers;
  for (const Arc& a : word) {
    const int level = height[a.tail] + 1;
    if (static_cast<int>(layers.size()) < level) layers.resize(level);
    layers[level - 1].push_back(a);
    height[a.tail] = level;
  }
  std::string key;
  for (auto& layer : layers) {
    std::sort(layer.begin(), layer.end());
    for (const Arc& a : layer) {
      key += std::to_string(a.tail);
      key += '>';
      key += std::to_string(a.head);
      key += ',';
    }
    key += '|';
  }
  return key;
}

// Reference linearization of a hike as an arc word: layers in order, primes
// within a layer in index order, each prime as its canonical arc sequence.
std::vector<Arc> reference_arc_word(const PrimeCatalog& cat, const Hike& h) {
  std::vector<Arc> word;
  word.reserve(h.length);
  for (const auto& layer : h.layers)
    for (int p : layer)
      for (const Arc& a : cat.primes[p].arcs) word.push_back(a);
  return word;
}

}  // namespace

long long mangoldt_contiguous(const PrimeCatalog& cat, const Hike& h, int length_cap) {
  if (h.length > length_cap)
    throw std::length_error("mangoldt_contiguous: hike length exceeds the oracle cap");
  if (h.trivial()) return 0;

  const std::string target = arc_trace_key(reference_arc_word(cat, h), cat.graph_n);

  // arc multiset of h
  std::map<Arc, int> remaining;
  for (const auto& layer : h.layers)
    for (int p : layer)
      for (const Arc& a : cat.primes[p].arcs) ++remaining[a];

  long long count = 0;
  std::vector<Arc> seq;
  seq.reserve(h.length);
  auto dfs = [&](auto&& self, int at) -> void {
    if (static_cast<int>(seq.size()) == h.length) {
      if (at == seq.front().tail && arc_trace_key(seq, cat.graph_n) == target) ++count;
      return;
    }
    for (auto& [arc, left] : remaining) {
      if (left == 0 || arc.tail != at) continue;
      --left;
      seq.push_back(arc);
      self(self, arc.head);
      seq.pop_back();
      ++left;
    }
  };
  // distinct start arcs give distinct contiguous strings
  std::vector<int> starts;
  for (const auto& [arc, cnt] : remaining)
    if (std::find(starts.begin(), starts.end(), arc.tail) == starts.end())
      starts.push_back(arc.tail);
  for (int s : starts) dfs(dfs, s);
  return count;
}

namespace {

std::vector<Hike> sample_hikes(const PrimeCatalog& cat, int count, int max_word, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Hike> out;
  if (cat.size() == 0) return out;
  std::uniform_int_distribution<int> len(0, max_word);
  std::uniform_int_distribution<int> pick(0, cat.size() - 1);
  for (int i = 0; i < count; ++i) {
    std::vector<int> word(len(rng));
    for (int& w : word) w = pick(rng);
    out.push_back(hike_from_primes(cat, word));
  }
  return out;
}

std::string describe(const Hike& h) {
  std::string s = hike_key(h);
  return s.empty() ? std::string("1") : s;
}

}  // namespace

CheckReport check_additive_mobius(const PrimeCatalog& cat, const IncidenceFn<Rat>& f,
                                  const std::string& fname, int bound) {
  CheckReport rep{.name = "additive-mobius(" + fname + ")", .bound = bound};
  // precondition sampling: f(xy) = f(x) + f(y)
  auto samples = sample_hikes(cat, 32, 3, 12345);
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const Hike prod = multiply(cat, samples[i], samples[i + 1]);
    if (f(prod) != f(samples[i]) + f(samples[i + 1])) {
      rep.fail("sampled total-additivity violation at " + describe(prod));
      return rep;
    }
  }
  for (const Hike& h : enumerate_hikes(cat, bound)) {
    const Rat got = convolve<Rat>(cat, f, fn_mobius(), h);
    Rat want = 0;
    if (!h.trivial()) {
      const int c = unique_prime_right_divisor(cat, h);
      if (c >= 0) want = f(hike_from_primes(cat, {c}));
    }
    if (got != want) {
      std::ostringstream os;
      os << "h = " << describe(h) << ": f*mu = " << got << ", expected " << want;
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

namespace {

template <class R>
bool multiplicative_inverse_holds(const PrimeCatalog& cat, const IncidenceFn<R>& f,
                                  const R& one, const R& zero, int bound, std::string* why) {
  auto samples = sample_hikes(cat, 32, 3, 54321);
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const Hike prod = multiply(cat, samples[i], samples[i + 1]);
    if (!(f(prod) == f(samples[i]) * f(samples[i + 1]))) {
      *why = "sampled total-multiplicativity violation at " + describe(prod);
      return false;
    }
  }
  IncidenceFn<R> mu_f = [&f, &zero](const Hike& h) -> R {
    const int m = mobius(h);
    if (m == 0) return zero;
    R v = f(h);
    return m == 1 ? v : zero - v;
  };
  for (const Hike& h : enumerate_hikes(cat, bound)) {
    const R got = convolve<R>(cat, mu_f, f, h);
    const R& want = h.trivial() ? one : zero;
    if (!(got == want)) {
      *why = "h = " + describe(h) + ": (mu f)*f != delta";
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_multiplicative_inverse(const PrimeCatalog& cat, const IncidenceFn<Rat>& f,
                                         const std::string& fname, int bound) {
  CheckReport rep{.name = "multiplicative-inverse(" + fname + ")", .bound = bound};
  std::string why;
  if (!multiplicative_inverse_holds<Rat>(cat, f, Rat(1), Rat(0), bound, &why)) rep.fail(why);
  return rep;
}

CheckReport check_multiplicative_inverse(const PrimeCatalog& cat,
                                         const IncidenceFn<MultiSeries>& f,
                                         const std::string& fname, int nvars, int bound) {
  CheckReport rep{.name = "multiplicative-inverse(" + fname + ")", .bound = bound};
  std::string why;
  const MultiSeries one = MultiSeries::constant(nvars, bound, 1);
  const MultiSeries zero(nvars, bound);
  if (!multiplicative_inverse_holds<MultiSeries>(cat, f, one, zero, bound, &why)) rep.fail(why);
  return rep;
}

IncidenceFn<MultiSeries> fn_weight_monomial(const PrimeCatalog& cat, int bound) {
  const int n = cat.graph_n;
  return [&cat, n, bound](const Hike& h) {
    return MultiSeries::monomial(n, bound, visit_counts(cat, h));
  };
}

IncidenceFn<Rat> named_function(const PrimeCatalog& cat, const std::string& name) {
  if (name == "mobius") return fn_mobius();
  if (name == "one") return fn_one();
  if (name == "delta") return fn_delta();
  if (name == "length") return fn_length();
  if (name == "omega") return fn_big_omega();
  if (name == "lambda") return fn_liouville();
  if (name == "small-omega")
    return [](const Hike& h) { return Rat(small_omega(h)); };
  if (name == "prime")
    return [](const Hike& h) { return Rat(is_prime_hike(h) ? 1 : 0); };
  if (name == "tau")
    return [&cat](const Hike& h) { return Rat(tau(cat, h)); };
  if (name == "mangoldt")
    return [&cat](const Hike& h) { return Rat(mangoldt(cat, h)); };
  if (name == "walk")
    return [&cat](const Hike& h) { return Rat(is_walk(cat, h) ? 1 : 0); };
  throw std::invalid_argument("unknown function name: " + name);
}

std::vector<std::string> named_function_list() {
  return {"mobius", "one",   "tau",   "lambda", "mangoldt", "delta",
          "length", "omega", "small-omega", "prime",  "walk"};
}

}  // namespace hikeforge
