#include "hikeforge/worked_examples.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hikeforge/cospectral.hpp"
#include "hikeforge/fixtures.hpp"
#include "hikeforge/functions.hpp"
#include "hikeforge/incidence.hpp"
#include "hikeforge/reconstruct.hpp"

namespace hikeforge {

namespace {

CheckReport pentagon_mobius_series() {
  CheckReport rep{.name = "pentagon-mobius-series", .bound = 10};
  const Digraph g = fixtures::crossed_pentagon();
  const PrimeCatalog cat = enumerate_primes(g);
  if (cat.size() != 7) {
    rep.fail("prime catalog has " + std::to_string(cat.size()) + " entries, expected 7");
    return rep;
  }

  // Label map fixed by the backtracks' vertex pairs; the two pentagons are
  // the length-5 primes. Independence forms the 5-cycle a-c-e-b-d, so the
  // expected nonzero terms are 1, the seven primes (coefficient -1), and
  // the five products ac, ad, bd, be, ce (coefficient +1).
  const std::map<char, std::set<int>> backtrack_of = {
      {'a', {0, 2}}, {'b', {2, 4}}, {'c', {1, 4}}, {'d', {1, 3}}, {'e', {0, 3}}};
  std::map<char, int> index_of;
  for (const auto& [label, vs] : backtrack_of) {
    for (int i = 0; i < cat.size(); ++i) {
      const auto verts = cat.primes[i].vertices();
      if (cat.prime_length(i) == 2 && std::set<int>(verts.begin(), verts.end()) == vs)
        index_of[label] = i;
    }
  }
  std::vector<int> pentagons;
  for (int i = 0; i < cat.size(); ++i)
    if (cat.prime_length(i) == 5) pentagons.push_back(i);
  if (index_of.size() != 5 || pentagons.size() != 2) {
    rep.fail("catalog does not consist of 5 backtracks and 2 pentagons");
    return rep;
  }

  std::map<std::string, int> expected;
  expected[hike_key(trivial_hike())] = 1;
  for (int i = 0; i < cat.size(); ++i) expected[hike_key(hike_from_primes(cat, {i}))] = -1;
  for (const char* pair : {"ac", "ad", "bd", "be", "ce"}) {
    const Hike h = hike_from_primes(cat, {index_of[pair[0]], index_of[pair[1]]});
    if (h.layers.size() != 1) {
      rep.fail(std::string("pair ") + pair + " is not vertex-disjoint under the label map");
      return rep;
    }
    expected[hike_key(h)] = 1;
  }

  const HikeSeries series = series_of(cat, fn_mobius(), rep.bound);
  for (const Hike& h : series.support) {
    const auto it = expected.find(hike_key(h));
    const Rat want = it == expected.end() ? Rat(0) : Rat(it->second);
    if (series.at(h) != want) {
      std::ostringstream os;
      os << "coefficient at " << (h.trivial() ? "1" : hike_key(h)) << " is " << series.at(h)
         << ", expected " << want;
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

CheckReport mangoldt_worked_example() {
  CheckReport rep{.name = "mangoldt-worked-example", .bound = 5};
  const Digraph g = fixtures::backtrack_triangle();
  const PrimeCatalog cat = enumerate_primes(g);
  int backtrack = -1, triangle = -1;
  for (int i = 0; i < cat.size(); ++i)
    (cat.prime_length(i) == 2 ? backtrack : triangle) = i;
  if (cat.size() != 2 || backtrack < 0 || triangle < 0) {
    rep.fail("expected exactly one backtrack and one triangle");
    return rep;
  }
  const Hike p1p2 = hike_from_primes(cat, {backtrack, triangle});
  const Hike p2p1 = hike_from_primes(cat, {triangle, backtrack});
  struct Case {
    const char* name;
    const Hike& h;
    long long expected;
  } cases[] = {{"Lambda(p1p2)", p1p2, 3}, {"Lambda(p2p1)", p2p1, 2}};
  for (const auto& c : cases) {
    const long long by_conv = mangoldt(cat, c.h);
    const long long by_oracle = mangoldt_contiguous(cat, c.h);
    if (by_conv != c.expected || by_oracle != c.expected) {
      std::ostringstream os;
      os << c.name << ": convolution " << by_conv << ", contiguity " << by_oracle
         << ", expected " << c.expected;
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

CheckReport reconstruction_demo() {
  CheckReport rep{.name = "reconstruction-demo"};
  const SimpleGraph gamma = fixtures::reconstruction_demo_gamma();
  const ReconstructionResult res = reconstruct(gamma);
  if (res.outcome != ReconstructionResult::Outcome::Unique) {
    rep.fail("reconstruction did not come back unique: " + res.reason);
    return rep;
  }
  std::multiset<std::size_t> sizes;
  for (const auto& c : res.classes) sizes.insert(c.members.size());
  if (sizes != std::multiset<std::size_t>{1, 1, 2, 4}) {
    rep.fail("class size multiset is not {1,1,2,4}");
    return rep;
  }
  if (res.backtracks.size() != 6) {
    rep.fail("expected 6 identified backtracks, got " + std::to_string(res.backtracks.size()));
    return rep;
  }
  if (!graphs_isomorphic(res.roots.front(), fixtures::reconstruction_demo_root())) {
    rep.fail("root graph does not match the expected 6-vertex graph");
    return rep;
  }
  return rep;
}

CheckReport slide_pair_demo() {
  CheckReport rep = intersection_slide_check(fixtures::slide_pair_left(),
                                             fixtures::slide_pair_right());
  rep.name = "cospectral-slide-pair";
  // fixture validation: the full fingerprints agree
  if (rep.pass &&
      !(fingerprint(fixtures::slide_pair_left()) == fingerprint(fixtures::slide_pair_right())))
    rep.fail("fingerprints (char/perm/traces) differ");
  return rep;
}

CheckReport expand_pair_demo() {
  CheckReport rep{.name = "pathsum-expansion-pair"};
  const Digraph small = fixtures::expand_demo_small();
  const PrimeCatalog cat = enumerate_primes(small);
  int loop = -1, backtrack = -1;
  for (int i = 0; i < cat.size(); ++i)
    (cat.prime_length(i) == 1 ? loop : backtrack) = i;
  if (loop < 0 || backtrack < 0) {
    rep.fail("expected a loop prime and a backtrack prime");
    return rep;
  }
  const Digraph expanded =
      expand_pathsum(small, cat.primes[loop], cat.primes[backtrack], 1);
  if (expanded.vertex_count() != 4) {
    rep.fail("expansion should have 4 vertices, got " +
             std::to_string(expanded.vertex_count()));
    return rep;
  }
  if (!digraphs_isomorphic(expanded, fixtures::expand_demo_large())) {
    rep.fail("expansion does not match the published 4-vertex graph");
    return rep;
  }
  if (!same_nonzero_spectrum(small, expanded)) {
    rep.fail("expansion changed the closed-walk counts");
    return rep;
  }
  const IntPoly golden(std::vector<Int>{1, -1, -1});
  if (!(char_poly(small) == golden) || !(char_poly(expanded) == golden)) {
    rep.fail("char polynomials do not both reduce to 1 - z - z^2");
    return rep;
  }
  return rep;
}

}  // namespace

std::vector<CheckReport> worked_examples() {
  return {pentagon_mobius_series(), mangoldt_worked_example(), reconstruction_demo(),
          slide_pair_demo(), expand_pair_demo()};
}

}  // namespace hikeforge
