#include "doctest.h"

#include "corpus.hpp"
#include "hikeforge/fixtures.hpp"
#include "hikeforge/functions.hpp"

using namespace hikeforge;

namespace {

struct Fig {
  Digraph g = fixtures::backtrack_triangle();
  PrimeCatalog cat = enumerate_primes(g);
  int p1 = -1, p2 = -1;
  Fig() {
    for (int i = 0; i < cat.size(); ++i) (cat.prime_length(i) == 2 ? p1 : p2) = i;
  }
};

}  // namespace

TEST_SUITE_BEGIN("functions");

TEST_CASE("von Mangoldt by convolution: worked values") {
  Fig f;
  CHECK(mangoldt(f.cat, hike_from_primes(f.cat, {f.p1, f.p2})) == 3);
  CHECK(mangoldt(f.cat, hike_from_primes(f.cat, {f.p2, f.p1})) == 2);
  CHECK(mangoldt(f.cat, trivial_hike()) == 0);
}

TEST_CASE("contiguity oracle: worked values and primes") {
  Fig f;
  CHECK(mangoldt_contiguous(f.cat, hike_from_primes(f.cat, {f.p1, f.p2})) == 3);
  CHECK(mangoldt_contiguous(f.cat, hike_from_primes(f.cat, {f.p2, f.p1})) == 2);
  // a prime has as many contiguous representations as rotations
  for (int i = 0; i < f.cat.size(); ++i)
    CHECK(mangoldt_contiguous(f.cat, hike_from_primes(f.cat, {i})) == f.cat.prime_length(i));
  CHECK_THROWS_AS(
      mangoldt_contiguous(f.cat, hike_from_primes(f.cat, {f.p2, f.p2, f.p2, f.p2}), 10),
      std::length_error);
}

TEST_CASE("both Mangoldt routes agree on every hike up to length 8") {
  for (const Digraph& g :
       {fixtures::backtrack_triangle(), corpus::complete_graph(3).bidirected()}) {
    const PrimeCatalog cat = enumerate_primes(g);
    for (const Hike& h : enumerate_hikes(cat, 8))
      CHECK(mangoldt(cat, h) == mangoldt_contiguous(cat, h));
  }
}

TEST_CASE("Mangoldt is supported exactly on walks") {
  Fig f;
  for (const Hike& h : enumerate_hikes(f.cat, 8))
    CHECK((mangoldt(f.cat, h) != 0) == is_walk(f.cat, h));
}

TEST_CASE("Lambda * 1 = length") {
  Fig f;
  const IncidenceFn<Rat> lam = [&](const Hike& h) { return Rat(mangoldt(f.cat, h)); };
  for (const Hike& h : enumerate_hikes(f.cat, 6))
    CHECK(convolve<Rat>(f.cat, lam, fn_one(), h) == Rat(h.length));
}

TEST_CASE("tau and omega relations") {
  Fig f;
  const IncidenceFn<Rat> prime_ind = named_function(f.cat, "prime");
  for (const Hike& h : enumerate_hikes(f.cat, 6)) {
    CHECK(Rat(tau(f.cat, h)) == convolve<Rat>(f.cat, fn_one(), fn_one(), h));
    CHECK(Rat(small_omega(h)) == convolve<Rat>(f.cat, prime_ind, fn_one(), h));
    if (is_self_avoiding(h)) CHECK(small_omega(h) == h.omega);
    // Omega counts the walk divisors: Omega = 1_w * 1
    const IncidenceFn<Rat> walk_ind = named_function(f.cat, "walk");
    CHECK(Rat(h.omega) == convolve<Rat>(f.cat, walk_ind, fn_one(), h));
  }
}

TEST_CASE("totally additive convolution against mu is supported on walks") {
  Fig f;
  CHECK(check_additive_mobius(f.cat, fn_length(), "length", 6).pass);
  CHECK(check_additive_mobius(f.cat, fn_big_omega(), "Omega", 6).pass);
  // Omega * mu at a walk is 1, elsewhere 0
  for (const Hike& h : enumerate_hikes(f.cat, 6)) {
    const Rat v = convolve<Rat>(f.cat, fn_big_omega(), fn_mobius(), h);
    CHECK(v == Rat(is_walk(f.cat, h) ? 1 : 0));
  }
  // a non-additive function trips the sampling precondition
  const IncidenceFn<Rat> not_additive = [](const Hike& h) { return Rat(h.trivial() ? 3 : 1); };
  CHECK_FALSE(check_additive_mobius(f.cat, not_additive, "bogus", 4).pass);
}

TEST_CASE("totally multiplicative inverses") {
  Fig f;
  CHECK(check_multiplicative_inverse(f.cat, fn_liouville(), "liouville", 6).pass);
  CHECK(check_multiplicative_inverse(f.cat, fn_one(), "one", 6).pass);
  CHECK(check_multiplicative_inverse(f.cat, fn_weight_monomial(f.cat, 6), "weight", 4, 6).pass);
  const IncidenceFn<Rat> not_mult = [](const Hike& h) { return Rat(h.length + 1); };
  CHECK_FALSE(check_multiplicative_inverse(f.cat, not_mult, "bogus", 4).pass);
}

TEST_CASE("liouville values") {
  Fig f;
  CHECK(liouville(trivial_hike()) == 1);
  CHECK(liouville(hike_from_primes(f.cat, {f.p1})) == -1);
  CHECK(liouville(hike_from_primes(f.cat, {f.p1, f.p2})) == 1);
}

TEST_CASE("named function registry") {
  Fig f;
  for (const std::string& name : named_function_list()) (void)named_function(f.cat, name);
  CHECK_THROWS_AS(named_function(f.cat, "nope"), std::invalid_argument);
}

TEST_SUITE_END();
