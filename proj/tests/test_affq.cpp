#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "lv/affq.hpp"
#include "lv/rng.hpp"

using namespace lv;

namespace {

std::vector<AffElem> all_elems(uint32_t q) {
  std::vector<AffElem> out;
  for (uint32_t a = 1; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("affine group axioms, exhaustive for small q") {
  for (uint32_t q : {3u, 5u}) {
    const auto elems = all_elems(q);
    const AffElem id{1, 0};
    for (const auto& x : elems) {
      CHECK(aff_mul(q, x, id) == x);
      CHECK(aff_mul(q, id, x) == x);
      CHECK(aff_mul(q, x, aff_inv(q, x)) == id);
      CHECK(aff_mul(q, aff_inv(q, x), x) == id);
      for (const auto& y : elems)
        for (const auto& z : elems)
          CHECK(aff_mul(q, aff_mul(q, x, y), z) == aff_mul(q, x, aff_mul(q, y, z)));
    }
  }
}

TEST_CASE("affine group axioms, sampled for larger q") {
  for (uint32_t q : {7u, 11u}) {
    const auto elems = all_elems(q);
    const AffElem id{1, 0};
    Rng rng(q);
    for (const auto& x : elems) CHECK(aff_mul(q, x, aff_inv(q, x)) == id);
    for (int t = 0; t < 2000; ++t) {
      const auto& x = elems[rng.below(elems.size())];
      const auto& y = elems[rng.below(elems.size())];
      const auto& z = elems[rng.below(elems.size())];
      CHECK(aff_mul(q, aff_mul(q, x, y), z) == aff_mul(q, x, aff_mul(q, y, z)));
    }
  }
}

TEST_CASE("generation test distinguishes proper subgroups") {
  // translations alone never generate
  CHECK_FALSE(aff_generates(5, {{1, 1}}));
  // a primitive scaling plus a translation does
  CHECK(aff_generates(5, {{2, 0}, {1, 1}}));
  // order-2 scaling plus translation generates an index-2 subgroup
  CHECK_FALSE(aff_generates(5, {{4, 0}, {1, 1}}));
  // scalings alone fix 0
  CHECK_FALSE(aff_generates(7, {{3, 0}, {5, 0}}));
  CHECK(aff_generates(7, {{3, 0}, {1, 1}}));
}

TEST_CASE("commutator fiber census q=3 s=1") {
  const auto c = com_fiber_census(3, 1);
  CHECK(c.expected_fiber == 6);
  CHECK(c.fibers.size() == 3);  // the pairs of units with lcm of orders = 2
  CHECK(c.fibers_uniform);
  CHECK(c.image_is_generating_tuples);
}

TEST_CASE("commutator fiber census q=5 s=1") {
  const auto c = com_fiber_census(5, 1);
  CHECK(c.expected_fiber == 20);
  // unit pairs generating F_5^*: 16 total minus the 4 pairs inside {1,4}
  CHECK(c.fibers.size() == 12);
  CHECK(c.fibers_uniform);
  CHECK(c.image_is_generating_tuples);
}

TEST_CASE("commutator fiber census q=3 s=2") {
  const auto c = com_fiber_census(3, 2);
  CHECK(c.expected_fiber == 54);
  // unit 4-tuples generating {1,2}: everything except all-ones
  CHECK(c.fibers.size() == 15);
  CHECK(c.fibers_uniform);
  CHECK(c.image_is_generating_tuples);
}

TEST_CASE("census input guards") {
  CHECK_THROWS_AS(com_fiber_census(4, 1), DomainError);
  CHECK_THROWS_AS(com_fiber_census(3, 0), DomainError);
  CHECK_THROWS_AS(com_fiber_census(11, 2), SizeLimitError);
}

TEST_CASE("small orbit fraction") {
  CHECK(size_v({1, 1, 2, 4}, 2) == make_rat(1, 4));
  CHECK(size_v({1, 1, 2, 4}, 1) == 0);
  CHECK(size_v({1, 1, 2, 4}, 5) == 1);
  // monotone in the threshold
  const std::vector<uint64_t> orbits{3, 3, 5, 7, 9, 20};
  Rat prev = 0;
  for (uint64_t t = 1; t <= 25; ++t) {
    const Rat cur = size_v(orbits, t);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(size_v({}, 2), DomainError);
}

TEST_CASE("size bound arithmetic") {
  const auto b71 = kp_size_bound(2, 71, 5);
  CHECK(b71.bound == make_rat(2, 245));
  CHECK(b71.target == make_rat(1, 106));
  CHECK(b71.ok);
  const auto b11 = kp_size_bound(2, 11, 5);
  CHECK(b11.bound == make_rat(2, 5));
  CHECK_FALSE(b11.ok);
}

namespace {

// Independent re-statement of the prime predicates, for cross-checking the
// search result.
bool kp_prime_ok(uint64_t q, int g, int degK, int c,
                 const std::vector<uint64_t>& forbidden) {
  if (!is_prime(Int(static_cast<unsigned long>(q))) || q < 3) return false;
  const uint64_t m = q - 1;
  if (m % 4 == 0) return false;
  for (uint64_t r = 3; r < static_cast<uint64_t>(c) * degK; r += 2)
    if (is_prime(Int(static_cast<unsigned long>(r))) && m % r == 0) return false;
  for (uint64_t f : forbidden)
    if (m % f == 0) return false;
  return kp_size_bound(g, q, c).ok;
}

}  // namespace

TEST_CASE("prime search result and minimality") {
  const auto params = find_kp_prime(2, 1, 5, {});
  CHECK(params.q == 71);
  CHECK(kp_prime_ok(71, 2, 1, 5, {}));
  for (uint64_t q = 3; q < 71; ++q) CHECK_FALSE(kp_prime_ok(q, 2, 1, 5, {}));
}

TEST_CASE("prime search respects forbidden divisors") {
  const auto params = find_kp_prime(2, 1, 5, {5});
  CHECK(params.q == 83);
  CHECK(kp_prime_ok(83, 2, 1, 5, {5}));
  for (uint64_t q = 3; q < 83; ++q) CHECK_FALSE(kp_prime_ok(q, 2, 1, 5, {5}));
}

namespace {

uint64_t order_mod(uint64_t a, uint64_t m) {
  uint64_t x = a % m, ord = 1;
  while (x != 1) {
    x = x * a % m;
    ++ord;
  }
  return ord;
}

}  // namespace

TEST_CASE("place residue is a primitive root at every odd prime divisor") {
  CHECK(find_place_residue(71, 5, 1) == 17);
  CHECK(order_mod(17, 5) == 4);
  CHECK(order_mod(17, 7) == 6);
  CHECK(std::gcd<uint64_t>(17, 70) == 1);

  CHECK(find_place_residue(7, 5, 1) == 5);
  CHECK(order_mod(5, 3) == 2);
}

TEST_CASE("orbit census with the identity matrix") {
  const auto c = frobenius_orbit_census(1, 5, {{1, 0}, {0, 1}}, 3);
  CHECK_FALSE(c.hypotheses_hold);  // multiplier 1 has order 1 < 3
  CHECK(c.total == 25);
  REQUIRE(c.kernel_sizes.size() == 2);
  CHECK(c.kernel_sizes[0] == 25);
  CHECK(c.kernel_sizes[1] == 25);
  CHECK(c.small_orbit_mass == 25);
}

TEST_CASE("orbit census with a genuine similitude") {
  // diag(2, 1) mod 5: multiplier 2 has order 4
  const auto c = frobenius_orbit_census(1, 5, {{2, 0}, {0, 1}}, 4);
  CHECK(c.hypotheses_hold);
  CHECK(c.kernel_bound == 10);
  REQUIRE(c.kernel_sizes.size() == 3);
  for (uint64_t k : c.kernel_sizes) CHECK(k == 5);  // the axis x = 0
  CHECK(c.small_orbit_mass == 5);
}

TEST_CASE("orbit census input guards") {
  CHECK_THROWS_AS(frobenius_orbit_census(1, 5, {{5, 0}, {0, 1}}, 3), DomainError);
  CHECK_THROWS_AS(frobenius_orbit_census(1, 5, {{1, 0}}, 3), DomainError);
  const std::vector<std::vector<uint64_t>> big(4, std::vector<uint64_t>(4, 1));
  CHECK_THROWS_AS(frobenius_orbit_census(2, 100, big, 3), SizeLimitError);
}
