#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lv/numbers.hpp"

namespace lv {

// The affine map x -> ax + b on F_q, q prime, a != 0.
struct AffElem {
  uint32_t a = 1, b = 0;
  friend bool operator==(const AffElem&, const AffElem&) = default;
};

AffElem aff_mul(uint32_t q, const AffElem& x, const AffElem& y);
AffElem aff_inv(uint32_t q, const AffElem& x);

// True iff the listed elements generate all of Aff(q) (closure check).
bool aff_generates(uint32_t q, const std::vector<AffElem>& gens);

struct ComFiberCensus {
  uint32_t q = 0;
  int s = 0;
  // Projection to (F_q^*)^{2s} of the kept tuples -> fiber size.
  std::map<std::vector<uint32_t>, uint64_t> fibers;
  Int expected_fiber;        // q^{2s-1}(q-1)
  bool fibers_uniform = false;
  // Image equals exactly the a-part tuples that generate F_q^*.
  bool image_is_generating_tuples = false;
};

// Enumerates Aff(q)^{2s}, keeps tuples whose commutator product has nonzero
// translation part and which generate Aff(q), and tallies fibers of the
// projection to the multiplicative parts.
ComFiberCensus com_fiber_census(uint32_t q, int s);

// Fraction of a finite Galois set lying in Frobenius orbits of size below the
// threshold.
Rat size_v(const std::vector<uint64_t>& orbit_sizes, uint64_t threshold);

struct KPBound {
  Rat bound;    // c * 2^{g+1} / (q-1)^g
  Rat target;   // 1 / ((g - 1/2)(q - 1) + 1)
  bool ok = false;
};

KPBound kp_size_bound(int g, uint64_t q, int c);

struct KPParams {
  int g = 0;
  int degK = 0;
  int c = 0;
  uint64_t q = 0;
  std::vector<uint64_t> forbidden_primes;
};

// Smallest prime q <= 10^6 with q-1 not divisible by 4, by any odd prime
// below c*degK, or by any forbidden prime, and with kp_size_bound satisfied.
KPParams find_kp_prime(int g, int degK, int c,
                       const std::vector<uint64_t>& forbidden_primes);

// A unit mod q-1 that is a primitive root modulo every odd prime r | q-1.
uint64_t find_place_residue(uint64_t q, int c, int degK);

struct OrbitCensus {
  std::vector<uint64_t> kernel_sizes;  // |ker(T^i - 1)| for 1 <= i < c
  uint64_t small_orbit_mass = 0;       // elements in <T>-orbits of size < c
  uint64_t total = 0;                  // N^{2g}
  bool hypotheses_hold = false;        // similitude with multiplier order >= c
  Int kernel_bound;                    // 2^g N^g, asserted when hypotheses hold
};

// Exhaustive orbit census of T acting on (Z/N)^{2g}. T must be invertible
// mod N; the kernel bound is asserted only when T is a symplectic similitude
// whose multiplier has multiplicative order >= c mod N.
OrbitCensus frobenius_orbit_census(int g, uint64_t N,
                                   const std::vector<std::vector<uint64_t>>& T, int c);

}  // namespace lv
