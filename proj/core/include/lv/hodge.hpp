#pragma once

#include <map>
#include <vector>

#include "lv/numbers.hpp"

namespace lv {

// Multiset of Hodge numbers, indexed by p. Raw middle spectra of an
// (n-1)-dimensional hypersurface sit at p in [0, n-1]; adjoint spectra are
// centered, p in [-(n-1), n-1].
struct HodgeSpectrum {
  enum class Kind { RawMiddle, Adjoint };
  Kind kind = Kind::RawMiddle;
  std::map<int, Int> entries;

  Int total() const;
  Int at(int p) const;
};

// Primitive middle Hodge numbers h^{p,q}, p+q = n-1, of a smooth degree-d
// hypersurface in P^n, by the Jacobian-ring monomial count: h^{p,q} is the
// number of degree-((q+1)d - n - 1) monomials in n+1 variables with every
// exponent at most d-2, in closed form by inclusion-exclusion.
HodgeSpectrum hypersurface_hodge_numbers(int n, int d);

// Weight-zero spectrum on the Lie algebra of the automorphism group of the
// intersection form: Sym^2 when the form is alternating (n-1 odd), wedge^2
// when symmetric (n-1 even), plus one central h^0.
HodgeSpectrum adjoint_spectrum(const HodgeSpectrum& raw, int n);

// Piecewise-linear function of y in [0, total]: at integer y it is the sum of
// the y topmost indices of the spectrum counted with multiplicity, extended
// linearly in between (slopes descend through the index multiset).
Rat T_function(const HodgeSpectrum& adj, const Rat& y);

// C(n+d, d-1) - 1. With alt=true, C(n+d, d) - 1 instead.
Int moduli_dim(int n, int d, bool alt = false);

struct ConditionReport {
  int n = 0, d = 0;
  Int dimY, h0, sum_pos, weighted_sum;
  Rat T1, T2;
  bool weak = false, strong = false;
  // True when a T argument exceeded the spectrum length and was clamped for
  // reporting; strong is forced false in that case.
  bool t_clamped = false;
};

ConditionReport check_conditions(int n, int d, bool alt_moduli = false);

struct ScanRow {
  int n = 0;
  bool has_hit = false;
  int first_d = 0;
  std::vector<int> probe_d;          // larger d values re-checked
  std::vector<bool> probe_strong;    // result at each probe
};

struct ScanResult {
  std::vector<ScanRow> rows;
  bool found = false;
  int minimal_n = 0;
};

// For each n in [n_min, n_max], the least d <= d_max where both conditions
// hold, re-verified at `persistence` sampled larger d (2d, 4d, ... capped at
// d_max). Deterministic regardless of jobs.
ScanResult scan_n0(int n_min, int n_max, int d_max, int persistence, int jobs = 1,
                   bool alt_moduli = false);

struct EulerianTable {
  int n = 0;
  std::vector<Int> A;        // A(n,p), 0 <= p <= n-1
  std::vector<Rat> alpha;    // A(n,p)/n!
  std::map<int, Rat> beta;   // autocorrelation, p in [-(n-1), n-1]
};

// Eulerian numbers by the recurrence A(n,p) = (p+1)A(n-1,p) + (n-p)A(n-1,p-1),
// with the alpha and beta distributions as exact rationals. 1 <= n <= 600.
EulerianTable eulerian(int n);

// Every n in range where beta_0^2 >= 1600/n (exact rational comparison).
std::vector<int> beta0_bound_check(int n_min, int n_max);

}  // namespace lv
