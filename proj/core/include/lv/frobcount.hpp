#pragma once

#include <cstdint>
#include <vector>

#include "lv/numbers.hpp"

namespace lv {

struct CountBoundInput {
  uint64_t q = 2;  // prime power >= 2
  int n = 2;       // ambient dimension >= 2
  Int b;           // primitive Betti number > 0
};

struct CentralizerBound {
  int N = 0;       // largest N >= 1 with q^{(n/2+1)N} < b/3; 0 when vacuous
  Rat bound;       // 3b^2/N, or b^2 when vacuous
  bool vacuous = false;
};

// Comparison done as 9 q^{(n+2)N} < b^2 to keep half-integer exponents in
// integer arithmetic; the inequality is strict as stated.
CentralizerBound centralizer_bound(const CountBoundInput& in);

// (2N+1)^2 + 2 sum_{i=1}^{2N} i^2, the squared L^2 norm of the kernel g_N.
Int fejer_norm(long N);

struct SpectrumAngle {
  Rat theta;  // in [0, 1)
  Int m;      // multiplicity >= 1
};

struct SpectrumReport {
  bool precondition_ok = false;  // point-count constraint at every j <= J
  int first_bad_j = 0;           // 0 when all pass
  Int b;                         // sum of multiplicities
  Int dim_z;                     // sum of squared multiplicities
  CentralizerBound cb;
  bool bound_holds = false;      // dim_z <= cb.bound (vacuously b^2)
};

// Checks |sum m_s e(j theta_s)| <= q^{(n/2+1)j} for 1 <= j <= J using 30-digit
// fixed precision with 1e-9 slack, then asserts dim Z <= 3b^2/N. A violated
// assertion (precondition passing, bound failing) raises LemmaViolationError.
SpectrumReport verify_spectrum_bound(const std::vector<SpectrumAngle>& spectrum, uint64_t q,
                                     int n, int J);

}  // namespace lv
