#include "lv/frobcount.hpp"

#include <mpfr.h>

#include "lv/errors.hpp"

namespace lv {

CentralizerBound centralizer_bound(const CountBoundInput& in) {
  if (in.q < 2 || in.n < 2 || in.b <= 0)
    throw DomainError("centralizer_bound needs q >= 2, n >= 2, b > 0");
  const Int b2 = in.b * in.b;
  const Int qpow = pow_int(Int(static_cast<unsigned long>(in.q)), in.n + 2);
  CentralizerBound out;
  Int acc = 1;
  int N = 0;
  for (;;) {
    acc *= qpow;  // q^{(n+2)(N+1)}
    if (Int(9) * acc >= b2) break;
    ++N;
  }
  if (N == 0) {
    out.vacuous = true;
    out.bound = Rat(b2);
  } else {
    out.N = N;
    out.bound = make_rat(Int(3) * b2, Int(N));
  }
  return out;
}

Int fejer_norm(long N) {
  if (N < 0) throw DomainError("fejer_norm needs N >= 0");
  // sum_{i=1}^{2N} i^2 = (2N)(2N+1)(4N+1)/6
  const Int sum = Int(2 * N) * Int(2 * N + 1) * Int(4 * N + 1) / 6;
  const Int width = 2 * N + 1;
  return width * width + 2 * sum;
}

SpectrumReport verify_spectrum_bound(const std::vector<SpectrumAngle>& spectrum, uint64_t q,
                                     int n, int J) {
  if (spectrum.empty()) throw DomainError("empty spectrum");
  SpectrumReport rep;
  rep.b = 0;
  rep.dim_z = 0;
  for (const auto& a : spectrum) {
    if (a.m < 1) throw DomainError("spectrum multiplicity must be >= 1");
    if (a.theta < 0 || a.theta >= 1) throw DomainError("spectrum angle outside [0, 1)");
    rep.b += a.m;
    rep.dim_z += a.m * a.m;
  }

  // 30 significant digits ~ 100 bits; slack 1e-9 on the comparison.
  const mpfr_prec_t prec = 128;
  mpfr_t re, im, term, angle, tmp, mag, rhs, slack;
  mpfr_inits2(prec, re, im, term, angle, tmp, mag, rhs, slack, (mpfr_ptr)nullptr);
  mpfr_set_d(slack, 1e-9, MPFR_RNDN);

  rep.precondition_ok = true;
  for (int j = 1; j <= J && rep.precondition_ok; ++j) {
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (const auto& a : spectrum) {
      // angle = 2 pi j theta
      mpfr_const_pi(angle, MPFR_RNDN);
      mpfr_mul_si(angle, angle, 2 * j, MPFR_RNDN);
      mpfr_mul_q(angle, angle, a.theta.get_mpq_t(), MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_mul_z(term, term, a.m.get_mpz_t(), MPFR_RNDN);
      mpfr_add(re, re, term, MPFR_RNDN);
      mpfr_sin(term, angle, MPFR_RNDN);
      mpfr_mul_z(term, term, a.m.get_mpz_t(), MPFR_RNDN);
      mpfr_add(im, im, term, MPFR_RNDN);
    }
    mpfr_hypot(mag, re, im, MPFR_RNDN);
    // rhs = q^{(n/2+1)j} = sqrt(q^{(n+2)j})
    mpfr_set_ui(tmp, static_cast<unsigned long>(q), MPFR_RNDN);
    mpfr_pow_ui(tmp, tmp, static_cast<unsigned long>(n + 2) * j, MPFR_RNDN);
    mpfr_sqrt(rhs, tmp, MPFR_RNDN);
    mpfr_add(rhs, rhs, slack, MPFR_RNDN);
    if (mpfr_cmp(mag, rhs) > 0) {
      rep.precondition_ok = false;
      rep.first_bad_j = j;
    }
  }
  mpfr_clears(re, im, term, angle, tmp, mag, rhs, slack, (mpfr_ptr)nullptr);

  rep.cb = centralizer_bound({q, n, rep.b});
  rep.bound_holds = Rat(rep.dim_z) <= rep.cb.bound;
  if (rep.precondition_ok && !rep.bound_holds)
    throw LemmaViolationError("centralizer dimension exceeds the point-count bound");
  return rep;
}

}  // namespace lv
