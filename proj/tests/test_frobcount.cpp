#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lv/frobcount.hpp"

using namespace lv;

TEST_CASE("centralizer bound worked example") {
  CountBoundInput in;
  in.q = 2;
  in.n = 2;
  in.b = 1000;
  const auto cb = centralizer_bound(in);
  CHECK(cb.N == 4);
  CHECK(cb.bound == 750000);
  CHECK_FALSE(cb.vacuous);
}

TEST_CASE("centralizer bound vacuous for tiny betti numbers") {
  CountBoundInput in;
  in.q = 2;
  in.n = 2;
  in.b = 3;
  const auto cb = centralizer_bound(in);
  CHECK(cb.N == 0);
  CHECK(cb.vacuous);
  CHECK(cb.bound == 9);  // falls back to b^2
}

TEST_CASE("N grows monotonically with b") {
  int prev = 0;
  for (long b = 10; b <= 100000; b *= 10) {
    CountBoundInput in;
    in.q = 2;
    in.n = 2;
    in.b = b;
    const auto cb = centralizer_bound(in);
    CHECK(cb.N >= prev);
    prev = cb.N;
    // direct restatement: 9 q^{(n+2)N} < b^2 <= 9 q^{(n+2)(N+1)}
    if (!cb.vacuous) {
      CHECK(Int(9) * pow_int(Int(16), cb.N) < in.b * in.b);
      CHECK(Int(9) * pow_int(Int(16), cb.N + 1) >= in.b * in.b);
    }
  }
}

TEST_CASE("fejer kernel norm values and cross-check") {
  CHECK(fejer_norm(0) == 1);
  CHECK(fejer_norm(1) == 19);
  CHECK(fejer_norm(2) == 85);
  // independent form: sum over lags of the squared triangular coefficients
  for (long n = 0; n <= 50; ++n) {
    Int direct = 0;
    for (long r = -2 * n; r <= 2 * n; ++r) {
      const Int c = Int(2 * n + 1 - std::abs(r));
      direct += c * c;
    }
    CHECK(direct == fejer_norm(n));
  }
}

TEST_CASE("factor inequality (2N+1)^2 / norm <= 3/(4N)") {
  for (long n = 1; n <= 1000; ++n) {
    const Int lhs = Int(2 * n + 1) * Int(2 * n + 1) * Int(4 * n);
    CHECK(lhs <= Int(3) * fejer_norm(n));
  }
}

TEST_CASE("spectrum bound on a uniform spectrum") {
  // 64 equally spaced angles: every exponential sum with j not divisible by 64
  // vanishes, so the point-count precondition passes easily.
  std::vector<SpectrumAngle> spec;
  for (int s = 0; s < 64; ++s) spec.push_back({make_rat(s, 64), Int(1)});
  const auto rep = verify_spectrum_bound(spec, 2, 2, 8);
  CHECK(rep.precondition_ok);
  CHECK(rep.first_bad_j == 0);
  CHECK(rep.b == 64);
  CHECK(rep.dim_z == 64);
  CHECK(rep.cb.N == 2);
  CHECK(rep.cb.bound == make_rat(3 * 64 * 64, 2));
  CHECK(rep.bound_holds);
}

TEST_CASE("spectrum bound flags an overweight frobenius eigenvalue") {
  // all mass at angle zero: the j = 1 sum is b itself
  const std::vector<SpectrumAngle> ok{{Rat(0), Int(4)}};
  auto rep = verify_spectrum_bound(ok, 2, 2, 3);
  CHECK(rep.precondition_ok);  // 4 <= 4^j
  const std::vector<SpectrumAngle> bad{{Rat(0), Int(5)}};
  rep = verify_spectrum_bound(bad, 2, 2, 3);
  CHECK_FALSE(rep.precondition_ok);
  CHECK(rep.first_bad_j == 1);
}

TEST_CASE("spectrum bound with mixed multiplicities") {
  // 2 at angle 0 and 1 at angle 1/2: sums alternate between 1 and 3
  const std::vector<SpectrumAngle> spec{{Rat(0), Int(2)}, {make_rat(1, 2), Int(1)}};
  const auto rep = verify_spectrum_bound(spec, 2, 2, 6);
  CHECK(rep.precondition_ok);
  CHECK(rep.b == 3);
  CHECK(rep.dim_z == 5);
  CHECK(rep.cb.vacuous);
  CHECK(rep.bound_holds);  // 5 <= b^2 = 9
}
