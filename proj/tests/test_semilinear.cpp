#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lv/semilinear.hpp"

using namespace lv;

namespace {

// Direct application of phi: v -> M sigma(v).
std::vector<FiniteField::Elem> apply_phi(const SemilinearModule& m,
                                         const std::vector<FiniteField::Elem>& v) {
  std::vector<FiniteField::Elem> sv;
  sv.reserve(v.size());
  for (const auto& x : v) sv.push_back(m.field.frobenius(x));
  return mat_vec(m.field, m.M, sv);
}

}  // namespace

TEST_CASE("module constructor rejects singular matrices") {
  FiniteField f(3, 2);
  Mat<FiniteField> m(f, 2, 2);
  m.at(0, 0) = f.one();
  m.at(0, 1) = f.one();
  m.at(1, 0) = f.one();
  m.at(1, 1) = f.one();
  CHECK_THROWS_AS(SemilinearModule(f, m), DomainError);
}

TEST_CASE("phi_power_e matches iterated semilinear application") {
  for (auto [p, e, d] : {std::tuple<uint32_t, uint32_t, int>{2, 3, 2}, {3, 2, 3}, {5, 4, 2}}) {
    FiniteField f(p, e);
    Rng rng(p * 100 + e);
    const auto mod = random_semilinear_module(f, d, rng);
    const auto pe = phi_power_e(mod);
    for (int t = 0; t < 20; ++t) {
      std::vector<FiniteField::Elem> v;
      for (int i = 0; i < d; ++i) v.push_back(f.random(rng));
      auto iter = v;
      for (uint32_t i = 0; i < e; ++i) iter = apply_phi(mod, iter);
      const auto direct = mat_vec(f, pe, v);  // phi^e is E-linear
      for (int i = 0; i < d; ++i) CHECK(f.eq(iter[i], direct[i]));
    }
  }
}

TEST_CASE("prime field case degenerates to the ordinary commutant") {
  // e = 1: sigma is the identity, so Z(phi) is the commutant of M itself.
  FiniteField f(5, 1);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const auto mod = random_semilinear_module(f, 3, rng);
    CHECK(centralizer_dim_F(mod) == centralizer_dim_E(f, mod.M));
  }
}

TEST_CASE("one-dimensional modules have prime-field centralizer") {
  // f c = c f^p forces f in F_p: dim_F = 1 = dim_E End(E).
  FiniteField f(3, 3);
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const auto mod = random_semilinear_module(f, 1, rng);
    const auto rep = verify_centralizer_lemma(mod);
    CHECK(rep.dim_F == 1);
    CHECK(rep.dim_E == 1);
    CHECK(rep.equal);
    CHECK(rep.within_bound);
  }
}

TEST_CASE("centralizer dimension is conjugation invariant") {
  FiniteField f(2, 3);
  Rng rng(77);
  for (int t = 0; t < 15; ++t) {
    const auto mod = random_semilinear_module(f, 3, rng);
    // conjugate: M' = G M sigma(G)^{-1}
    const auto gmod = random_semilinear_module(f, 3, rng);
    const auto& g = gmod.M;
    Mat<FiniteField> sg(f, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sg.at(i, j) = f.frobenius(g.at(i, j));
    const auto sgi = inverse(f, sg);
    REQUIRE(sgi.has_value());
    const auto conj = mat_mul(f, mat_mul(f, g, mod.M), *sgi);
    SemilinearModule mod2(f, conj);
    CHECK(centralizer_dim_F(mod) == centralizer_dim_F(mod2));
  }
}

TEST_CASE("centralizer lemma holds across seeded trials") {
  Rng rng(2024);
  int trials = 0;
  for (uint32_t p : {2u, 3u, 5u}) {
    for (uint32_t e = 2; e <= 3; ++e) {
      FiniteField f(p, e);
      for (int d = 1; d <= 3; ++d) {
        for (int t = 0; t < 5; ++t) {
          const auto mod = random_semilinear_module(f, d, rng);
          const auto rep = verify_centralizer_lemma(mod);
          CHECK(rep.equal);
          CHECK(rep.within_bound);
          CHECK(rep.dim_F >= 1);
          ++trials;
        }
      }
    }
  }
  CHECK(trials == 90);
}
