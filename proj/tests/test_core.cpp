#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "lv/csv.hpp"
#include "lv/finite_field.hpp"
#include "lv/matrix.hpp"
#include "lv/numbers.hpp"
#include "lv/subspaces.hpp"

using namespace lv;

TEST_CASE("rational helpers") {
  CHECK(rat_str(make_rat(3, 6)) == "1/2");
  CHECK(rat_str(make_rat(-4, 2)) == "-2");
  CHECK(parse_rat("7/3") == make_rat(7, 3));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK_THROWS_AS(parse_rat("x"), DomainError);
  CHECK_THROWS_AS(make_rat(1, 0), DomainError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("prime field arithmetic") {
  FiniteField f(7, 1);
  CHECK(f.order() == 7);
  for (uint64_t a = 0; a < 7; ++a)
    for (uint64_t b = 0; b < 7; ++b) {
      CHECK(f.index(f.add(f.from_index(a), f.from_index(b))) == (a + b) % 7);
      CHECK(f.index(f.mul(f.from_index(a), f.from_index(b))) == (a * b) % 7);
    }
  for (uint64_t a = 1; a < 7; ++a)
    CHECK(f.eq(f.mul(f.from_index(a), f.inv(f.from_index(a))), f.one()));
}

TEST_CASE("extension field axioms on random triples") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 3}, {5, 2}}) {
    FiniteField f(p, e);
    Rng rng(42 + p);
    for (int t = 0; t < 1000; ++t) {
      const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      CHECK(f.eq(f.add(a, b), f.add(b, a)));
      CHECK(f.eq(f.mul(a, b), f.mul(b, a)));
      CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
      CHECK(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
      if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
    }
  }
}

TEST_CASE("frobenius is an order-e field automorphism") {
  FiniteField f(2, 4);
  for (uint64_t i = 0; i < f.order(); ++i) {
    const auto x = f.from_index(i);
    // additive and multiplicative
    for (uint64_t j = 0; j < f.order(); ++j) {
      const auto y = f.from_index(j);
      CHECK(f.eq(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y))));
      CHECK(f.eq(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y))));
    }
    // x^{p^e} = x
    auto z = x;
    for (uint32_t k = 0; k < f.e(); ++k) z = f.frobenius(z);
    CHECK(f.eq(z, x));
  }
  // fixed field of frobenius is exactly F_p
  int fixed = 0;
  for (uint64_t i = 0; i < f.order(); ++i)
    if (f.eq(f.frobenius(f.from_index(i)), f.from_index(i))) ++fixed;
  CHECK(fixed == 2);
}

TEST_CASE("multiplicative order divides q-1 and a generator exists") {
  FiniteField f(3, 2);
  int max_order = 0;
  for (uint64_t i = 1; i < f.order(); ++i) {
    const auto x = f.from_index(i);
    auto acc = x;
    int ord = 1;
    while (!f.eq(acc, f.one())) {
      acc = f.mul(acc, x);
      ++ord;
    }
    CHECK((f.order() - 1) % ord == 0);
    max_order = std::max(max_order, ord);
  }
  CHECK(max_order == 8);
}

TEST_CASE("rref against a hand-reduced system") {
  // x + 2y + z = 0, 2x + 4y = 0 over Q: rank 2, kernel spanned by (-2, 1, 0)
  // after reduction x = -2y, z = 0.
  RationalField qf;
  Mat<RationalField> m(qf, 2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 1;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 0;
  const auto ker = kernel_basis(qf, m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == Rat(-2));
  CHECK(ker[0][1] == Rat(1));
  CHECK(ker[0][2] == Rat(0));
}

TEST_CASE("rank-nullity on random finite field matrices") {
  FiniteField f(5, 1);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + static_cast<int>(rng.below(5));
    const int c = 1 + static_cast<int>(rng.below(5));
    Mat<FiniteField> m(f, r, c);
    for (auto& x : m.a) x = f.random(rng);
    const int rk = rank(f, m);
    const auto ker = kernel_basis(f, m);
    CHECK(rk + static_cast<int>(ker.size()) == c);
    // kernel vectors actually vanish
    for (const auto& v : ker) {
      Mat<FiniteField> mm = m;
      const auto img = mat_vec(f, mm, v);
      for (const auto& x : img) CHECK(f.is_zero(x));
    }
  }
}

TEST_CASE("inverse round trip and singular detection") {
  RationalField qf;
  Mat<RationalField> m(qf, 3, 3);
  m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(0, 2) = 0;
  m.at(1, 0) = 0; m.at(1, 1) = make_rat(1, 3); m.at(1, 2) = 1;
  m.at(2, 0) = 1; m.at(2, 1) = 0; m.at(2, 2) = 5;
  const auto inv = inverse(qf, m);
  REQUIRE(inv.has_value());
  const auto prod = mat_mul(qf, m, *inv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? Rat(1) : Rat(0)));

  Mat<RationalField> s(qf, 2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2;
  s.at(1, 0) = 2; s.at(1, 1) = 4;
  CHECK(!inverse(qf, s).has_value());
}

TEST_CASE("charpoly matches trace and determinant conventions") {
  RationalField qf;
  Mat<RationalField> m(qf, 2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 3; m.at(1, 1) = 4;
  // x^2 - 5x - 2
  const auto p = charpoly(qf, m);
  REQUIRE(p.size() == 3);
  CHECK(p[2] == Rat(1));
  CHECK(p[1] == Rat(-5));
  CHECK(p[0] == Rat(-2));
}

TEST_CASE("charpoly via cayley-hamilton on random matrices") {
  FiniteField f(3, 2);
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.below(3));
    Mat<FiniteField> m(f, n, n);
    for (auto& x : m.a) x = f.random(rng);
    const auto p = charpoly(f, m);
    REQUIRE(static_cast<int>(p.size()) == n + 1);
    CHECK(f.eq(p.back(), f.one()));
    // p(m) = 0
    Mat<FiniteField> acc(f, n, n);
    Mat<FiniteField> power = identity(f, n);
    for (size_t i = 0; i < p.size(); ++i) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          acc.at(r, c) = f.add(acc.at(r, c), f.mul(p[i], power.at(r, c)));
      if (i + 1 < p.size()) power = mat_mul(f, power, m);
    }
    for (const auto& x : acc.a) CHECK(f.is_zero(x));
  }
}

TEST_CASE("roots_in_field deflates with multiplicity") {
  RationalField qf;
  // (x-1)^2 (x+3), little-endian
  std::vector<Rat> poly{Rat(3), Rat(-5), Rat(1), Rat(1)};
  std::vector<Rat> cands{Rat(-3), Rat(1), Rat(2)};
  const auto roots = roots_in_field(qf, poly, cands);
  REQUIRE(roots.size() == 3);
  CHECK(std::count(roots.begin(), roots.end(), Rat(1)) == 2);
  CHECK(std::count(roots.begin(), roots.end(), Rat(-3)) == 1);
}

TEST_CASE("subspace enumeration counts match gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, Int(3)) == 130);
  CHECK(gaussian_binomial(3, 1, Int(5)) == 31);
  for (auto [p, dv] : {std::pair<uint32_t, int>{2, 4}, {3, 3}, {5, 3}}) {
    FiniteField f(p, 1);
    for (int dw = 0; dw <= dv; ++dw) {
      const auto subs = all_subspaces(f, dv, dw);
      CHECK(Int(subs.size()) == gaussian_binomial(dv, dw, Int(p)));
      // each basis has the right rank
      for (const auto& s : subs) {
        Mat<FiniteField> m(f, dw, dv);
        for (int i = 0; i < dw; ++i)
          for (int j = 0; j < dv; ++j) m.at(i, j) = s[i][j];
        CHECK(rank(f, m) == dw);
      }
    }
  }
}

TEST_CASE("subspace enumeration is duplicate free") {
  FiniteField f(3, 1);
  const auto subs = all_subspaces(f, 3, 2);
  std::set<std::remove_cvref_t<decltype(subs[0])>> seen;
  for (const auto& s : subs) CHECK(seen.insert(s).second);
}

TEST_CASE("rational csv parsing") {
  std::istringstream in("# comment line\n1, 2/3 ,-4\n\n0,1,1/2\n");
  const auto rows = read_rational_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == make_rat(2, 3));
  CHECK(rows[1][2] == make_rat(1, 2));

  std::istringstream bad("1,junk\n");
  CHECK_THROWS_AS(read_rational_csv(bad), DomainError);
}
