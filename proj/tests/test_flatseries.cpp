#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lv/flatseries.hpp"
#include "lv/rng.hpp"

using namespace lv;

namespace {

TruncatedSeries series_from(std::initializer_list<Rat> cs) {
  TruncatedSeries s(static_cast<int>(cs.size()) - 1);
  int i = 0;
  for (const Rat& c : cs) s.c[i++] = c;
  return s;
}

TruncatedSeries constant(const Rat& c, int order) {
  TruncatedSeries s(order);
  s.c[0] = c;
  return s;
}

}  // namespace

TEST_CASE("truncated arithmetic") {
  const auto a = series_from({1, 2, 3});
  const auto b = series_from({0, 1});
  const auto sum = ts_add(a, b);
  CHECK(sum.c == std::vector<Rat>{Rat(1), Rat(3)});
  const auto prod = ts_mul(a, b, 3);  // (1 + 2z + 3z^2) z
  CHECK(prod.c == std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3)});
}

TEST_CASE("exponential flat section") {
  // f' = f: A = (-1), solution sum z^m / m!
  TruncatedSeriesConnection conn;
  conn.r = 1;
  conn.order = 20;
  conn.A = {{constant(Rat(-1), 0)}};
  const auto f = solve_flat_sections(conn, {Rat(1)});
  REQUIRE(f.size() == 1);
  for (int m = 0; m <= 20; ++m) CHECK(f[0].c[m] == make_rat(Int(1), factorial(m)));
  CHECK(flat_residual_valid_to(conn, f) == 20);
}

TEST_CASE("nilpotent connection integrates once") {
  // f_0' = 0, f_1' = f_0 with f(0) = (1, 0): solution (1, z)
  TruncatedSeriesConnection conn;
  conn.r = 2;
  conn.order = 10;
  conn.A = {{constant(Rat(0), 0), constant(Rat(-1), 0)},
            {constant(Rat(0), 0), constant(Rat(0), 0)}};
  const auto f = solve_flat_sections(conn, {Rat(1), Rat(0)});
  CHECK(f[0].c[0] == 1);
  for (int m = 1; m <= 10; ++m) CHECK(f[0].c[m] == 0);
  CHECK(f[1].c[1] == 1);
  for (int m = 0; m <= 10; ++m)
    if (m != 1) CHECK(f[1].c[m] == 0);
}

TEST_CASE("series coefficient in the connection matrix") {
  // f' = z f: solution exp(z^2/2)
  TruncatedSeriesConnection conn;
  conn.r = 1;
  conn.order = 12;
  conn.A = {{series_from({0, -1})}};
  const auto f = solve_flat_sections(conn, {Rat(1)});
  for (int m = 0; m <= 12; ++m) {
    if (m % 2 == 1) {
      CHECK(f[0].c[m] == 0);
    } else {
      const int half = m / 2;
      CHECK(f[0].c[m] == make_rat(Int(1), pow_int(Int(2), half) * factorial(half)));
    }
  }
}

TEST_CASE("residual detects tampering") {
  TruncatedSeriesConnection conn;
  conn.r = 1;
  conn.order = 15;
  conn.A = {{constant(Rat(-1), 0)}};
  auto f = solve_flat_sections(conn, {Rat(1)});
  f[0].c[7] += 1;
  const int valid = flat_residual_valid_to(conn, f);
  CHECK(valid == 6);  // first broken relation determines coefficient 7
}

TEST_CASE("seeded random connections solve exactly") {
  Rng rng(515);
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeriesConnection conn;
    conn.r = 1 + static_cast<int>(rng.below(3));
    conn.order = 60;
    for (int i = 0; i < conn.r; ++i) {
      std::vector<TruncatedSeries> row;
      for (int j = 0; j < conn.r; ++j) {
        TruncatedSeries s(2);
        for (int m = 0; m <= 2; ++m)
          s.c[m] = make_rat(static_cast<long>(rng.below(7)) - 3,
                            static_cast<long>(1 + rng.below(4)));
        row.push_back(s);
      }
      conn.A.push_back(row);
    }
    std::vector<Rat> init;
    for (int i = 0; i < conn.r; ++i) init.push_back(Rat(static_cast<long>(rng.below(5)) - 2));
    const auto f = solve_flat_sections(conn, init);
    CHECK(flat_residual_valid_to(conn, f) == conn.order);
  }
}

TEST_CASE("valuation profile of the exponential") {
  TruncatedSeries e(60);
  for (int m = 0; m <= 60; ++m) e.c[m] = make_rat(Int(1), factorial(m));
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    const auto prof = padic_valuation_profile(e, p);
    CHECK(prof.any);
    CHECK(prof.min >= 0);  // the shift exactly compensates the factorials
  }
  // the constant term sits exactly at zero
  CHECK(padic_valuation_profile(e, 2).min == 0);
}

TEST_CASE("valuation profile of integral series stays nonnegative") {
  const auto s = series_from({3, -7, 0, 12, 1});
  const auto prof = padic_valuation_profile(s, 3);
  CHECK(prof.min >= 0);
  CHECK(prof.entries.size() == 4);  // the zero coefficient is skipped
  CHECK_THROWS_AS(padic_valuation_profile(s, 1), DomainError);
}

TEST_CASE("flat sections of integral connections are p-adically bounded") {
  Rng rng(818);
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    for (int trial = 0; trial < 5; ++trial) {
      TruncatedSeriesConnection conn;
      conn.r = 2;
      conn.order = 80;
      for (int i = 0; i < 2; ++i) {
        std::vector<TruncatedSeries> row;
        for (int j = 0; j < 2; ++j) {
          TruncatedSeries s(1);
          s.c[0] = Rat(static_cast<long>(rng.below(9)) - 4);
          s.c[1] = Rat(static_cast<long>(rng.below(9)) - 4);
          row.push_back(s);
        }
        conn.A.push_back(row);
      }
      const auto f = solve_flat_sections(conn, {Rat(1), Rat(1)});
      for (const auto& fi : f) {
        const auto prof = padic_valuation_profile(fi, p);
        if (prof.any) CHECK(prof.min >= -1);
      }
    }
  }
}

TEST_CASE("relations among 1, z, z^2") {
  std::vector<TruncatedSeries> B{series_from({1, 0, 0, 0, 0}), series_from({0, 1, 0, 0, 0}),
                                 series_from({0, 0, 1, 0, 0})};
  const auto basis = truncated_relations(B, 2);
  REQUIRE(basis.monomials.size() == 6);
  CHECK(basis.monomials[2] == std::vector<int>{1, 0, 1});  // x0 x2
  CHECK(basis.monomials[3] == std::vector<int>{0, 2, 0});  // x1^2
  REQUIRE(basis.relations.size() == 1);
  const auto& rel = basis.relations[0];
  CHECK(rel[2] == -rel[3]);
  CHECK(rel[2] != 0);
  for (size_t i = 0; i < rel.size(); ++i)
    if (i != 2 && i != 3) CHECK(rel[i] == 0);
}

TEST_CASE("relations vanish when substituted back") {
  std::vector<TruncatedSeries> B{series_from({1, 1, 0, 0, 0, 0}),
                                 series_from({0, 1, 2, 0, 0, 0}),
                                 series_from({1, 2, 3, 0, 0, 0})};
  for (int degree : {2, 3}) {
    const auto basis = truncated_relations(B, degree);
    const int k = 5;
    for (const auto& rel : basis.relations) {
      TruncatedSeries acc(k);
      for (size_t col = 0; col < basis.monomials.size(); ++col) {
        if (rel[col] == 0) continue;
        TruncatedSeries prod(k);
        prod.c[0] = rel[col];
        for (int v = 0; v < 3; ++v)
          for (int rep = 0; rep < basis.monomials[col][v]; ++rep) prod = ts_mul(prod, B[v], k);
        acc = ts_add(acc, prod);
      }
      for (const Rat& c : acc.c) CHECK(c == 0);
    }
  }
}

TEST_CASE("independent series admit no relations") {
  std::vector<TruncatedSeries> B{series_from({1, 0, 0, 0}), series_from({0, 1, 0, 0})};
  const auto basis = truncated_relations(B, 3);
  CHECK(basis.monomials.size() == 4);
  CHECK(basis.relations.empty());
}

TEST_CASE("higher truncation order only removes relations") {
  Rng rng(99);
  std::vector<TruncatedSeries> longer, shorter;
  for (int i = 0; i < 3; ++i) {
    TruncatedSeries s(8);
    for (int m = 0; m <= 8; ++m) s.c[m] = Rat(static_cast<long>(rng.below(5)) - 2);
    longer.push_back(s);
    TruncatedSeries t(3);
    for (int m = 0; m <= 3; ++m) t.c[m] = s.c[m];
    shorter.push_back(t);
  }
  CHECK(truncated_relations(longer, 2).relations.size() <=
        truncated_relations(shorter, 2).relations.size());
}
