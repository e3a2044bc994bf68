#include "lv/flatseries.hpp"

#include <algorithm>

#include "lv/errors.hpp"
#include "lv/matrix.hpp"

namespace lv {

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  TruncatedSeries out(order);
  for (int i = 0; i <= std::min(order, a.order()); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j <= std::min(order - i, b.order()); ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

std::vector<TruncatedSeries> solve_flat_sections(const TruncatedSeriesConnection& conn,
                                                 const std::vector<Rat>& init) {
  if (conn.order < 1) throw DomainError("connection order must be >= 1");
  if (static_cast<int>(conn.A.size()) != conn.r)
    throw DomainError("connection matrix has wrong shape");
  for (const auto& row : conn.A)
    if (static_cast<int>(row.size()) != conn.r)
      throw DomainError("connection matrix has wrong shape");
  if (static_cast<int>(init.size()) != conn.r)
    throw DomainError("initial condition has wrong length");

  const int k = conn.order;
  std::vector<TruncatedSeries> f(conn.r, TruncatedSeries(k));
  for (int i = 0; i < conn.r; ++i) f[i].c[0] = init[i];
  for (int m = 0; m < k; ++m) {
    for (int i = 0; i < conn.r; ++i) {
      Rat acc = 0;
      for (int j = 0; j < conn.r; ++j) {
        const TruncatedSeries& a = conn.A[j][i];
        for (int aa = 0; aa <= std::min(m, a.order()); ++aa)
          acc += a.c[aa] * f[j].c[m - aa];
      }
      f[i].c[m + 1] = -acc / Rat(m + 1);
    }
  }
  return f;
}

int flat_residual_valid_to(const TruncatedSeriesConnection& conn,
                           const std::vector<TruncatedSeries>& f) {
  const int k = conn.order;
  for (int m = 0; m < k; ++m) {
    for (int i = 0; i < conn.r; ++i) {
      // coefficient of z^m in f_i' + sum_j A_{ji} f_j
      Rat acc = Rat(m + 1) * f[i].c[m + 1];
      for (int j = 0; j < conn.r; ++j) {
        const TruncatedSeries& a = conn.A[j][i];
        for (int aa = 0; aa <= std::min(m, a.order()); ++aa)
          acc += a.c[aa] * f[j].c[m - aa];
      }
      if (acc != 0) return m;
    }
  }
  return k;
}

ValuationProfile padic_valuation_profile(const TruncatedSeries& f, uint64_t p) {
  if (p < 2) throw DomainError("padic_valuation_profile needs p >= 2");
  ValuationProfile prof;
  Int pz(static_cast<unsigned long>(p));
  for (int m = 0; m <= f.order(); ++m) {
    if (f.c[m] == 0) continue;  // valuation +infinity, skipped
    Int tmp;
    const long vnum = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), f.c[m].get_num().get_mpz_t(), pz.get_mpz_t()));
    const long vden = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), f.c[m].get_den().get_mpz_t(), pz.get_mpz_t()));
    const long shifted = vnum - vden + (m + static_cast<long>(p) - 2) / (static_cast<long>(p) - 1);
    prof.entries.emplace_back(m, shifted);
    if (!prof.any || shifted < prof.min) prof.min = shifted;
    prof.any = true;
  }
  return prof;
}

RelationBasis truncated_relations(const std::vector<TruncatedSeries>& B, int degree) {
  if (B.empty()) throw DomainError("truncated_relations needs at least one series");
  if (degree < 1) throw DomainError("relation degree must be >= 1");
  const int nvars = static_cast<int>(B.size());
  int k = B[0].order();
  for (const auto& s : B) k = std::min(k, s.order());

  RelationBasis basis;
  basis.degree = degree;
  // Exponent vectors of total degree `degree`, lexicographic from the last
  // variable upward.
  std::vector<int> expo(nvars, 0);
  expo[0] = degree;
  for (;;) {
    basis.monomials.push_back(expo);
    // next composition of `degree` into nvars parts
    int i = nvars - 2;
    while (i >= 0 && expo[i] == 0) --i;
    if (i < 0) break;
    --expo[i];
    int tail = 0;
    for (int j = i + 1; j < nvars; ++j) {
      tail += expo[j];
      expo[j] = 0;
    }
    expo[i + 1] = tail + 1;
  }

  RationalField qf;
  Mat<RationalField> sys(qf, k + 1, static_cast<int>(basis.monomials.size()));
  for (size_t col = 0; col < basis.monomials.size(); ++col) {
    TruncatedSeries prod(k);
    prod.c[0] = 1;
    for (int v = 0; v < nvars; ++v)
      for (int rep = 0; rep < basis.monomials[col][v]; ++rep) prod = ts_mul(prod, B[v], k);
    for (int row = 0; row <= k; ++row) sys.at(row, static_cast<int>(col)) = prod.c[row];
  }
  basis.relations = kernel_basis(qf, sys);
  return basis;
}

}  // namespace lv
