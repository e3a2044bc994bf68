#pragma once

#include <vector>

#include "lv/numbers.hpp"

namespace lv {

// Power series in one variable, exact rational coefficients, truncated at a
// fixed order: c[0] + c[1] z + ... + c[order] z^order.
struct TruncatedSeries {
  std::vector<Rat> c;

  explicit TruncatedSeries(int order = 0) : c(order + 1, Rat(0)) {}
  int order() const { return static_cast<int>(c.size()) - 1; }
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b, int order);

// Connection nabla v_i = sum_j A_{ij} v_j dz with truncated-series entries.
struct TruncatedSeriesConnection {
  int r = 0;
  std::vector<std::vector<TruncatedSeries>> A;  // r x r
  int order = 0;
};

// Unique formal flat section with f(0) = init, by the coefficient recurrence
// (m+1) f^{(m+1)}_i = -sum_j sum_{a+b=m} A^{(a)}_{ji} f^{(b)}_j.
std::vector<TruncatedSeries> solve_flat_sections(const TruncatedSeriesConnection& conn,
                                                 const std::vector<Rat>& init);

// First order at which the substituted ODE residual d f_i + sum_j A_{ji} f_j
// fails to vanish; equals conn.order when the residual vanishes through
// z^{order-1} (the last order the truncation determines).
int flat_residual_valid_to(const TruncatedSeriesConnection& conn,
                           const std::vector<TruncatedSeries>& f);

struct ValuationProfile {
  // (m, val_p(c_m) + ceil(m/(p-1))) for each nonzero coefficient.
  std::vector<std::pair<int, long>> entries;
  bool any = false;
  long min = 0;
};

// Shifted p-adic valuation profile; a lower bound on min is the concrete form
// of convergence on |z| < |p|^{1/(p-1)}.
ValuationProfile padic_valuation_profile(const TruncatedSeries& f, uint64_t p);

struct RelationBasis {
  int degree = 0;
  // Exponent vectors of the degree-D monomials, in enumeration order.
  std::vector<std::vector<int>> monomials;
  // Kernel vectors: coefficients per monomial; each gives a homogeneous Q
  // with Q(B_0..B_N) = 0 up to the common truncation order.
  std::vector<std::vector<Rat>> relations;
};

RelationBasis truncated_relations(const std::vector<TruncatedSeries>& B, int degree);

}  // namespace lv
