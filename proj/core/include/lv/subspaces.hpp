#pragma once

#include <functional>
#include <vector>

#include "lv/finite_field.hpp"
#include "lv/matrix.hpp"
#include "lv/numbers.hpp"

namespace lv {

// A subspace given by its reduced-row-echelon basis, rows = basis vectors.
using SubspaceBasis = std::vector<std::vector<FiniteField::Elem>>;

// Number of dim_w-subspaces of F_q^dim_v (Gaussian binomial coefficient).
Int gaussian_binomial(int dim_v, int dim_w, const Int& q);

// Visits every dim_w-dimensional subspace of F^dim_v exactly once, as an RREF
// basis. Guards: field order <= 9, dim_v <= 6.
void enumerate_subspaces(const FiniteField& k, int dim_v, int dim_w,
                         const std::function<void(const SubspaceBasis&)>& visit);

// Convenience: materialized list.
std::vector<SubspaceBasis> all_subspaces(const FiniteField& k, int dim_v, int dim_w);

}  // namespace lv
