#include "lv/subspaces.hpp"

namespace lv {

Int gaussian_binomial(int dim_v, int dim_w, const Int& q) {
  if (dim_w < 0 || dim_w > dim_v) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < dim_w; ++i) {
    num *= pow_int(q, dim_v - i) - 1;
    den *= pow_int(q, i + 1) - 1;
  }
  return num / den;
}

void enumerate_subspaces(const FiniteField& k, int dim_v, int dim_w,
                         const std::function<void(const SubspaceBasis&)>& visit) {
  if (dim_w < 0 || dim_w > dim_v) throw DomainError("subspace dimension out of range");
  if (k.order() > 9) throw SizeLimitError("field order too large for subspace enumeration");
  if (dim_v > 6) throw SizeLimitError("ambient dimension too large for subspace enumeration");

  if (dim_w == 0) {
    visit(SubspaceBasis{});
    return;
  }

  // RREF normal form: choose pivot columns, then fill the free entries. Entry
  // (r, c) is free iff c > pivot[r] and c is not itself a pivot column.
  std::vector<int> pivots(dim_w);
  for (int i = 0; i < dim_w; ++i) pivots[i] = i;
  for (;;) {
    std::vector<bool> is_pivot(dim_v, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < dim_w; ++r)
      for (int c = pivots[r] + 1; c < dim_v; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(r, c);

    uint64_t total = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) total *= k.order();
    SubspaceBasis basis(dim_w, std::vector<FiniteField::Elem>(dim_v, k.zero()));
    for (int r = 0; r < dim_w; ++r) basis[r][pivots[r]] = k.one();
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t c = code;
      for (const auto& [r, col] : free_slots) {
        basis[r][col] = k.from_index(c % k.order());
        c /= k.order();
      }
      visit(basis);
    }

    // Next pivot combination in lexicographic order.
    int i = dim_w - 1;
    while (i >= 0 && pivots[i] == dim_v - dim_w + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < dim_w; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<SubspaceBasis> all_subspaces(const FiniteField& k, int dim_v, int dim_w) {
  std::vector<SubspaceBasis> out;
  enumerate_subspaces(k, dim_v, dim_w, [&](const SubspaceBasis& b) { out.push_back(b); });
  return out;
}

}  // namespace lv
