#include "lv/symplectic.hpp"

#include <algorithm>
#include <functional>

#include "lv/subspaces.hpp"

namespace lv {
namespace {

enum class SearchStatus { Found, None, Degenerate };

template <class F>
struct SearchOutcome {
  SearchStatus status = SearchStatus::Degenerate;
  std::vector<std::vector<typename F::Elem>> witness;
};

// Candidate roots for a monic polynomial, little-endian coefficients.
template <class F>
using RootCandidateFn =
    std::function<std::vector<typename F::Elem>(const std::vector<typename F::Elem>&)>;

template <class F>
SearchOutcome<F> structured_impl(const F& k, int d, const LagrangianTuple<F>& tuple,
                                 const RootCandidateFn<F>& candidates_for) {
  using E = typename F::Elem;
  SearchOutcome<F> out;
  for (const auto& f : tuple)
    if (!is_lagrangian(k, d, f)) throw DomainError("tuple member is not Lagrangian");
  if (tuple.size() < 4) return out;  // degenerate: proof structure needs F_1..F_4
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (intersection_dim(k, tuple[i], tuple[j]) != 0) return out;

  // Coordinates along V = F_1 + F_2.
  Mat<F> m12(k, 2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < 2 * d; ++j) {
      m12.at(i, j) = tuple[0][i][j];
      m12.at(d + i, j) = tuple[1][i][j];
    }
  const auto m12inv = inverse(k, m12);
  if (!m12inv) return out;

  // Graph map of F_g over the splitting: columns of X are F_1-coordinates of
  // the basis of F_g, Y the F_2-coordinates; the map is Y X^{-1}.
  auto graph_map = [&](const std::vector<std::vector<E>>& fg) -> std::optional<Mat<F>> {
    Mat<F> x(k, d, d), y(k, d, d);
    for (int l = 0; l < d; ++l) {
      for (int j = 0; j < 2 * d; ++j) {
        E coord = k.zero();
        for (int i = 0; i < 2 * d; ++i) coord = k.add(coord, k.mul(fg[l][i], m12inv->at(i, j)));
        if (j < d)
          x.at(j, l) = coord;
        else
          y.at(j - d, l) = coord;
      }
    }
    const auto xinv = inverse(k, x);
    if (!xinv) return std::nullopt;
    return mat_mul(k, y, *xinv);
  };

  const auto phi3 = graph_map(tuple[2]);
  const auto phi4 = graph_map(tuple[3]);
  if (!phi3 || !phi4) return out;
  const auto phi4inv = inverse(k, *phi4);
  if (!phi4inv) return out;
  const Mat<F> psi = mat_mul(k, *phi4inv, *phi3);

  auto cp = charpoly(k, psi);
  auto roots = roots_in_field(k, cp, candidates_for(cp));
  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) != d) return out;
  for (int i = 0; i + 1 < d; ++i)
    if (k.eq(roots[i], roots[i + 1])) return out;

  std::vector<std::vector<E>> eigvecs;  // F_1-coordinates
  for (const E& lam : roots) {
    Mat<F> a = psi;
    for (int i = 0; i < d; ++i) a.at(i, i) = k.sub(a.at(i, i), lam);
    auto kb = kernel_basis(k, a);
    if (kb.size() != 1) return out;
    eigvecs.push_back(kb[0]);
  }

  auto to_ambient = [&](const std::vector<E>& coords, int base_row) {
    std::vector<E> v(2 * d, k.zero());
    for (int i = 0; i < d; ++i) {
      const auto& b = base_row == 0 ? tuple[0][i] : tuple[1][i];
      for (int j = 0; j < 2 * d; ++j) v[j] = k.add(v[j], k.mul(coords[i], b[j]));
    }
    return v;
  };

  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    std::vector<std::vector<E>> w;
    for (int i = 0; i < d; ++i) {
      if (!(mask & (1u << i))) continue;
      w.push_back(to_ambient(eigvecs[i], 0));
      std::vector<E> image(d, k.zero());
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          image[r] = k.add(image[r], k.mul(phi3->at(r, c), eigvecs[i][c]));
      w.push_back(to_ambient(image, 1));
    }
    if (is_bad_subspace(k, d, w, tuple)) {
      out.status = SearchStatus::Found;
      out.witness = std::move(w);
      return out;
    }
  }
  out.status = SearchStatus::None;
  return out;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  std::vector<unsigned long> ds;
  for (unsigned long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  return ds;
}

// Rational-root-theorem candidates (monic input still cleared to integers).
std::vector<Rat> rational_root_candidates(const std::vector<Rat>& poly) {
  Int lcm_den = 1;
  for (const Rat& c : poly) {
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    lcm_den = lcm_den / g * c.get_den();
  }
  std::vector<Int> z;
  for (const Rat& c : poly) z.push_back(Int(c * Rat(lcm_den)));
  // Strip zero constant terms; zero is always a candidate.
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  std::vector<Rat> cands{Rat(0)};
  if (low >= z.size()) return cands;
  Int a0 = abs(z[low]), an = abs(z.back());
  if (!a0.fits_ulong_p() || !an.fits_ulong_p()) return {};  // budget: give up
  for (unsigned long p : divisors_of(a0.get_ui()))
    for (unsigned long q : divisors_of(an.get_ui())) {
      Rat r = make_rat(Int(p), Int(q));
      cands.push_back(r);
      cands.push_back(-r);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

LagrangianTuple<FiniteField> reduce_tuple_mod_p(const FiniteField& k,
                                                const LagrangianTuple<RationalField>& tuple) {
  LagrangianTuple<FiniteField> out;
  for (const auto& f : tuple) {
    std::vector<std::vector<FiniteField::Elem>> basis;
    for (const auto& v : f) {
      std::vector<FiniteField::Elem> row;
      for (const Rat& c : v) {
        const uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), k.p());
        if (den == 0) throw DomainError("denominator not invertible mod p");
        const uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), k.p());
        row.push_back(k.div(k.from_int(num), k.from_int(den)));
      }
      basis.push_back(std::move(row));
    }
    out.push_back(std::move(basis));
  }
  return out;
}

std::vector<FiniteField::Elem> all_field_elements(const FiniteField& k) {
  std::vector<FiniteField::Elem> out;
  out.reserve(k.order());
  for (uint64_t i = 0; i < k.order(); ++i) out.push_back(k.from_index(i));
  return out;
}

}  // namespace

LagrangianTuple<RationalField> finaux_tuple_q(int d) {
  if (d < 1) throw DomainError("finaux tuple needs d >= 1");
  LagrangianTuple<RationalField> tuple(5);
  auto unit = [&](int j) {
    std::vector<Rat> v(2 * d, Rat(0));
    v[j] = 1;
    return v;
  };
  for (int i = 0; i < d; ++i) {
    tuple[0].push_back(unit(i));          // F_1 = span(e_i)
    tuple[1].push_back(unit(d + i));      // F_2 = span(e_i')
    auto diag = unit(i);
    diag[d + i] = 1;                      // F_3 = span(e_i + e_i')
    tuple[2].push_back(diag);
    auto wdiag = unit(i);
    wdiag[d + i] = 2 * (i + 1);           // F_4 = span(e_i + 2i e_i')
    tuple[3].push_back(wdiag);
    auto dense = unit(i);                 // F_5 = graph of the Hilbert matrix
    for (int j = 0; j < d; ++j) dense[d + j] = make_rat(1, i + j + 1);
    tuple[4].push_back(dense);
  }
  return tuple;
}

std::optional<std::vector<std::vector<Rat>>> bad_lagrangian_search_q(
    int d, const LagrangianTuple<RationalField>& tuple) {
  RationalField k;
  auto out = structured_impl<RationalField>(k, d, tuple, rational_root_candidates);
  if (out.status == SearchStatus::Found) return out.witness;
  if (out.status == SearchStatus::None) return std::nullopt;

  // Degenerate composite: reduce modulo three fixed primes and require the
  // reductions to agree on nonexistence.
  int found = 0, none = 0;
  for (uint32_t p : {10007u, 10009u, 10037u}) {
    FiniteField fp(p, 1);
    LagrangianTuple<FiniteField> reduced = reduce_tuple_mod_p(fp, tuple);
    auto r = structured_impl<FiniteField>(
        fp, d, reduced,
        [&](const std::vector<FiniteField::Elem>&) { return all_field_elements(fp); });
    if (r.status == SearchStatus::Degenerate)
      throw SizeLimitError("bad-subspace search degenerate after modular reduction");
    (r.status == SearchStatus::Found ? found : none) += 1;
  }
  if (none == 3) return std::nullopt;
  if (found == 3)
    throw SizeLimitError(
        "modular reductions indicate a bad subspace; exact witness not constructed");
  throw SizeLimitError("modular reductions disagree on bad-subspace existence");
}

std::optional<std::vector<std::vector<FiniteField::Elem>>> bad_lagrangian_search_ff(
    const FiniteField& k, int d, const LagrangianTuple<FiniteField>& tuple) {
  auto out = structured_impl<FiniteField>(
      k, d, tuple,
      [&](const std::vector<FiniteField::Elem>&) { return all_field_elements(k); });
  if (out.status == SearchStatus::Found) return out.witness;
  if (out.status == SearchStatus::None) return std::nullopt;
  return bad_lagrangian_bruteforce(k, d, tuple);
}

std::vector<std::vector<FiniteField::Elem>> random_lagrangian(const FiniteField& k, int d,
                                                              Rng& rng) {
  std::vector<std::vector<FiniteField::Elem>> basis;
  while (static_cast<int>(basis.size()) < d) {
    // The pairing-perp of the current span; the span itself is contained in
    // it, so a random perp element extends the chain with good probability.
    Mat<FiniteField> pairings(k, std::max<int>(1, static_cast<int>(basis.size())), 2 * d);
    if (basis.empty()) {
      // No constraints yet: perp is everything.
      for (int j = 0; j < 2 * d; ++j) pairings.at(0, j) = k.zero();
    } else {
      for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<FiniteField::Elem> unit(2 * d, k.zero());
        for (int j = 0; j < 2 * d; ++j) {
          unit[j] = k.one();
          pairings.at(static_cast<int>(i), j) = symp_pairing(k, d, basis[i], unit);
          unit[j] = k.zero();
        }
      }
    }
    const auto perp = kernel_basis(k, pairings);
    std::vector<FiniteField::Elem> v(2 * d, k.zero());
    for (const auto& b : perp) {
      const auto c = k.random(rng);
      for (int j = 0; j < 2 * d; ++j) v[j] = k.add(v[j], k.mul(c, b[j]));
    }
    auto extended = basis;
    extended.push_back(v);
    if (subspace_dim(k, extended) == static_cast<int>(extended.size())) basis = std::move(extended);
  }
  return basis;
}

std::optional<std::vector<std::vector<FiniteField::Elem>>> bad_lagrangian_bruteforce(
    const FiniteField& k, int d, const LagrangianTuple<FiniteField>& tuple) {
  if (k.order() > 5 || 2 * d > 4)
    throw SizeLimitError("brute-force bad-subspace search limited to order <= 5, 2d <= 4");
  std::optional<std::vector<std::vector<FiniteField::Elem>>> hit;
  for (int dw = 1; dw < 2 * d && !hit; ++dw) {
    enumerate_subspaces(k, 2 * d, dw, [&](const SubspaceBasis& w) {
      if (hit) return;
      bool bad = true;
      for (const auto& f : tuple)
        if (2 * intersection_dim(k, f, w) < dw) {
          bad = false;
          break;
        }
      if (bad) hit = w;
    });
  }
  return hit;
}

}  // namespace lv
