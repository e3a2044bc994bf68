#include "lv/rootfilt.hpp"

#include <algorithm>
#include <sstream>

#include "lv/errors.hpp"
#include "lv/hodge.hpp"
#include "lv/subspaces.hpp"
#include "lv/symplectic.hpp"

namespace lv {
namespace {

std::vector<int> unit_vec(int n, int i, int val = 1) {
  std::vector<int> v(n, 0);
  v[i] = val;
  return v;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> negate(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

}  // namespace

RootDatum RootDatum::build(RootType type, int rank) {
  if (rank < 1) throw DomainError("root datum rank must be >= 1");
  if (type == RootType::B && rank < 2) throw DomainError("type B needs rank >= 2");
  if (type == RootType::C && rank < 2) throw DomainError("type C needs rank >= 2");
  if (type == RootType::D && rank < 3) throw DomainError("type D needs rank >= 3");
  RootDatum d;
  d.type = type;
  d.rank = rank;
  d.ambient = type == RootType::A ? rank + 1 : rank;
  const int n = d.ambient;

  auto diff = [&](int i, int j) {
    auto v = unit_vec(n, i);
    v[j] -= 1;
    return v;
  };
  auto sum2 = [&](int i, int j) {
    auto v = unit_vec(n, i);
    v[j] += 1;
    return v;
  };

  switch (type) {
    case RootType::A:
      for (int i = 0; i < rank; ++i) d.simple.push_back(diff(i, i + 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.positive.push_back(diff(i, j));
      break;
    case RootType::B:
      for (int i = 0; i + 1 < rank; ++i) d.simple.push_back(diff(i, i + 1));
      d.simple.push_back(unit_vec(n, rank - 1));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          d.positive.push_back(diff(i, j));
          d.positive.push_back(sum2(i, j));
        }
      for (int i = 0; i < rank; ++i) d.positive.push_back(unit_vec(n, i));
      break;
    case RootType::C:
      for (int i = 0; i + 1 < rank; ++i) d.simple.push_back(diff(i, i + 1));
      d.simple.push_back(unit_vec(n, rank - 1, 2));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          d.positive.push_back(diff(i, j));
          d.positive.push_back(sum2(i, j));
        }
      for (int i = 0; i < rank; ++i) d.positive.push_back(unit_vec(n, i, 2));
      break;
    case RootType::D:
      for (int i = 0; i + 1 < rank; ++i) d.simple.push_back(diff(i, i + 1));
      d.simple.push_back(sum2(rank - 2, rank - 1));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          d.positive.push_back(diff(i, j));
          d.positive.push_back(sum2(i, j));
        }
      break;
  }
  d.roots = d.positive;
  for (const auto& r : d.positive) d.roots.push_back(negate(r));
  return d;
}

std::vector<int> weyl_apply(const std::vector<std::vector<int>>& w, const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += w[i][j] * v[j];
  return out;
}

WeylGroup WeylGroup::build(const RootDatum& datum) {
  const int n = datum.ambient;
  std::vector<std::vector<std::vector<int>>> gens;
  for (const auto& alpha : datum.simple) {
    const int norm = dot(alpha, alpha);
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      s[i][i] = 1;
      for (int j = 0; j < n; ++j) {
        const int num = 2 * alpha[i] * alpha[j];
        if (num % norm != 0) throw DomainError("non-integral reflection matrix");
        s[i][j] -= num / norm;
      }
    }
    gens.push_back(std::move(s));
  }

  WeylGroup wg;
  std::vector<std::vector<int>> id(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::map<std::vector<std::vector<int>>, int> index;
  wg.elements.push_back(id);
  index[id] = 0;
  wg.identity_index = 0;
  for (size_t head = 0; head < wg.elements.size(); ++head) {
    const auto cur = wg.elements[head];
    for (const auto& g : gens) {
      std::vector<std::vector<int>> prod(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
          for (int j = 0; j < n; ++j) prod[i][j] += g[i][l] * cur[l][j];
      if (!index.count(prod)) {
        index[prod] = static_cast<int>(wg.elements.size());
        wg.elements.push_back(prod);
        if (wg.elements.size() > 3840) throw SizeLimitError("Weyl group larger than 3840");
      }
    }
  }
  return wg;
}

int weyl_length(const RootDatum& datum, const std::vector<std::vector<int>>& w) {
  std::set<std::vector<int>> pos(datum.positive.begin(), datum.positive.end());
  int len = 0;
  for (const auto& alpha : datum.positive)
    if (!pos.count(weyl_apply(w, alpha))) ++len;
  return len;
}

int pair_mu(const std::vector<int>& mu, const std::vector<int>& root) { return dot(mu, root); }

ParabolicPair ParabolicPair::build(const RootDatum& datum, const std::vector<int>& delta_p,
                                   const std::vector<int>& mu) {
  if (static_cast<int>(mu.size()) != datum.ambient)
    throw DomainError("cocharacter has wrong length");
  ParabolicPair pair;
  pair.datum = datum;
  pair.delta_p = delta_p;
  std::sort(pair.delta_p.begin(), pair.delta_p.end());
  for (int i : pair.delta_p)
    if (i < 0 || i >= datum.rank) throw DomainError("Delta_P index out of range");
  pair.mu = mu;
  for (int i = 0; i < datum.rank; ++i) {
    const int p = pair_mu(mu, datum.simple[i]);
    if (p < 0) throw DomainError("cocharacter is not dominant");
    if (p == 0) pair.delta_q.push_back(i);
  }

  // Support of each positive root in the simple basis, over Q.
  RationalField qf;
  Mat<RationalField> sys(qf, datum.ambient, datum.rank + 1);
  std::set<int> dp(pair.delta_p.begin(), pair.delta_p.end());
  pair.sigma_p.insert(datum.positive.begin(), datum.positive.end());
  for (const auto& gamma : datum.positive) {
    for (int i = 0; i < datum.ambient; ++i) {
      for (int j = 0; j < datum.rank; ++j) sys.at(i, j) = Rat(datum.simple[j][i]);
      sys.at(i, datum.rank) = Rat(gamma[i]);
    }
    Mat<RationalField> work = sys;
    std::vector<int> pivots;
    rref_in_place(qf, work, &pivots);
    // Unique expansion since the simple roots are independent; read it off.
    std::vector<Rat> coeff(datum.rank, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == datum.rank) throw DomainError("root outside simple-root span");
      coeff[pivots[r]] = work.at(static_cast<int>(r), datum.rank);
    }
    bool supported = true;
    for (int j = 0; j < datum.rank; ++j)
      if (coeff[j] != 0 && !dp.count(j)) {
        supported = false;
        break;
      }
    if (supported) pair.sigma_p.insert(negate(gamma));
  }

  for (const auto& gamma : datum.roots)
    if (pair_mu(mu, gamma) >= 0) pair.sigma_q.insert(gamma);
  return pair;
}

std::vector<int> wpq_enumerate(const WeylGroup& wg, const ParabolicPair& pair) {
  const RootDatum& d = pair.datum;
  std::set<std::vector<int>> pos(d.positive.begin(), d.positive.end());
  std::vector<int> out;
  for (int wi = 0; wi < static_cast<int>(wg.elements.size()); ++wi) {
    const auto& w = wg.elements[wi];
    // Orthogonal (signed-permutation) matrices: inverse is the transpose.
    auto winv = w;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) winv[i][j] = w[j][i];
    bool ok = true;
    for (int i : pair.delta_p)
      if (!pos.count(weyl_apply(winv, d.simple[i]))) {
        ok = false;
        break;
      }
    if (ok)
      for (int i : pair.delta_q)
        if (!pos.count(weyl_apply(w, d.simple[i]))) {
          ok = false;
          break;
        }
    if (ok) out.push_back(wi);
  }
  return out;
}

int double_coset_count(const WeylGroup& wg, const ParabolicPair& pair) {
  const RootDatum& d = pair.datum;
  const int n = d.ambient;
  std::map<std::vector<std::vector<int>>, int> index;
  for (int i = 0; i < static_cast<int>(wg.elements.size()); ++i) index[wg.elements[i]] = i;

  auto mul = [&](const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    std::vector<std::vector<int>> prod(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) prod[i][j] += a[i][l] * b[l][j];
    return prod;
  };
  auto reflection = [&](int simple_idx) {
    const auto& alpha = d.simple[simple_idx];
    const int norm = dot(alpha, alpha);
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      s[i][i] = 1;
      for (int j = 0; j < n; ++j) s[i][j] -= 2 * alpha[i] * alpha[j] / norm;
    }
    return s;
  };

  std::vector<int> parent(wg.elements.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int wi = 0; wi < static_cast<int>(wg.elements.size()); ++wi) {
    for (int i : pair.delta_p) parent[find(wi)] = find(index.at(mul(reflection(i), wg.elements[wi])));
    for (int j : pair.delta_q) parent[find(wi)] = find(index.at(mul(wg.elements[wi], reflection(j))));
  }
  std::set<int> roots;
  for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

RootLemmaReport root_lemma_check(const WeylGroup& wg, int w_index, const ParabolicPair& pair) {
  const RootDatum& d = pair.datum;
  const auto& w = wg.elements[w_index];
  auto winv = w;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) winv[i][j] = w[j][i];
  std::set<std::vector<int>> pos(d.positive.begin(), d.positive.end());

  std::set<std::vector<int>> set_q, set_p;
  for (const auto& gamma : d.roots) {
    if (!pair.sigma_q.count(gamma) && pos.count(weyl_apply(w, gamma))) set_q.insert(gamma);
    if (!pair.sigma_p.count(gamma) && pos.count(weyl_apply(winv, gamma))) set_p.insert(gamma);
  }
  RootLemmaReport rep;
  rep.length = weyl_length(d, w);
  rep.set_q_size = set_q.size();
  rep.set_p_size = set_p.size();
  std::set<std::vector<int>> image;
  for (const auto& beta : set_q) image.insert(negate(weyl_apply(w, beta)));
  rep.bijection_ok = image == set_p && image.size() == set_q.size();
  rep.sizes_match_length =
      rep.set_q_size == static_cast<size_t>(rep.length) && rep.set_p_size == rep.set_q_size;
  return rep;
}

bool is_bad(const WeylGroup& wg, int w_index, const ParabolicPair& pair, BadMode mode) {
  const RootDatum& d = pair.datum;
  const std::vector<int> wmu = weyl_apply(wg.elements[w_index], pair.mu);
  if (mode == BadMode::Aggregate) {
    long sum = 0;
    for (const auto& gamma : d.roots)
      if (!pair.sigma_p.count(gamma)) sum += pair_mu(wmu, gamma);
    return sum == 0;
  }
  // Exact blocks: Levi blocks of P read off the coordinate weights.
  std::set<int> dp(pair.delta_p.begin(), pair.delta_p.end());
  if (d.type == RootType::A) {
    const int n = d.ambient;
    long total = 0;
    for (int x : wmu) total += x;
    int start = 0;
    for (int i = 0; i < n; ++i) {
      const bool brk = i == n - 1 || !dp.count(i);
      if (!brk) continue;
      long bsum = 0;
      for (int j = start; j <= i; ++j) bsum += wmu[j];
      // block average equals global average: bsum/(i-start+1) == total/n
      if (static_cast<long>(n) * bsum != total * (i - start + 1)) return false;
      start = i + 1;
    }
    return true;
  }
  if (d.type == RootType::C) {
    const int kk = d.rank;
    std::vector<long> s;
    for (int i = 0; i < kk; ++i) s.push_back(wmu[i]);
    for (int i = kk - 1; i >= 0; --i) s.push_back(-wmu[i]);
    // Break after position i (0-based, within 0..2k-2) when the matching
    // simple root is not in Delta_P; breaks are mirror symmetric.
    auto breaks_after = [&](int i) {
      if (i < kk - 1) return !dp.count(i);
      if (i == kk - 1) return !dp.count(kk - 1);
      return !dp.count(2 * kk - 2 - i);
    };
    int start = 0;
    for (int i = 0; i < 2 * kk; ++i) {
      const bool brk = i == 2 * kk - 1 || breaks_after(i);
      if (!brk) continue;
      long bsum = 0;
      for (int j = start; j <= i; ++j) bsum += s[j];
      if (bsum != 0) return false;  // global average is zero
      start = i + 1;
    }
    return true;
  }
  throw DomainError("exact-blocks badness only supported for types A and C");
}

int dim_gq(const ParabolicPair& pair) {
  int n = 0;
  for (const auto& gamma : pair.datum.roots)
    if (pair_mu(pair.mu, gamma) > 0) ++n;
  return n;
}

int fiber_codim(const WeylGroup& wg, int w_index, const ParabolicPair& pair) {
  const RootDatum& d = pair.datum;
  const auto& w = wg.elements[w_index];
  auto winv = w;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) winv[i][j] = w[j][i];
  std::set<std::vector<int>> pos(d.positive.begin(), d.positive.end());
  int x = 0;
  for (const auto& beta : d.roots)
    if (!pair.sigma_p.count(beta) && pos.count(weyl_apply(winv, beta))) ++x;
  return dim_gq(pair) - x;
}

Lw2Summary lw2_harness(const RootDatum& datum, int mu_bound, int e) {
  if (datum.rank > 4) throw SizeLimitError("lw2 harness limited to rank <= 4");
  if (e < 1) throw DomainError("lw2 harness needs e >= 1");
  const WeylGroup wg = WeylGroup::build(datum);
  Lw2Summary summary;

  // Dominant mu with entries in [-mu_bound, mu_bound].
  std::vector<std::vector<int>> mus;
  std::vector<int> mu(datum.ambient, -mu_bound);
  for (;;) {
    bool dominant = true;
    for (const auto& alpha : datum.simple)
      if (pair_mu(mu, alpha) < 0) {
        dominant = false;
        break;
      }
    if (dominant) mus.push_back(mu);
    int pos = datum.ambient - 1;
    while (pos >= 0 && mu[pos] == mu_bound) mu[pos--] = -mu_bound;
    if (pos < 0) break;
    ++mu[pos];
  }

  for (unsigned pm = 0; pm < (1u << datum.rank); ++pm) {
    std::vector<int> delta_p;
    for (int i = 0; i < datum.rank; ++i)
      if (pm & (1u << i)) delta_p.push_back(i);
    for (const auto& m : mus) {
      ++summary.configurations;
      const ParabolicPair pair = ParabolicPair::build(datum, delta_p, m);

      HodgeSpectrum spec;
      spec.kind = HodgeSpectrum::Kind::Adjoint;
      for (const auto& gamma : datum.roots) ++spec.entries[pair_mu(m, gamma)];
      spec.entries[0] += datum.rank;  // dim(T) zeros
      Int sum_pos = 0;
      Int dgq = 0;
      for (const auto& [p, h] : spec.entries)
        if (p > 0) {
          sum_pos += Int(p) * h;
          dgq += h;
        }
      const Int a0 = spec.at(0);
      bool hypothesis = Int(e) <= dgq;
      if (hypothesis) {
        const Rat t1 = T_function(spec, Rat(e));
        const Rat t2 = T_function(spec, make_rat(a0, Int(2)) + Rat(e));
        hypothesis = Rat(sum_pos) > t1 + t2;
      }
      if (!hypothesis) {
        ++summary.hypothesis_fails;
        continue;
      }
      ++summary.hypothesis_holds;
      for (int wi : wpq_enumerate(wg, pair)) {
        if (!is_bad(wg, wi, pair, BadMode::Aggregate)) continue;
        const int codim = fiber_codim(wg, wi, pair);
        if (codim <= e) summary.counterexamples.push_back({delta_p, m, wi, codim});
      }
    }
  }
  return summary;
}

namespace {

using Basis = std::vector<std::vector<FiniteField::Elem>>;

Basis perp_basis(const FiniteField& k, int d, const Basis& u) {
  if (u.empty()) {
    Basis full;
    for (int i = 0; i < 2 * d; ++i) {
      std::vector<FiniteField::Elem> v(2 * d, k.zero());
      v[i] = k.one();
      full.push_back(v);
    }
    return full;
  }
  Mat<FiniteField> pairings(k, static_cast<int>(u.size()), 2 * d);
  for (size_t i = 0; i < u.size(); ++i) {
    std::vector<FiniteField::Elem> unit(2 * d, k.zero());
    for (int j = 0; j < 2 * d; ++j) {
      unit[j] = k.one();
      pairings.at(static_cast<int>(i), j) = symp_pairing(k, d, u[i], unit);
      unit[j] = k.zero();
    }
  }
  return kernel_basis(k, pairings);
}

bool contains(const FiniteField& k, const Basis& big, const Basis& small) {
  return intersection_dim(k, big, small) == static_cast<int>(small.size());
}

bool phi_stable(const FiniteField& k, const Mat<FiniteField>& phi, const Basis& u) {
  Basis joined = u;
  for (const auto& v : u) {
    std::vector<FiniteField::Elem> img(phi.rows, k.zero());
    for (int i = 0; i < phi.rows; ++i)
      for (int j = 0; j < phi.cols; ++j) img[i] = k.add(img[i], k.mul(phi.at(i, j), v[j]));
    joined.push_back(std::move(img));
  }
  return subspace_dim(k, joined) == static_cast<int>(u.size());
}

// Coordinates of y in the row span of basis (must lie in it).
std::vector<FiniteField::Elem> coords_in_basis(const FiniteField& k, const Basis& basis,
                                               const std::vector<FiniteField::Elem>& y) {
  const int m = static_cast<int>(basis.size());
  const int n = static_cast<int>(y.size());
  Mat<FiniteField> aug(k, n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = basis[j][i];
    aug.at(i, m) = y[i];
  }
  std::vector<int> pivots;
  rref_in_place(k, aug, &pivots);
  std::vector<FiniteField::Elem> c(m, k.zero());
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m) throw DomainError("vector outside spanning set");
    c[pivots[r]] = aug.at(static_cast<int>(r), m);
  }
  return c;
}

std::vector<FiniteField::Elem> apply_phi(const FiniteField& k, const Mat<FiniteField>& phi,
                                         const std::vector<FiniteField::Elem>& v) {
  std::vector<FiniteField::Elem> img(phi.rows, k.zero());
  for (int i = 0; i < phi.rows; ++i)
    for (int j = 0; j < phi.cols; ++j) img[i] = k.add(img[i], k.mul(phi.at(i, j), v[j]));
  return img;
}

}  // namespace

LinalgCensus linalg_census(const FiniteField& k, int d, const std::vector<int>& flag_type,
                           const Mat<FiniteField>& phi) {
  if (2 * d > 4 || (k.order() != 3 && k.order() != 5))
    throw SizeLimitError("linalg census limited to 2d <= 4, q in {3, 5}");
  if (phi.rows != 2 * d || phi.cols != 2 * d) throw DomainError("phi must be 2d x 2d");

  // phi must be a symplectic similitude with a single multiplier.
  {
    std::vector<std::vector<FiniteField::Elem>> units;
    for (int i = 0; i < 2 * d; ++i) {
      std::vector<FiniteField::Elem> v(2 * d, k.zero());
      v[i] = k.one();
      units.push_back(v);
    }
    FiniteField::Elem lambda = k.zero();
    bool have = false;
    for (int i = 0; i < 2 * d; ++i)
      for (int j = 0; j < 2 * d; ++j) {
        const auto lhs =
            symp_pairing(k, d, apply_phi(k, phi, units[i]), apply_phi(k, phi, units[j]));
        const auto rhs = symp_pairing(k, d, units[i], units[j]);
        if (k.is_zero(rhs)) {
          if (!k.is_zero(lhs)) throw DomainError("phi is not a symplectic similitude");
        } else {
          const auto ratio = k.div(lhs, rhs);
          if (!have) {
            lambda = ratio;
            have = true;
          } else if (!k.eq(lambda, ratio)) {
            throw DomainError("phi is not a symplectic similitude");
          }
        }
      }
    if (!have || k.is_zero(lambda)) throw DomainError("phi is not a symplectic similitude");
  }

  // Validate flag type: strictly increasing isotropic dims <= d.
  std::vector<int> iso_dims = flag_type;
  std::sort(iso_dims.begin(), iso_dims.end());
  if (iso_dims.empty()) throw DomainError("empty flag type");
  for (size_t i = 0; i < iso_dims.size(); ++i) {
    if (iso_dims[i] < 1 || iso_dims[i] > d) throw DomainError("flag type dims must lie in [1, d]");
    if (i > 0 && iso_dims[i] == iso_dims[i - 1]) throw DomainError("repeated flag type dim");
  }

  // Enumerate isotropic chains matching iso_dims; each chain is completed to
  // a self-dual flag by adjoining the pairing-perps.
  std::vector<std::vector<Basis>> chains;  // each chain: bases at iso_dims
  {
    std::function<void(size_t, std::vector<Basis>&)> rec = [&](size_t level,
                                                               std::vector<Basis>& acc) {
      if (level == iso_dims.size()) {
        chains.push_back(acc);
        return;
      }
      enumerate_subspaces(k, 2 * d, iso_dims[level], [&](const SubspaceBasis& w) {
        // isotropic?
        for (size_t i = 0; i < w.size(); ++i)
          for (size_t j = i; j < w.size(); ++j)
            if (!k.is_zero(symp_pairing(k, d, w[i], w[j]))) return;
        if (!acc.empty() && !contains(k, w, acc.back())) return;
        acc.push_back(w);
        rec(level + 1, acc);
        acc.pop_back();
      });
    };
    std::vector<Basis> acc;
    rec(0, acc);
  }

  // All nontrivial phi-stable isotropic subspaces, for the filtrations f.
  std::vector<Basis> stable_iso;
  for (int dim = 1; dim <= d; ++dim)
    enumerate_subspaces(k, 2 * d, dim, [&](const SubspaceBasis& u) {
      for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i; j < u.size(); ++j)
          if (!k.is_zero(symp_pairing(k, d, u[i], u[j]))) return;
      if (phi_stable(k, phi, u)) stable_iso.push_back(u);
    });
  // Candidate filtrations: stable isotropic chains of length 1 or 2.
  std::vector<std::vector<Basis>> filtrations;
  for (const auto& u : stable_iso) filtrations.push_back({u});
  for (const auto& u1 : stable_iso)
    for (const auto& u2 : stable_iso)
      if (u1.size() < u2.size() && contains(k, u2, u1)) filtrations.push_back({u1, u2});

  LinalgCensus census;
  for (const auto& chain : chains) {
    ++census.total_flags;
    // Full member list of the flag, ascending dims, with perp completions.
    std::vector<Basis> members;
    for (const auto& b : chain) members.push_back(b);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      if (2 * d - static_cast<int>(it->size()) != static_cast<int>(it->size()))
        members.push_back(perp_basis(k, d, *it));
    const int r = static_cast<int>(members.size());
    // Piece t (0 = bottom member, r = top quotient) carries weight r - 2t.
    auto member_dim = [&](int t) {
      if (t < 0) return 0;
      if (t >= r) return 2 * d;
      return static_cast<int>(members[t].size());
    };
    // Global weight average (numerator over 2d).
    long global_num = 0;
    for (int t = 0; t <= r; ++t) global_num += static_cast<long>(r - 2 * t) *
                                               (member_dim(t) - member_dim(t - 1));

    std::string bad_key;
    for (const auto& filt : filtrations) {
      // f members ascending: U_1 (, U_2), perps, completing to V.
      std::vector<Basis> fm;
      for (const auto& u : filt) fm.push_back(u);
      for (auto it = filt.rbegin(); it != filt.rend(); ++it)
        if (2 * d - static_cast<int>(it->size()) != static_cast<int>(it->size()))
          fm.push_back(perp_basis(k, d, *it));
      const int fr = static_cast<int>(fm.size());
      auto f_dim = [&](int t) {
        if (t < 0) return 0;
        if (t >= fr) return 2 * d;
        return static_cast<int>(fm[t].size());
      };
      // Condition (b): for each graded piece A/B of f, the flag-weight average
      // equals the global average.
      bool balanced = true;
      for (int t = 0; t <= fr && balanced; ++t) {
        const int dim_piece = f_dim(t) - f_dim(t - 1);
        if (dim_piece == 0) continue;
        const Basis empty;
        const Basis& a = t >= fr ? empty : fm[t];      // empty means V
        const Basis& b = t - 1 < 0 ? empty : fm[t - 1];  // empty means 0
        auto dim_meet = [&](int mt, const Basis& x, bool x_is_v) {
          // dim(member_mt intersect x); x_is_v means x = V.
          if (mt >= r) return x_is_v ? 2 * d : static_cast<int>(x.size());
          if (x_is_v) return static_cast<int>(members[mt].size());
          return intersection_dim(k, members[mt], x);
        };
        long piece_num = 0;
        for (int mt = 0; mt <= r; ++mt) {
          const bool a_is_v = t >= fr;
          const bool b_is_0 = t - 1 < 0;
          // dim gr^mt on A/B = [dim(M_mt cap A) - dim(M_mt cap B)]
          //                  - [dim(M_{mt-1} cap A) - dim(M_{mt-1} cap B)]
          auto gr_upto = [&](int m_idx) {
            if (m_idx < 0) return 0;
            const int da = dim_meet(m_idx, a, a_is_v);
            const int db = b_is_0 ? 0 : dim_meet(m_idx, b, false);
            return da - db;
          };
          piece_num += static_cast<long>(r - 2 * mt) * (gr_upto(mt) - gr_upto(mt - 1));
        }
        // piece_num/dim_piece == global_num/2d
        if (piece_num * 2 * d != global_num * dim_piece) balanced = false;
      }
      if (!balanced) continue;

      // Bad flag; key from this witnessing filtration: graded dims plus the
      // characteristic polynomial of induced phi on each piece.
      std::ostringstream key;
      key << "dims";
      for (int t = 0; t <= fr; ++t) key << ':' << (f_dim(t) - f_dim(t - 1));
      for (int t = 0; t <= fr; ++t) {
        const Basis empty;
        const Basis& a = t >= fr ? empty : fm[t];
        const Basis& b = t - 1 < 0 ? empty : fm[t - 1];
        // Adapted basis: b extended into a (or into V for the top piece).
        Basis adapted = b;
        Basis pool;
        if (t >= fr) {
          for (int i = 0; i < 2 * d; ++i) {
            std::vector<FiniteField::Elem> v(2 * d, k.zero());
            v[i] = k.one();
            pool.push_back(v);
          }
        } else {
          pool = a;
        }
        std::vector<std::vector<FiniteField::Elem>> ext;
        for (const auto& v : pool) {
          auto test = adapted;
          test.push_back(v);
          if (subspace_dim(k, test) == static_cast<int>(test.size())) {
            adapted.push_back(v);
            ext.push_back(v);
          }
        }
        const int m = static_cast<int>(ext.size());
        Mat<FiniteField> induced(k, m, m);
        for (int c = 0; c < m; ++c) {
          const auto img = apply_phi(k, phi, ext[c]);
          const auto coords = coords_in_basis(k, adapted, img);
          for (int rrow = 0; rrow < m; ++rrow)
            induced.at(rrow, c) = coords[b.size() + rrow];
        }
        key << ";cp";
        for (const auto& cpc : charpoly(k, induced)) key << ':' << k.index(cpc);
      }
      bad_key = key.str();
      break;
    }
    if (!bad_key.empty()) {
      ++census.bad_flags;
      ++census.bad_by_key[bad_key];
    }
  }
  return census;
}

}  // namespace lv
