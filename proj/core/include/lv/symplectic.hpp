#pragma once

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "lv/errors.hpp"
#include "lv/finite_field.hpp"
#include "lv/matrix.hpp"

namespace lv {

// Standard symplectic space of dimension 2d: basis e_1..e_d, e_1'..e_d' with
// <e_i, e_i'> = 1, <e_i', e_i> = -1, all other pairings zero. Vectors are
// coordinate rows of length 2d; subspaces are lists of basis vectors.

template <class F>
typename F::Elem symp_pairing(const F& k, int d, const std::vector<typename F::Elem>& v,
                              const std::vector<typename F::Elem>& w) {
  auto acc = k.zero();
  for (int i = 0; i < d; ++i) {
    acc = k.add(acc, k.mul(v[i], w[d + i]));
    acc = k.sub(acc, k.mul(v[d + i], w[i]));
  }
  return acc;
}

// x -> x + r <v, x> v.
template <class F>
std::vector<typename F::Elem> apply_transvection(const F& k, int d,
                                                 const std::vector<typename F::Elem>& v,
                                                 const typename F::Elem& r,
                                                 const std::vector<typename F::Elem>& x) {
  const auto scale = k.mul(r, symp_pairing(k, d, v, x));
  auto out = x;
  for (int i = 0; i < 2 * d; ++i) out[i] = k.add(out[i], k.mul(scale, v[i]));
  return out;
}

template <class F>
int subspace_dim(const F& k, const std::vector<std::vector<typename F::Elem>>& vectors) {
  if (vectors.empty()) return 0;
  Mat<F> m(k, static_cast<int>(vectors.size()), static_cast<int>(vectors[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = vectors[i][j];
  return rank(k, m);
}

// dim(A cap B) = dim A + dim B - dim(A + B).
template <class F>
int intersection_dim(const F& k, const std::vector<std::vector<typename F::Elem>>& a,
                     const std::vector<std::vector<typename F::Elem>>& b) {
  auto stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  return subspace_dim(k, a) + subspace_dim(k, b) - subspace_dim(k, stacked);
}

template <class F>
bool is_lagrangian(const F& k, int d, const std::vector<std::vector<typename F::Elem>>& a) {
  if (subspace_dim(k, a) != d) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i; j < a.size(); ++j)
      if (!k.is_zero(symp_pairing(k, d, a[i], a[j]))) return false;
  return true;
}

// W is bad for the tuple when W is proper nonzero and every F_j meets it in
// at least half its dimension.
template <class F>
bool is_bad_subspace(const F& k, int d, const std::vector<std::vector<typename F::Elem>>& w,
                     const std::vector<std::vector<std::vector<typename F::Elem>>>& tuple) {
  const int dw = subspace_dim(k, w);
  if (dw == 0 || dw == 2 * d) return false;
  for (const auto& f : tuple)
    if (2 * intersection_dim(k, f, w) < dw) return false;
  return true;
}

struct GraphCertificate {
  bool connected = false;
  int span_dim = 0;
  std::vector<int> component;  // component id per input vector
  bool full = false;           // connected and span == 2d
};

// Graph on S with an edge where the pairing is nonzero. connected + full span
// certifies that the transvections with these centers generate a Zariski-dense
// subgroup of Sp(V).
template <class F>
GraphCertificate transvection_graph_certificate(
    const F& k, int d, const std::vector<std::vector<typename F::Elem>>& s) {
  const int n = static_cast<int>(s.size());
  if (n == 0) throw DomainError("empty center list");
  for (const auto& v : s) {
    bool zero = true;
    for (const auto& c : v)
      if (!k.is_zero(c)) {
        zero = false;
        break;
      }
    if (zero) throw DomainError("zero vector is not a transvection center");
  }
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!k.is_zero(symp_pairing(k, d, s[i], s[j]))) parent[find(i)] = find(j);
  GraphCertificate cert;
  cert.component.resize(n);
  std::set<int> roots;
  for (int i = 0; i < n; ++i) {
    cert.component[i] = find(i);
    roots.insert(cert.component[i]);
  }
  cert.connected = roots.size() == 1;
  cert.span_dim = subspace_dim(k, s);
  cert.full = cert.connected && cert.span_dim == 2 * d;
  return cert;
}

template <class F>
struct GoursatWitness {
  int i = 0, j = 0;                 // factor indices, 0-based
  std::vector<Mat<F>> components;  // one 2d x 2d matrix per factor
};

struct GoursatReport {
  std::vector<bool> factor_certified;
  std::vector<std::pair<int, int>> witnessed_pairs;
  bool all_factors_certified = false;
  bool all_pairs_witnessed = false;  // every unordered pair of factors
};

// Hypothesis check for the Goursat-style density criterion: every factor has a
// full transvection-graph certificate and every listed pair has a witness whose
// two components are unipotent with fixed spaces of different dimensions.
template <class F>
GoursatReport goursat_witness_check(const F& k, int d,
                                    const std::vector<GraphCertificate>& per_factor,
                                    const std::vector<GoursatWitness<F>>& witnesses) {
  const int nfac = static_cast<int>(per_factor.size());
  GoursatReport rep;
  for (const auto& c : per_factor) rep.factor_certified.push_back(c.full);
  rep.all_factors_certified = true;
  for (bool b : rep.factor_certified) rep.all_factors_certified = rep.all_factors_certified && b;

  auto fixed_dim = [&](const Mat<F>& u) {
    Mat<F> um1 = u;
    for (int i = 0; i < um1.rows; ++i) um1.at(i, i) = k.sub(um1.at(i, i), k.one());
    // Unipotence: (u - 1)^{2d} = 0.
    Mat<F> p = um1;
    for (int i = 1; i < 2 * d; ++i) p = mat_mul(k, p, um1);
    for (const auto& e : p.a)
      if (!k.is_zero(e)) throw DomainError("witness component is not unipotent");
    return 2 * d - rank(k, um1);
  };

  std::set<std::pair<int, int>> witnessed;
  for (const auto& w : witnesses) {
    if (w.i < 0 || w.j < 0 || w.i >= nfac || w.j >= nfac || w.i == w.j)
      throw DomainError("witness pair indices out of range");
    if (static_cast<int>(w.components.size()) != nfac)
      throw DomainError("witness must have one component per factor");
    if (fixed_dim(w.components[w.i]) != fixed_dim(w.components[w.j]))
      witnessed.insert({std::min(w.i, w.j), std::max(w.i, w.j)});
  }
  rep.witnessed_pairs.assign(witnessed.begin(), witnessed.end());
  rep.all_pairs_witnessed = true;
  for (int i = 0; i < nfac; ++i)
    for (int j = i + 1; j < nfac; ++j)
      if (!witnessed.count({i, j})) rep.all_pairs_witnessed = false;
  return rep;
}

// A tuple of Lagrangians, each given by a d-row basis.
template <class F>
using LagrangianTuple = std::vector<std::vector<std::vector<typename F::Elem>>>;

// The explicit five-Lagrangian configuration from the no-common-subspace
// proof: coordinate spans, the diagonal, a weighted diagonal, and a dense
// symmetric graph over F_1.
LagrangianTuple<RationalField> finaux_tuple_q(int d);

// Structured search for a bad subspace, following the proof: decompose along
// F_1 + F_2, take graph maps of F_3 and F_4, and range over spans of
// eigenvector subsets of the composite. Returns a witness basis or nullopt
// (a certificate of nonexistence under the search's preconditions).
std::optional<std::vector<std::vector<Rat>>> bad_lagrangian_search_q(
    int d, const LagrangianTuple<RationalField>& tuple);

std::optional<std::vector<std::vector<FiniteField::Elem>>> bad_lagrangian_search_ff(
    const FiniteField& k, int d, const LagrangianTuple<FiniteField>& tuple);

// Exhaustive oracle over a small finite field (order <= 5, 2d <= 4).
std::optional<std::vector<std::vector<FiniteField::Elem>>> bad_lagrangian_bruteforce(
    const FiniteField& k, int d, const LagrangianTuple<FiniteField>& tuple);

// Uniform-ish random Lagrangian built by extending a random isotropic chain.
std::vector<std::vector<FiniteField::Elem>> random_lagrangian(const FiniteField& k, int d,
                                                              Rng& rng);

}  // namespace lv
