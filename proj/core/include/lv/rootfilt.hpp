#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lv/finite_field.hpp"
#include "lv/matrix.hpp"
#include "lv/numbers.hpp"

namespace lv {

enum class RootType { A, B, C, D };

// Classical root datum realized in coordinates: type A_k inside R^{k+1}
// (roots e_i - e_j), types B_k/C_k/D_k inside R^k.
struct RootDatum {
  RootType type = RootType::A;
  int rank = 0;
  int ambient = 0;
  std::vector<std::vector<int>> simple;     // Delta
  std::vector<std::vector<int>> positive;   // Sigma^+
  std::vector<std::vector<int>> roots;      // Sigma

  static RootDatum build(RootType type, int rank);
};

// Weyl elements as orthogonal integer matrices acting on the ambient space,
// generated from simple reflections by closure. Guard: |W| <= 3840.
struct WeylGroup {
  std::vector<std::vector<std::vector<int>>> elements;  // element matrices
  int identity_index = 0;

  static WeylGroup build(const RootDatum& datum);
};

std::vector<int> weyl_apply(const std::vector<std::vector<int>>& w, const std::vector<int>& v);
int weyl_length(const RootDatum& datum, const std::vector<std::vector<int>>& w);

struct ParabolicPair {
  RootDatum datum;
  std::vector<int> delta_p;  // indices into datum.simple
  std::vector<int> delta_q;  // derived: simple roots orthogonal to mu
  std::vector<int> mu;       // dominant integral cocharacter
  std::set<std::vector<int>> sigma_p;  // Sigma^+ plus negatives supported on Delta_P
  std::set<std::vector<int>> sigma_q;  // roots pairing >= 0 with mu

  // Validates dominance of mu and derives Delta_Q and the root sets.
  static ParabolicPair build(const RootDatum& datum, const std::vector<int>& delta_p,
                             const std::vector<int>& mu);
};

int pair_mu(const std::vector<int>& mu, const std::vector<int>& root);

// All w with w^{-1} Delta_P > 0 and w Delta_Q > 0.
std::vector<int> wpq_enumerate(const WeylGroup& w, const ParabolicPair& pair);

// Brute-force (W_P, W_Q)-double-coset count, for cross-checking wpq_enumerate.
int double_coset_count(const WeylGroup& w, const ParabolicPair& pair);

struct RootLemmaReport {
  int length = 0;
  size_t set_q_size = 0;  // {beta in Sigma-Sigma_Q : w beta > 0}
  size_t set_p_size = 0;  // {alpha in Sigma-Sigma_P : w^{-1} alpha > 0}
  bool bijection_ok = false;
  bool sizes_match_length = false;
};

RootLemmaReport root_lemma_check(const WeylGroup& wg, int w_index, const ParabolicPair& pair);

enum class BadMode { Aggregate, ExactBlocks };

// Aggregate: sum over Sigma - Sigma_P of <w mu, gamma> vanishes. ExactBlocks
// (types A and C only): the w mu weight of every Levi block of P equals the
// global average weight.
bool is_bad(const WeylGroup& wg, int w_index, const ParabolicPair& pair, BadMode mode);

// dim(G/Q) - #{beta in Sigma-Sigma_P : w^{-1} beta > 0}.
int fiber_codim(const WeylGroup& wg, int w_index, const ParabolicPair& pair);

int dim_gq(const ParabolicPair& pair);  // #{gamma : <mu, gamma> > 0}

struct Lw2Counterexample {
  std::vector<int> delta_p;
  std::vector<int> mu;
  int w_index = 0;
  int codim = 0;
};

struct Lw2Summary {
  uint64_t configurations = 0;
  uint64_t hypothesis_holds = 0;
  uint64_t hypothesis_fails = 0;
  std::vector<Lw2Counterexample> counterexamples;
};

// Sweeps every Delta_P subset and every dominant mu with entries bounded by
// mu_bound; where the top-sum hypothesis holds, asserts every aggregate-bad w
// has fiber codimension > e. Rank <= 4.
Lw2Summary lw2_harness(const RootDatum& datum, int mu_bound, int e);

struct LinalgCensus {
  uint64_t total_flags = 0;
  uint64_t bad_flags = 0;
  // Key: graded dims and induced characteristic polynomials of the first
  // witnessing stable filtration -> (flags with that witness key, of which bad).
  std::map<std::string, uint64_t> bad_by_key;
};

// Counting oracle over F_q, 2d <= 4, q in {3, 5}: enumerates self-dual flags
// whose isotropic dims are flag_type, and marks a flag bad when some nontrivial
// phi-stable self-dual filtration has every graded piece of flag-weight equal
// to the global weight. phi must be a symplectic similitude.
LinalgCensus linalg_census(const FiniteField& k, int d, const std::vector<int>& flag_type,
                           const Mat<FiniteField>& phi);

}  // namespace lv
