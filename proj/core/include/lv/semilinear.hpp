#pragma once

#include "lv/finite_field.hpp"
#include "lv/matrix.hpp"
#include "lv/rng.hpp"

namespace lv {

// A phi-module over E = F_{p^e}: phi(v) = M sigma(v) with sigma the entrywise
// Frobenius, M invertible.
struct SemilinearModule {
  FiniteField field;
  int dim = 0;
  Mat<FiniteField> M;

  SemilinearModule(FiniteField f, Mat<FiniteField> m);
};

// Random module with invertible M, deterministic in the seed stream.
SemilinearModule random_semilinear_module(const FiniteField& field, int dim, Rng& rng);

// Matrix of the E-linear map phi^e: M sigma(M) sigma^2(M) ... sigma^{e-1}(M).
Mat<FiniteField> phi_power_e(const SemilinearModule& m);

// dim over F_p of the E-linear endomorphisms commuting with phi, i.e. the
// solutions of f M = M sigma(f), linearized over the prime field.
int centralizer_dim_F(const SemilinearModule& m);

// dim over E of the commutant of an E-linear matrix A.
int centralizer_dim_E(const FiniteField& field, const Mat<FiniteField>& A);

struct CentralizerReport {
  int dim_F = 0;
  int dim_E = 0;
  bool equal = false;
  bool within_bound = false;  // dim_F <= dim^2
};

// Checks dim_F Z(phi) = dim_E Z(phi^e) <= dim^2; inequality of the two
// dimensions raises LemmaViolationError.
CentralizerReport verify_centralizer_lemma(const SemilinearModule& m);

}  // namespace lv
