#include "lv/semilinear.hpp"

#include "lv/errors.hpp"

namespace lv {
namespace {

Mat<FiniteField> frobenius_entrywise(const FiniteField& k, const Mat<FiniteField>& m) {
  Mat<FiniteField> out(k, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = k.frobenius(m.at(i, j));
  return out;
}

}  // namespace

SemilinearModule::SemilinearModule(FiniteField f, Mat<FiniteField> m)
    : field(std::move(f)), dim(m.rows), M(std::move(m)) {
  if (M.rows != M.cols) throw DomainError("semilinear module matrix must be square");
  if (!inverse(field, M)) throw DomainError("semilinear module matrix must be invertible");
}

SemilinearModule random_semilinear_module(const FiniteField& field, int dim, Rng& rng) {
  for (;;) {
    Mat<FiniteField> m(field, dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m.at(i, j) = field.random(rng);
    if (inverse(field, m)) return SemilinearModule(field, std::move(m));
  }
}

Mat<FiniteField> phi_power_e(const SemilinearModule& m) {
  const FiniteField& k = m.field;
  Mat<FiniteField> acc = m.M;
  Mat<FiniteField> twisted = m.M;
  for (uint32_t i = 1; i < k.e(); ++i) {
    twisted = frobenius_entrywise(k, twisted);
    acc = mat_mul(k, acc, twisted);
  }
  return acc;
}

int centralizer_dim_F(const SemilinearModule& m) {
  const FiniteField& k = m.field;
  const int d = m.dim;
  const uint32_t e = k.e();
  const FiniteField prime(k.p(), 1);
  const int unknowns = static_cast<int>(e) * d * d;

  // Column per F_p-basis element of End_E(V): f = t^c E_{k1 k2}. Rows are the
  // F_p coordinates of all entries of f M - M sigma(f).
  Mat<FiniteField> sys(prime, unknowns, unknowns);
  int col = 0;
  for (int k1 = 0; k1 < d; ++k1)
    for (int k2 = 0; k2 < d; ++k2)
      for (uint32_t c = 0; c < e; ++c, ++col) {
        FiniteField::Elem fval = k.zero();
        fval[c] = 1;  // t^c
        // G = f M - M sigma(f) with f supported at (k1, k2).
        for (int j = 0; j < d; ++j) {
          // (f M)_{k1 j} = fval * M_{k2 j}
          FiniteField::Elem g = k.mul(fval, m.M.at(k2, j));
          int base = (k1 * d + j) * static_cast<int>(e);
          for (uint32_t l = 0; l < e; ++l) {
            auto cur = sys.at(base + static_cast<int>(l), col);
            cur[0] = (cur[0] + g[l]) % k.p();
            sys.at(base + static_cast<int>(l), col) = cur;
          }
        }
        const FiniteField::Elem sf = k.frobenius(fval);
        for (int i = 0; i < d; ++i) {
          // (M sigma(f))_{i k2} = M_{i k1} * sigma(fval)
          FiniteField::Elem g = k.mul(m.M.at(i, k1), sf);
          int base = (i * d + k2) * static_cast<int>(e);
          for (uint32_t l = 0; l < e; ++l) {
            auto cur = sys.at(base + static_cast<int>(l), col);
            cur[0] = (cur[0] + k.p() - g[l]) % k.p();
            sys.at(base + static_cast<int>(l), col) = cur;
          }
        }
      }
  return unknowns - rank(prime, sys);
}

int centralizer_dim_E(const FiniteField& field, const Mat<FiniteField>& A) {
  if (A.rows != A.cols) throw DomainError("commutant of non-square matrix");
  const int d = A.rows;
  // Columns index basis matrices E_{k1 k2}; rows the entries of f A - A f.
  Mat<FiniteField> sys(field, d * d, d * d);
  int col = 0;
  for (int k1 = 0; k1 < d; ++k1)
    for (int k2 = 0; k2 < d; ++k2, ++col) {
      for (int j = 0; j < d; ++j) {
        auto cur = sys.at(k1 * d + j, col);
        sys.at(k1 * d + j, col) = field.add(cur, A.at(k2, j));
      }
      for (int i = 0; i < d; ++i) {
        auto cur = sys.at(i * d + k2, col);
        sys.at(i * d + k2, col) = field.sub(cur, A.at(i, k1));
      }
    }
  return d * d - rank(field, sys);
}

CentralizerReport verify_centralizer_lemma(const SemilinearModule& m) {
  CentralizerReport r;
  r.dim_F = centralizer_dim_F(m);
  r.dim_E = centralizer_dim_E(m.field, phi_power_e(m));
  r.equal = r.dim_F == r.dim_E;
  r.within_bound = r.dim_F <= m.dim * m.dim;
  if (!r.equal)
    throw LemmaViolationError("centralizer dimensions over F and E disagree");
  return r;
}

}  // namespace lv
