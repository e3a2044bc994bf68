#pragma once

#include <optional>
#include <vector>

#include "lv/errors.hpp"
#include "lv/numbers.hpp"

namespace lv {

// Field context for exact rationals, shaped like FiniteField so the matrix
// routines below are generic over either.
struct RationalField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& x) const { return x == 0; }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem inv(const Elem& x) const {
    if (x == 0) throw DomainError("inverse of zero");
    return 1 / x;
  }
  Elem div(const Elem& x, const Elem& y) const { return x * inv(y); }
};

template <class F>
struct Mat {
  using E = typename F::Elem;
  int rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(const F& k, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, k.zero()) {}

  E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class F>
Mat<F> identity(const F& k, int n) {
  Mat<F> m(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

template <class F>
Mat<F> mat_mul(const F& k, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw DomainError("matrix product shape mismatch");
  Mat<F> z(k, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      if (k.is_zero(x.at(i, l))) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = k.add(z.at(i, j), k.mul(x.at(i, l), y.at(l, j)));
    }
  return z;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& k, const Mat<F>& m,
                                      const std::vector<typename F::Elem>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw DomainError("matrix-vector shape mismatch");
  std::vector<typename F::Elem> out(m.rows, k.zero());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!k.is_zero(m.at(i, j))) out[i] = k.add(out[i], k.mul(m.at(i, j), v[j]));
  return out;
}

// Reduced row echelon form in place, exact first-nonzero pivoting. Returns rank.
template <class F>
int rref_in_place(const F& k, Mat<F>& m, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!k.is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const auto s = k.inv(m.at(rank, col));
    for (int j = col; j < m.cols; ++j) m.at(rank, j) = k.mul(m.at(rank, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || k.is_zero(m.at(i, col))) continue;
      const auto f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
int rank(const F& k, Mat<F> m) {
  return rref_in_place(k, m);
}

// Basis of the right null space; dim = cols - rank.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& k, Mat<F> m) {
  std::vector<int> pivots;
  rref_in_place(k, m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols, k.zero());
    v[free] = k.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = k.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> inverse(const F& k, const Mat<F>& m) {
  if (m.rows != m.cols) throw DomainError("inverse of non-square matrix");
  Mat<F> aug(k, m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = k.one();
  }
  std::vector<int> pivots;
  rref_in_place(k, aug, &pivots);
  // singular iff some pivot escapes into the identity block
  if (static_cast<int>(pivots.size()) != m.rows ||
      (m.rows > 0 && pivots.back() >= m.cols))
    return std::nullopt;
  Mat<F> inv(k, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

// Characteristic polynomial det(xI - A) by the Berkowitz algorithm
// (division-free, so it works verbatim in small characteristic).
// Returned little-endian: c[0] + c[1] x + ... + c[n] x^n, c[n] = 1.
template <class F>
std::vector<typename F::Elem> charpoly(const F& k, const Mat<F>& m) {
  using E = typename F::Elem;
  if (m.rows != m.cols) throw DomainError("charpoly of non-square matrix");
  const int n = m.rows;
  std::vector<E> poly{k.one()};  // charpoly of the empty matrix
  for (int step = 0; step < n; ++step) {
    // Leading principal submatrix of size step+1, partitioned as
    // [ a  R ]  with a scalar, R row, C column, B the step x step block.
    const int s = step;
    const E a = m.at(s, s);
    // Toeplitz column: t_0 = 1, t_1 = -a, t_{j+2} = -(R B^j C).
    std::vector<E> t(s + 2, k.zero());
    t[0] = k.one();
    t[1] = k.neg(a);
    if (s > 0) {
      std::vector<E> v(s);
      for (int i = 0; i < s; ++i) v[i] = m.at(i, s);  // C
      for (int j = 0; j + 2 <= s + 1; ++j) {
        E dot = k.zero();
        for (int i = 0; i < s; ++i) dot = k.add(dot, k.mul(m.at(s, i), v[i]));  // R B^j C
        t[j + 2] = k.neg(dot);
        if (j + 3 <= s + 1) {
          std::vector<E> nv(s, k.zero());
          for (int i = 0; i < s; ++i)
            for (int l = 0; l < s; ++l)
              if (!k.is_zero(m.at(i, l))) nv[i] = k.add(nv[i], k.mul(m.at(i, l), v[l]));
          v = std::move(nv);
        }
      }
    }
    // poly <- t (*) poly  (polynomial product, degrees add up to step+1).
    std::vector<E> next(step + 2, k.zero());
    for (size_t i = 0; i < t.size(); ++i) {
      if (k.is_zero(t[i])) continue;
      for (size_t j = 0; j < poly.size(); ++j) {
        if (i + j >= next.size()) continue;
        next[i + j] = k.add(next[i + j], k.mul(t[i], poly[j]));
      }
    }
    poly = std::move(next);
  }
  // Berkowitz computes coefficients highest-first; reverse to little-endian.
  std::vector<E> le(poly.rbegin(), poly.rend());
  return le;
}

// Roots (with multiplicity) of a monic polynomial that lie in the field,
// found by synthetic-division deflation against a candidate set.
template <class F>
std::vector<typename F::Elem> roots_in_field(
    const F& k, std::vector<typename F::Elem> poly,
    const std::vector<typename F::Elem>& candidates) {
  using E = typename F::Elem;
  std::vector<E> roots;
  for (const E& c : candidates) {
    for (;;) {
      // Evaluate by Horner.
      E val = k.zero();
      for (size_t i = poly.size(); i-- > 0;) val = k.add(k.mul(val, c), poly[i]);
      if (!k.is_zero(val) || poly.size() <= 1) break;
      // Deflate: poly / (x - c).
      std::vector<E> q(poly.size() - 1, k.zero());
      E carry = poly.back();
      for (size_t i = poly.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = k.add(poly[i], k.mul(c, carry));
      }
      poly = std::move(q);
      roots.push_back(c);
    }
  }
  return roots;
}

}  // namespace lv
