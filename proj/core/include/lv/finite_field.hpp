#pragma once

#include <cstdint>
#include <vector>

#include "lv/errors.hpp"
#include "lv/rng.hpp"

namespace lv {

// F_{p^e} = F_p[t]/(m(t)) with m the lexicographically least monic irreducible
// of degree e (ordered by constant coefficient first). Elements are coefficient
// vectors of length e, little-endian in t, entries reduced mod p.
class FiniteField {
 public:
  using Elem = std::vector<uint32_t>;

  FiniteField(uint32_t p, uint32_t e);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint64_t order() const { return order_; }
  // Coefficients of m(t), length e+1, monic.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(e_, 0); }
  Elem one() const;
  Elem from_int(uint64_t k) const;  // prime-subfield element k mod p, embedded
  Elem gen() const;                 // the class of t (e >= 2); one() when e == 1

  // Enumeration: elements are indexed 0 .. p^e-1 by base-p digits.
  Elem from_index(uint64_t idx) const;
  uint64_t index(const Elem& x) const;

  bool is_zero(const Elem& x) const;
  bool eq(const Elem& x, const Elem& y) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;  // DomainError on zero
  Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }
  Elem pow(const Elem& x, uint64_t k) const;

  // x -> x^p, the generator of Gal(F_{p^e}/F_p).
  Elem frobenius(const Elem& x) const;

  Elem random(Rng& rng) const { return from_index(rng.below(order_)); }
  Elem random_nonzero(Rng& rng) const { return from_index(1 + rng.below(order_ - 1)); }

 private:
  uint32_t p_, e_;
  uint64_t order_;
  std::vector<uint32_t> modulus_;

  // Product reduced mod modulus; scratch-free schoolbook, fine at this scale.
  Elem reduce(std::vector<uint32_t> poly) const;
};

}  // namespace lv
