#include "lv/finite_field.hpp"

#include <algorithm>

namespace lv {
namespace {

bool small_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of a mod b in F_p[t]; b monic. Little-endian coefficients.
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                               uint32_t p) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) {
      uint64_t v = a[shift + i] + static_cast<uint64_t>(p) * p -
                   static_cast<uint64_t>(lead) * b[i] % p;
      a[shift + i] = static_cast<uint32_t>(v % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool is_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
  const size_t e = m.size() - 1;
  if (e == 1) return true;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (size_t d = 1; 2 * d <= e; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<uint32_t> b(d + 1, 0);
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) {
        b[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      b[d] = 1;
      if (poly_mod(m, b, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(uint32_t p, uint32_t e) : p_(p), e_(e) {
  if (!small_prime(p)) throw DomainError("finite field characteristic must be prime");
  if (e < 1 || e > 12) throw DomainError("finite field extension degree out of range");
  order_ = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (order_ > (1ull << 40)) throw SizeLimitError("finite field order too large");
    order_ *= p;
  }
  // Lexicographically least monic irreducible, constant coefficient varying last
  // (i.e. (c_{e-1},...,c_0) enumerated in colex order of the index below).
  uint64_t span = 1;
  for (uint32_t i = 0; i < e; ++i) span *= p;
  for (uint64_t code = 0; code < span; ++code) {
    std::vector<uint32_t> m(e + 1, 0);
    uint64_t c = code;
    for (uint32_t i = 0; i < e; ++i) {
      m[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    m[e] = 1;
    if (is_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }
  if (modulus_.empty()) throw DomainError("no irreducible modulus found");
}

FiniteField::Elem FiniteField::one() const {
  Elem x(e_, 0);
  x[0] = 1;
  return x;
}

FiniteField::Elem FiniteField::from_int(uint64_t k) const {
  Elem x(e_, 0);
  x[0] = static_cast<uint32_t>(k % p_);
  return x;
}

FiniteField::Elem FiniteField::gen() const {
  if (e_ == 1) return one();
  Elem x(e_, 0);
  x[1] = 1;
  return x;
}

FiniteField::Elem FiniteField::from_index(uint64_t idx) const {
  Elem x(e_, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    x[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
  return x;
}

uint64_t FiniteField::index(const Elem& x) const {
  uint64_t idx = 0;
  for (uint32_t i = e_; i-- > 0;) idx = idx * p_ + x[i];
  return idx;
}

bool FiniteField::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](uint32_t c) { return c == 0; });
}

bool FiniteField::eq(const Elem& x, const Elem& y) const { return x == y; }

FiniteField::Elem FiniteField::add(const Elem& x, const Elem& y) const {
  Elem z(e_);
  for (uint32_t i = 0; i < e_; ++i) z[i] = (x[i] + y[i]) % p_;
  return z;
}

FiniteField::Elem FiniteField::sub(const Elem& x, const Elem& y) const {
  Elem z(e_);
  for (uint32_t i = 0; i < e_; ++i) z[i] = (x[i] + p_ - y[i]) % p_;
  return z;
}

FiniteField::Elem FiniteField::neg(const Elem& x) const {
  Elem z(e_);
  for (uint32_t i = 0; i < e_; ++i) z[i] = (p_ - x[i]) % p_;
  return z;
}

FiniteField::Elem FiniteField::reduce(std::vector<uint32_t> poly) const {
  poly = poly_mod(std::move(poly), modulus_, p_);
  poly.resize(e_, 0);
  return poly;
}

FiniteField::Elem FiniteField::mul(const Elem& x, const Elem& y) const {
  std::vector<uint32_t> prod(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + static_cast<uint64_t>(x[i]) * y[j]) % p_);
  }
  return reduce(std::move(prod));
}

FiniteField::Elem FiniteField::pow(const Elem& x, uint64_t k) const {
  Elem acc = one(), base = x;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

FiniteField::Elem FiniteField::inv(const Elem& x) const {
  if (is_zero(x)) throw DomainError("inverse of zero in finite field");
  // x^(p^e - 2); the order is small enough that this is fine.
  return pow(x, order_ - 2);
}

FiniteField::Elem FiniteField::frobenius(const Elem& x) const { return pow(x, p_); }

}  // namespace lv
