#include "lv/affq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lv/errors.hpp"

namespace lv {
namespace {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = (__uint128_t)r * base % m;
    base = (__uint128_t)base * base % m;
    exp >>= 1;
  }
  return r;
}

bool prime_u64(uint64_t n) { return is_prime(Int(static_cast<unsigned long>(n))); }

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Multiplicative order of a mod m (a a unit).
uint64_t mult_order(uint64_t a, uint64_t m) {
  uint64_t x = a % m, ord = 1;
  while (x != 1 % m) {
    x = (__uint128_t)x * a % m;
    if (++ord > m) throw DomainError("order computation on a non-unit");
  }
  return ord;
}

}  // namespace

AffElem aff_mul(uint32_t q, const AffElem& x, const AffElem& y) {
  return {static_cast<uint32_t>(static_cast<uint64_t>(x.a) * y.a % q),
          static_cast<uint32_t>((static_cast<uint64_t>(x.a) * y.b + x.b) % q)};
}

AffElem aff_inv(uint32_t q, const AffElem& x) {
  const uint32_t ai = static_cast<uint32_t>(mod_pow(x.a, q - 2, q));
  return {ai, static_cast<uint32_t>((q - static_cast<uint64_t>(ai) * x.b % q) % q)};
}

bool aff_generates(uint32_t q, const std::vector<AffElem>& gens) {
  // Orbit of the identity under right multiplication; in a finite group the
  // semigroup closure is the generated subgroup.
  std::vector<bool> seen(static_cast<size_t>(q) * q, false);
  std::vector<AffElem> frontier{{1, 0}};
  seen[static_cast<size_t>(q) + 0] = true;  // index a*q + b for (1,0)
  size_t count = 1;
  while (!frontier.empty()) {
    AffElem x = frontier.back();
    frontier.pop_back();
    for (const AffElem& g : gens) {
      AffElem y = aff_mul(q, x, g);
      size_t idx = static_cast<size_t>(y.a) * q + y.b;
      if (!seen[idx]) {
        seen[idx] = true;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count == static_cast<size_t>(q) * (q - 1);
}

ComFiberCensus com_fiber_census(uint32_t q, int s) {
  if (q < 3 || !prime_u64(q)) throw DomainError("com_fiber_census needs a prime q >= 3");
  if (s < 1) throw DomainError("com_fiber_census needs s >= 1");
  const uint64_t group = static_cast<uint64_t>(q) * (q - 1);
  double budget = 1;
  for (int i = 0; i < 2 * s; ++i) budget *= static_cast<double>(group);
  if (budget > 1e8) throw SizeLimitError("com_fiber_census enumeration budget exceeded");

  std::vector<AffElem> elems;
  elems.reserve(group);
  for (uint32_t a = 1; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) elems.push_back({a, b});

  ComFiberCensus census;
  census.q = q;
  census.s = s;
  census.expected_fiber = pow_int(Int(static_cast<unsigned long>(q)), 2 * s - 1) * (q - 1);

  const int arity = 2 * s;
  std::vector<size_t> idx(arity, 0);
  std::vector<AffElem> tuple(arity);
  for (;;) {
    for (int i = 0; i < arity; ++i) tuple[i] = elems[idx[i]];
    // Product of commutators [g_1, g_2][g_3, g_4]...
    AffElem f{1, 0};
    for (int i = 0; i < s; ++i) {
      const AffElem &x = tuple[2 * i], &y = tuple[2 * i + 1];
      AffElem com = aff_mul(q, aff_mul(q, x, y), aff_mul(q, aff_inv(q, x), aff_inv(q, y)));
      f = aff_mul(q, f, com);
    }
    if (f.b != 0 && aff_generates(q, tuple)) {
      std::vector<uint32_t> key(arity);
      for (int i = 0; i < arity; ++i) key[i] = tuple[i].a;
      ++census.fibers[key];
    }
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == elems.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }

  census.fibers_uniform =
      std::all_of(census.fibers.begin(), census.fibers.end(), [&](const auto& kv) {
        return Int(static_cast<unsigned long>(kv.second)) == census.expected_fiber;
      });

  // Independent image description: tuples in (F_q^*)^{2s} whose entries
  // generate the full multiplicative group (lcm of orders = q-1).
  std::set<std::vector<uint32_t>> expected_image;
  std::vector<uint32_t> units(arity, 1);
  for (;;) {
    uint64_t l = 1;
    for (uint32_t a : units) l = std::lcm(l, mult_order(a, q));
    if (l == q - 1) expected_image.insert(units);
    int pos = arity - 1;
    while (pos >= 0 && ++units[pos] == q) units[pos--] = 1;
    if (pos < 0) break;
  }
  std::set<std::vector<uint32_t>> image;
  for (const auto& kv : census.fibers) image.insert(kv.first);
  census.image_is_generating_tuples = image == expected_image;
  return census;
}

Rat size_v(const std::vector<uint64_t>& orbit_sizes, uint64_t threshold) {
  if (orbit_sizes.empty()) throw DomainError("size_v of empty orbit profile");
  if (threshold < 1) throw DomainError("size_v threshold must be >= 1");
  Int small = 0, total = 0;
  for (uint64_t s : orbit_sizes) {
    const Int sz(static_cast<unsigned long>(s));
    total += sz;
    if (s < threshold) small += sz;
  }
  return make_rat(small, total);
}

KPBound kp_size_bound(int g, uint64_t q, int c) {
  if (g < 2 || q < 3) throw DomainError("kp_size_bound needs g >= 2, q >= 3");
  KPBound r;
  const Int qm1(static_cast<unsigned long>(q - 1));
  r.bound = make_rat(Int(c) * pow_int(Int(2), g + 1), pow_int(qm1, g));
  // 1 / ((g - 1/2)(q-1) + 1) = 2 / ((2g-1)(q-1) + 2)
  r.target = make_rat(Int(2), Int(2 * g - 1) * qm1 + 2);
  r.ok = r.bound < r.target;
  return r;
}

KPParams find_kp_prime(int g, int degK, int c,
                       const std::vector<uint64_t>& forbidden_primes) {
  if (g < 2) throw DomainError("find_kp_prime needs g >= 2");
  std::vector<uint64_t> small_odd_primes;
  for (uint64_t r = 3; r < static_cast<uint64_t>(c) * degK; ++r)
    if (r % 2 == 1 && prime_u64(r)) small_odd_primes.push_back(r);

  for (uint64_t q = 3; q <= 1000000; q += 2) {
    if (!prime_u64(q)) continue;
    const uint64_t m = q - 1;
    if (m % 4 == 0) continue;
    bool ok = true;
    for (uint64_t r : small_odd_primes)
      if (m % r == 0) {
        ok = false;
        break;
      }
    if (ok)
      for (uint64_t f : forbidden_primes)
        if (m % f == 0) {
          ok = false;
          break;
        }
    if (!ok) continue;
    if (!kp_size_bound(g, q, c).ok) continue;
    return {g, degK, c, q, forbidden_primes};
  }
  throw SizeLimitError("no Kodaira-Parshin prime found below 10^6");
}

uint64_t find_place_residue(uint64_t q, int c, int degK) {
  (void)c;
  (void)degK;
  if (q < 3 || !prime_u64(q)) throw DomainError("find_place_residue needs a prime q >= 3");
  const uint64_t m = q - 1;
  std::vector<uint64_t> odd_rs;
  for (uint64_t r : prime_factors(m))
    if (r % 2 == 1) odd_rs.push_back(r);
  if (odd_rs.empty()) return 1;

  // Least primitive root mod each odd prime r, then CRT.
  uint64_t x = 0, mod = 1;
  for (uint64_t r : odd_rs) {
    uint64_t root = 0;
    const auto rf = prime_factors(r - 1);
    for (uint64_t a = 2; a < r; ++a) {
      bool prim = true;
      for (uint64_t pf : rf)
        if (mod_pow(a, (r - 1) / pf, r) == 1) {
          prim = false;
          break;
        }
      if (prim) {
        root = a;
        break;
      }
    }
    // Merge x mod mod with root mod r.
    for (uint64_t t = x; ; t += mod)
      if (t % r == root) {
        x = t;
        break;
      }
    mod *= r;
  }
  // Lift to a unit mod q-1.
  for (uint64_t t = x; t < x + m; t += mod) {
    uint64_t cand = t % m;
    if (cand != 0 && std::gcd(cand, m) == 1) return cand;
  }
  throw DomainError("no unit lift of the CRT residue");
}

OrbitCensus frobenius_orbit_census(int g, uint64_t N,
                                   const std::vector<std::vector<uint64_t>>& T, int c) {
  const int dim = 2 * g;
  if (g < 1 || N < 2) throw DomainError("frobenius_orbit_census needs g >= 1, N >= 2");
  if (static_cast<int>(T.size()) != dim) throw DomainError("T must be 2g x 2g");
  for (const auto& row : T)
    if (static_cast<int>(row.size()) != dim) throw DomainError("T must be 2g x 2g");
  double budget = 1;
  for (int i = 0; i < dim; ++i) budget *= static_cast<double>(N);
  if (budget > 1e7) throw SizeLimitError("orbit census budget N^{2g} exceeded");
  const uint64_t total = static_cast<uint64_t>(budget + 0.5);

  // Invertibility: integer determinant coprime to N, by Bareiss elimination.
  {
    std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a[i][j] = Int(static_cast<unsigned long>(T[i][j] % N));
    Int prev = 1;
    int sign = 1;
    bool singular = false;
    for (int k = 0; k < dim - 1 && !singular; ++k) {
      if (a[k][k] == 0) {
        int swap_row = -1;
        for (int i = k + 1; i < dim; ++i)
          if (a[i][k] != 0) {
            swap_row = i;
            break;
          }
        if (swap_row < 0) {
          singular = true;
          break;
        }
        std::swap(a[k], a[swap_row]);
        sign = -sign;
      }
      for (int i = k + 1; i < dim; ++i)
        for (int j = k + 1; j < dim; ++j)
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    Int det = singular ? Int(0) : a[dim - 1][dim - 1] * sign;
    Int gcd_val;
    Int nn(static_cast<unsigned long>(N));
    mpz_gcd(gcd_val.get_mpz_t(), det.get_mpz_t(), nn.get_mpz_t());
    if (gcd_val != 1) throw DomainError("T is not invertible mod N");
  }

  auto mat_mul_modn = [&](const std::vector<std::vector<uint64_t>>& x,
                          const std::vector<std::vector<uint64_t>>& y) {
    std::vector<std::vector<uint64_t>> z(dim, std::vector<uint64_t>(dim, 0));
    for (int i = 0; i < dim; ++i)
      for (int l = 0; l < dim; ++l) {
        if (x[i][l] % N == 0) continue;
        for (int j = 0; j < dim; ++j)
          z[i][j] = (z[i][j] + (__uint128_t)x[i][l] * y[l][j]) % N;
      }
    return z;
  };

  // Similitude test: T^t J T = lambda J with lambda a unit of order >= c.
  bool similitude = true;
  uint64_t lambda = 0;
  {
    auto pair_val = [&](int i, int j) -> int64_t {
      if (j == i + g) return 1;
      if (i == j + g) return -1;
      return 0;
    };
    std::vector<std::vector<uint64_t>> S(dim, std::vector<uint64_t>(dim, 0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        __int128 acc = 0;
        for (int k = 0; k < dim; ++k)
          for (int l = 0; l < dim; ++l)
            acc += (__int128)(T[k][i] % N) * pair_val(k, l) % N * (int64_t)(T[l][j] % N);
        int64_t red = static_cast<int64_t>(acc % (__int128)N);
        S[i][j] = static_cast<uint64_t>((red % (int64_t)N + (int64_t)N) % (int64_t)N);
      }
    lambda = S[0][g];
    if (lambda == 0 || std::gcd(lambda, N) != 1) similitude = false;
    for (int i = 0; i < dim && similitude; ++i)
      for (int j = 0; j < dim && similitude; ++j) {
        int64_t want = pair_val(i, j);
        uint64_t w = static_cast<uint64_t>(
            ((__int128)want * (int64_t)lambda % (__int128)N + (__int128)N) % (__int128)N);
        if (S[i][j] != w) similitude = false;
      }
  }

  OrbitCensus census;
  census.total = total;
  census.kernel_bound = pow_int(Int(2), g) * pow_int(Int(static_cast<unsigned long>(N)), g);
  if (similitude) {
    uint64_t ord = mult_order(lambda, N);
    census.hypotheses_hold = ord >= static_cast<uint64_t>(c);
  }

  std::vector<std::vector<std::vector<uint64_t>>> powers;  // T^1 .. T^{c-1}
  {
    std::vector<std::vector<uint64_t>> cur(dim, std::vector<uint64_t>(dim, 0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) cur[i][j] = T[i][j] % N;
    for (int i = 1; i < c; ++i) {
      powers.push_back(cur);
      cur = mat_mul_modn(cur, T);
    }
  }

  census.kernel_sizes.assign(powers.size(), 0);
  std::vector<uint64_t> v(dim, 0);
  for (uint64_t count = 0; count < total; ++count) {
    bool small_orbit = false;
    for (size_t pi = 0; pi < powers.size(); ++pi) {
      bool fixed = true;
      for (int i = 0; i < dim && fixed; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < dim; ++j) acc = (acc + (__uint128_t)powers[pi][i][j] * v[j]) % N;
        if (acc != v[i]) fixed = false;
      }
      if (fixed) {
        ++census.kernel_sizes[pi];
        small_orbit = true;
      }
    }
    if (small_orbit) ++census.small_orbit_mass;
    int pos = dim - 1;
    while (pos >= 0 && ++v[pos] == N) v[pos--] = 0;
    if (pos < 0) break;
  }

  if (census.hypotheses_hold)
    for (uint64_t ks : census.kernel_sizes)
      if (Int(static_cast<unsigned long>(ks)) > census.kernel_bound)
        throw LemmaViolationError("Frobenius kernel exceeds 2^g N^g despite hypotheses");
  return census;
}

}  // namespace lv
