#include "lv/hodge.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lv/errors.hpp"

namespace lv {

Int HodgeSpectrum::total() const {
  Int t = 0;
  for (const auto& [p, h] : entries) t += h;
  return t;
}

Int HodgeSpectrum::at(int p) const {
  auto it = entries.find(p);
  return it == entries.end() ? Int(0) : it->second;
}

HodgeSpectrum hypersurface_hodge_numbers(int n, int d) {
  if (n < 2 || d < 2) throw DomainError("hypersurface Hodge numbers need n >= 2, d >= 2");
  HodgeSpectrum h;
  h.kind = HodgeSpectrum::Kind::RawMiddle;
  for (int q = 0; q <= n - 1; ++q) {
    const int p = n - 1 - q;
    const long m = static_cast<long>(q + 1) * d - n - 1;
    Int val = 0;
    for (int k = 0; k <= n + 1; ++k) {
      const long upper = m - static_cast<long>(k) * (d - 1) + n;
      if (upper < n) break;  // later terms only shrink
      Int term = binomial(n + 1, k) * binomial(static_cast<unsigned long>(upper), n);
      if (k % 2)
        val -= term;
      else
        val += term;
    }
    if (val < 0)
      throw LemmaViolationError("negative Hodge number from inclusion-exclusion");
    if (val > 0) h.entries[p] = val;
  }
  return h;
}

HodgeSpectrum adjoint_spectrum(const HodgeSpectrum& raw, int n) {
  if (raw.kind != HodgeSpectrum::Kind::RawMiddle)
    throw DomainError("adjoint_spectrum expects a raw middle spectrum");
  // n-1 odd: alternating intersection form, adjoint is Sym^2 (sign +).
  // n-1 even: symmetric form, adjoint is wedge^2 (sign -).
  const bool alternating = (n - 1) % 2 == 1;
  HodgeSpectrum adj;
  adj.kind = HodgeSpectrum::Kind::Adjoint;
  for (int p = -(n - 1); p <= n - 1; ++p) {
    const int s = p + (n - 1);
    Int twice = 0;
    for (int p1 = std::max(0, s - (n - 1)); p1 <= std::min(n - 1, s); ++p1)
      twice += raw.at(p1) * raw.at(s - p1);
    if (s % 2 == 0) {
      const Int mid = raw.at(s / 2);
      twice += alternating ? mid : -mid;
    }
    if (twice % 2 != 0) throw LemmaViolationError("odd doubled adjoint Hodge number");
    Int val = twice / 2;
    if (p == 0) val += 1;  // central factor of the similitude group
    if (val < 0) throw LemmaViolationError("negative adjoint Hodge number");
    if (val > 0) adj.entries[p] = val;
  }
  return adj;
}

Rat T_function(const HodgeSpectrum& adj, const Rat& y) {
  if (adj.kind != HodgeSpectrum::Kind::Adjoint)
    throw DomainError("T_function expects an adjoint spectrum");
  if (y < 0) throw DomainError("T_function argument negative");
  Rat cum = 0, val = 0;
  for (auto it = adj.entries.rbegin(); it != adj.entries.rend(); ++it) {
    const auto& [p, h] = *it;
    if (y <= cum + Rat(h)) return val + Rat(p) * (y - cum);
    cum += Rat(h);
    val += Rat(p) * Rat(h);
  }
  if (y == cum) return val;
  throw DomainError("T_function argument exceeds spectrum length");
}

Int moduli_dim(int n, int d, bool alt) {
  if (n < 2 || d < 2) throw DomainError("moduli_dim needs n >= 2, d >= 2");
  return binomial(static_cast<unsigned long>(n) + d, alt ? d : d - 1) - 1;
}

ConditionReport check_conditions(int n, int d, bool alt_moduli) {
  ConditionReport r;
  r.n = n;
  r.d = d;
  const HodgeSpectrum raw = hypersurface_hodge_numbers(n, d);
  const HodgeSpectrum adj = adjoint_spectrum(raw, n);
  r.dimY = moduli_dim(n, d, alt_moduli);
  r.h0 = adj.at(0);
  for (const auto& [p, h] : adj.entries) {
    if (p > 0) {
      r.sum_pos += h;
      r.weighted_sum += Int(p) * h;
    }
  }
  r.weak = r.sum_pos >= r.h0 + r.dimY;
  const Rat total(adj.total());
  Rat arg1 = Rat(r.h0) + Rat(r.dimY);
  Rat arg2 = make_rat(3, 2) * Rat(r.h0) + Rat(r.dimY);
  if (arg1 > total || arg2 > total) {
    r.t_clamped = true;
    arg1 = std::min(arg1, total);
    arg2 = std::min(arg2, total);
  }
  r.T1 = T_function(adj, arg1);
  r.T2 = T_function(adj, arg2);
  r.strong = !r.t_clamped && Rat(r.weighted_sum) > r.T1 + r.T2;
  return r;
}

ScanResult scan_n0(int n_min, int n_max, int d_max, int persistence, int jobs,
                   bool alt_moduli) {
  if (n_min < 2 || n_max < n_min || d_max < 2) throw DomainError("bad scan range");
  const int count = n_max - n_min + 1;
  std::vector<ScanRow> rows(count);

  auto scan_one = [&](int idx) {
    const int n = n_min + idx;
    ScanRow row;
    row.n = n;
    for (int d = 2; d <= d_max; ++d) {
      const ConditionReport rep = check_conditions(n, d, alt_moduli);
      if (rep.weak && rep.strong) {
        row.has_hit = true;
        row.first_d = d;
        break;
      }
    }
    if (row.has_hit) {
      int probe = row.first_d;
      for (int i = 0; i < persistence; ++i) {
        probe = std::min(probe * 2, d_max);
        if (probe <= row.first_d) break;
        const ConditionReport rep = check_conditions(n, probe, alt_moduli);
        row.probe_d.push_back(probe);
        row.probe_strong.push_back(rep.weak && rep.strong);
        if (probe == d_max) break;
      }
    }
    rows[idx] = std::move(row);
  };

  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) scan_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, count);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) scan_one(i);
      });
    for (auto& t : pool) t.join();
  }

  ScanResult res;
  res.rows = std::move(rows);
  for (const auto& row : res.rows)
    if (row.has_hit) {
      res.found = true;
      res.minimal_n = row.n;
      break;
    }
  return res;
}

EulerianTable eulerian(int n) {
  if (n < 1 || n > 600) throw SizeLimitError("eulerian table limited to 1 <= n <= 600");
  EulerianTable t;
  t.n = n;
  t.A = {Int(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> row(m);
    for (int p = 0; p < m; ++p) {
      row[p] = Int(p + 1) * (p < m - 1 ? t.A[p] : Int(0)) +
               Int(m - p) * (p > 0 ? t.A[p - 1] : Int(0));
    }
    t.A = std::move(row);
  }
  const Int nf = factorial(n);
  t.alpha.reserve(n);
  for (const Int& a : t.A) t.alpha.push_back(make_rat(a, nf));
  const Int nf2 = nf * nf;
  for (int p = 0; p <= n - 1; ++p) {
    Int num = 0;
    for (int p1 = p; p1 <= n - 1; ++p1) num += t.A[p1] * t.A[p1 - p];
    const Rat b = make_rat(num, nf2);
    t.beta[p] = b;
    t.beta[-p] = b;
  }
  return t;
}

std::vector<int> beta0_bound_check(int n_min, int n_max) {
  if (n_min < 1 || n_max > 600 || n_max < n_min)
    throw SizeLimitError("beta0 bound range limited to [1, 600]");
  std::vector<int> violations;
  std::vector<Int> row = {Int(1)};
  Int fact = 1;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      std::vector<Int> next(n);
      for (int p = 0; p < n; ++p)
        next[p] = Int(p + 1) * (p < n - 1 ? row[p] : Int(0)) +
                  Int(n - p) * (p > 0 ? row[p - 1] : Int(0));
      row = std::move(next);
      fact *= n;
    }
    if (n < n_min) continue;
    Int sumsq = 0;
    for (const Int& a : row) sumsq += a * a;
    const Rat beta0 = make_rat(sumsq, fact * fact);
    if (beta0 * beta0 >= make_rat(Int(1600), Int(n))) violations.push_back(n);
  }
  return violations;
}

}  // namespace lv
