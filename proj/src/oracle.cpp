#include "igusa/oracle.hpp"

#include <cmath>
#include <numbers>

#include "enumerate.hpp"
#include "igusa/error.hpp"

namespace igusa {

namespace {

struct Compiled {
  std::vector<ModEvaluator> prefix;  // f_1 .. f_{l-1}
  ModEvaluator last;
  std::vector<std::size_t> max_exp;
};

Compiled compile(const PolySystem& sys, std::uint64_t modulus) {
  std::vector<ModEvaluator> pre;
  std::vector<const IntPolynomial*> ptrs;
  for (std::size_t i = 0; i + 1 < sys.size(); ++i) {
    pre.emplace_back(sys[i], modulus);
    ptrs.push_back(&sys[i]);
  }
  ptrs.push_back(&sys.last());
  return Compiled{std::move(pre), ModEvaluator(sys.last(), modulus), detail::max_exponents(sys.dim(), ptrs)};
}

bool prefix_vanishes(const Compiled& c, const std::vector<std::vector<std::uint64_t>>& powers) {
  for (const auto& f : c.prefix) {
    if (f(powers) != 0) return false;
  }
  return true;
}

std::uint64_t modulus_for(const PrimeContext& ctx, std::size_t m) {
  std::uint64_t M = checked_pow(ctx.p(), m);
  if (M >= (std::uint64_t{1} << 32)) throw DomainError("p^m is too large for residue enumeration");
  return M;
}

std::int64_t codim(const PolySystem& sys) {
  return static_cast<std::int64_t>(sys.dim()) - static_cast<std::int64_t>(sys.size()) + 1;
}

// ord_p of a residue mod p^K, capped at K.
std::size_t ord_residue(std::uint64_t v, std::uint64_t p, std::size_t K) {
  if (v == 0) return K;
  std::size_t k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

mpq_class count_q(std::uint64_t c) { return mpq_class(mpz_class(std::to_string(c))); }

}  // namespace

std::string to_string(Region r) { return r == Region::Full ? "full" : "origin"; }

std::uint64_t count_Nm(const PolySystem& sys, const PrimeContext& ctx, std::size_t m, double budget) {
  if (m == 0) return 1;
  const std::uint64_t M = modulus_for(ctx, m);
  detail::check_budget("congruence count", detail::box_size(0, M, sys.dim()), budget);
  auto c = compile(sys, M);
  std::uint64_t count = 0;
  detail::for_each_point(sys.dim(), 0, M, M, c.max_exp, [&](const auto&, const auto& powers) {
    if (prefix_vanishes(c, powers) && c.last(powers) == 0) ++count;
  });
  return count;
}

CongruenceTable congruence_table(const PolySystem& sys, const PrimeContext& ctx, std::size_t depth, double budget) {
  CongruenceTable t;
  t.p = ctx.p();
  if (sys.size() >= 2) t.raw = !check_good_reduction(sys.prefix(), ctx, budget);
  for (std::size_t m = 0; m <= depth; ++m) {
    std::uint64_t N = count_Nm(sys, ctx, m, budget);
    t.counts.push_back(N);
    t.normalized.push_back(count_q(N) * qpow(ctx.q(), -static_cast<std::int64_t>(m) * codim(sys)));
  }
  return t;
}

std::complex<double> exp_sum(const PolySystem& sys, const PrimeContext& ctx, std::size_t m, std::uint64_t u,
                             double budget) {
  const std::uint64_t M = modulus_for(ctx, m);
  detail::check_budget("exponential sum", detail::box_size(0, M, sys.dim()), budget);
  auto c = compile(sys, M);
  std::vector<std::uint64_t> hist(M, 0);
  detail::for_each_point(sys.dim(), 0, M, M, c.max_exp, [&](const auto&, const auto& powers) {
    if (prefix_vanishes(c, powers)) ++hist[c.last(powers)];
  });
  const std::uint64_t um = u % M;
  std::complex<double> acc = 0;
  for (std::uint64_t r = 0; r < M; ++r) {
    if (hist[r] == 0) continue;
    const std::uint64_t phase = static_cast<std::uint64_t>((static_cast<unsigned __int128>(um) * r) % M);
    acc += static_cast<double>(hist[r]) *
           std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(M));
  }
  return acc * std::pow(static_cast<double>(ctx.p()), -static_cast<double>(m) * static_cast<double>(codim(sys)));
}

double fit_decay_exponent(const std::vector<std::size_t>& levels, const std::vector<std::complex<double>>& values,
                          std::uint64_t p) {
  if (levels.size() != values.size() || levels.size() < 2) {
    throw DomainError("decay fit needs at least two (level, value) pairs");
  }
  const double lp = std::log(static_cast<double>(p));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double x = static_cast<double>(levels[i]);
    const double mag = std::abs(values[i]);
    if (mag == 0) throw DomainError("decay fit: exponential sum vanishes exactly at level " + std::to_string(levels[i]));
    const double y = std::log(mag) / lp;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

CellIntegral cell_integral(const PolySystem& sys, const PrimeContext& ctx, std::span<const std::int64_t> x0,
                           std::size_t m, std::span<const std::int64_t> a) {
  if (m == 0) throw DomainError("cell_integral needs m >= 1");
  if (x0.size() != sys.dim()) throw DomainError("x0 has the wrong length");
  const auto p = static_cast<std::int64_t>(ctx.p());
  for (auto x : x0) {
    if (x % p == 0) throw DomainError("x0 must have unit coordinates");
  }
  const std::uint64_t M = modulus_for(ctx, m);
  const std::uint64_t q = ctx.q();
  auto faces = face_system(sys, a);
  CellIntegral res;
  res.value = RatFun::zero(q);
  for (std::size_t i = 0; i + 1 < faces.size(); ++i) {
    if (evaluate_mod(faces[i], x0, M) != 0) return res;
  }
  const mpq_class base = qpow(q, -static_cast<std::int64_t>(m) * codim(sys));
  const std::uint64_t v = evaluate_mod(faces.last(), x0, M);
  if (v != 0) {
    res.kind = CellCase::Partial;
    res.k = ord_residue(v, ctx.p(), m);
    res.value = RatFun::monomial(q, base, res.k);
  } else {
    res.kind = CellCase::Inside;
    res.k = m;
    res.value = RatFun(q, QPoly::monomial(base * (1 - qpow(q, -1)), m), {{GeomFactor{-1, 1}, 1}});
  }
  return res;
}

// ---------------------------------------------------------------- characters

Character::Character(std::uint64_t p, std::uint64_t g, std::vector<std::uint64_t> logs, std::uint64_t index)
    : p_(p), g_(g), logs_(std::move(logs)), index_(index) {}

Character::Character(const PrimeContext& ctx, std::uint64_t index) : p_(ctx.p()), index_(index) {
  if (index >= p_ - 1) throw DomainError("character index must lie in [0, p-1)");
  if (p_ > 10'000'000) throw DomainError("character tables are limited to p <= 10^7");
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = p_ - 1;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      primes.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) primes.push_back(rest);
  for (g_ = 2;; ++g_) {
    bool primitive = true;
    for (auto r : primes) primitive &= powmod(g_, (p_ - 1) / r, p_) != 1;
    if (primitive) break;
  }
  logs_.assign(p_, 0);
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < p_; ++e) {
    logs_[x] = e;
    x = x * g_ % p_;
  }
}

Character Character::inverse() const { return Character(p_, g_, logs_, index_ == 0 ? 0 : p_ - 1 - index_); }

std::uint64_t Character::log(std::uint64_t v) const {
  v %= p_;
  if (v == 0) throw DomainError("discrete log of zero");
  return logs_[v];
}

std::complex<double> Character::operator()(std::uint64_t v) const {
  v %= p_;
  if (v == 0) return 0;
  const std::uint64_t e = (index_ * logs_[v]) % (p_ - 1);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(p_ - 1));
}

std::vector<std::uint64_t> ac_histogram(const PolySystem& sys, const PrimeContext& ctx, std::size_t k, double budget) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t M = modulus_for(ctx, k + 1);
  const std::uint64_t pk = M / p;
  detail::check_budget("coefficient extraction", detail::box_size(0, M, sys.dim()), budget);
  auto c = compile(sys, M);
  std::vector<std::uint64_t> hist(p, 0);
  detail::for_each_point(sys.dim(), 0, M, M, c.max_exp, [&](const auto&, const auto& powers) {
    if (!prefix_vanishes(c, powers)) return;
    const std::uint64_t v = c.last(powers);
    if (v % pk != 0) return;
    const std::uint64_t w = (v / pk) % p;
    if (w != 0) ++hist[w];
  });
  return hist;
}

std::complex<double> coeff_extract(const PolySystem& sys, const PrimeContext& ctx, std::size_t k, const Character& chi,
                                   double budget) {
  if (chi.p() != ctx.p()) throw DomainError("character belongs to a different prime");
  auto hist = ac_histogram(sys, ctx, k, budget);
  std::complex<double> acc = 0;
  for (std::uint64_t v = 1; v < hist.size(); ++v) acc += static_cast<double>(hist[v]) * chi(v);
  return acc * std::pow(static_cast<double>(ctx.p()),
                        -static_cast<double>(k + 1) * static_cast<double>(codim(sys)));
}

mpq_class coeff_extract_exact(const PolySystem& sys, const PrimeContext& ctx, std::size_t k, double budget) {
  auto hist = ac_histogram(sys, ctx, k, budget);
  std::uint64_t total = 0;
  for (auto h : hist) total += h;
  return count_q(total) * qpow(ctx.q(), -static_cast<std::int64_t>(k + 1) * codim(sys));
}

std::complex<double> gaussian_sum(const Character& chi) {
  if (chi.is_trivial()) throw DomainError("the Gaussian sum needs a nontrivial character");
  const std::uint64_t p = chi.p();
  std::complex<double> acc = 0;
  for (std::uint64_t v = 1; v < p; ++v) {
    acc += chi(v) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(p));
  }
  return acc / static_cast<double>(p - 1);
}

double stationary_phase_residual(const PolySystem& sys, const PrimeContext& ctx, std::size_t m, std::uint64_t u, double budget) {
  if (m == 0) return 0.0;
  if (sys.size() < 2) throw DomainError("stationary_phase_residual needs l >= 2");
  if (u % ctx.p() == 0) throw DomainError("u must be a unit");
  const std::uint64_t q = ctx.q();
  const std::complex<double> lhs = exp_sum(sys, ctx, m, u, budget);

  // Z(0): total measure of the variety f_1 = ... = f_{l-1} = 0.
  const mpq_class total = count_q(count_Nm(sys.prefix(), ctx, 1, budget)) * qpow(q, -codim(sys));

  // Coeff_{t^{m-1}} of (t - q) Z / ((q - 1)(1 - t)) from c_0 .. c_{m-1}.
  mpq_class qq = count_q(q);
  RatFun prefactor(q, QPoly({-qq / (qq - 1), 1 / (qq - 1)}), {{GeomFactor{0, 1}, 1}});
  auto pre = prefactor.taylor(m - 1);
  mpq_class coeff = 0;
  for (std::size_t j = 0; j < m; ++j) coeff += pre[m - 1 - j] * coeff_extract_exact(sys, ctx, j, budget);

  std::complex<double> rhs = mpq_class(total + coeff).get_d();
  auto hist = ac_histogram(sys, ctx, m - 1, budget);
  const double scale = std::pow(static_cast<double>(q), -static_cast<double>(m) * static_cast<double>(codim(sys)));
  for (std::uint64_t j = 1; j + 1 < q; ++j) {
    Character chi(ctx, j);
    std::complex<double> c = 0;
    for (std::uint64_t v = 1; v < hist.size(); ++v) c += static_cast<double>(hist[v]) * chi(v);
    rhs += gaussian_sum(chi.inverse()) * chi(u) * c * scale;
  }
  return std::abs(lhs - rhs);
}

TruncatedMeasures truncated_measures(const PolySystem& sys, const PrimeContext& ctx, std::size_t r, std::size_t M,
                             Region region, std::size_t k_max, double budget) {
  if (k_max + 1 > M) {
    throw DomainError("truncated_measures: k_max = " + std::to_string(k_max) + " is not resolved mod p^" +
                      std::to_string(M) + " (need k_max <= M-1)");
  }
  if (r > M) throw DomainError("truncated_measures: r must not exceed M");
  const std::uint64_t p = ctx.p();
  const std::uint64_t mod = modulus_for(ctx, M);
  const std::uint64_t count = region == Region::Full ? mod : mod / p;
  const std::uint64_t scale = region == Region::Full ? 1 : p;
  detail::check_budget("delta_r measure", detail::box_size(0, count, sys.dim()), budget);

  auto c = compile(sys, mod);
  const bool next = r + 1 <= M;
  std::vector<std::uint64_t> hr(k_max + 1, 0), hn(k_max + 1, 0);
  const std::uint64_t pr = checked_pow(p, r);
  const std::uint64_t pn = next ? checked_pow(p, r + 1) : 0;
  detail::for_each_point(
      sys.dim(), 0, count, mod, c.max_exp,
      [&](const auto&, const auto& powers) {
        bool ok_r = true, ok_n = next;
        for (const auto& f : c.prefix) {
          const std::uint64_t v = f(powers);
          if (v % pr != 0) return;
          if (ok_n && v % pn != 0) ok_n = false;
        }
        const std::size_t k = ord_residue(c.last(powers), p, M);
        if (k > k_max) return;
        if (ok_r) ++hr[k];
        if (ok_n) ++hn[k];
      },
      scale);

  const std::int64_t l1 = static_cast<std::int64_t>(sys.size()) - 1;
  const std::int64_t nM = static_cast<std::int64_t>(sys.dim() * M);
  TruncatedMeasures res;
  res.r = r;
  res.M = M;
  res.region = region;
  for (std::size_t k = 0; k <= k_max; ++k) {
    res.at_r.push_back(count_q(hr[k]) * qpow(p, static_cast<std::int64_t>(r) * l1 - nM));
    if (next) res.at_r_next.push_back(count_q(hn[k]) * qpow(p, static_cast<std::int64_t>(r + 1) * l1 - nM));
  }
  res.stable = next && res.at_r == res.at_r_next;
  return res;
}

}  // namespace igusa
