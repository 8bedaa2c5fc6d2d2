#pragma once

// Brute-force residue enumeration used as ground truth for the engine.

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "igusa/counting.hpp"
#include "igusa/polycore.hpp"
#include "igusa/ratfun.hpp"

namespace igusa {

/// N_m = #{x mod p^m : f_1(x) = ... = f_l(x) = 0 mod p^m}; N_0 = 1.
std::uint64_t count_Nm(const PolySystem& sys, const PrimeContext& ctx, std::size_t m, double budget = kDefaultBudget);

struct CongruenceTable {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> counts;  // index m = 0 .. depth
  /// Set when f_1..f_{l-1} lacks good reduction: the counts are then plain
  /// congruence counts rather than measures of the variety.
  bool raw = false;
  /// p^{-m(n-l+1)} N_m
  std::vector<mpq_class> normalized;
};

CongruenceTable congruence_table(const PolySystem& sys, const PrimeContext& ctx, std::size_t depth,
                                 double budget = kDefaultBudget);

/// p^{-m(n-l+1)} * sum over y mod p^m with f_{<l}(y) = 0 of exp(2 pi i u f_l(y) / p^m).
std::complex<double> exp_sum(const PolySystem& sys, const PrimeContext& ctx, std::size_t m, std::uint64_t u,
                             double budget = kDefaultBudget);

/// Least-squares slope of log_p |values[i]| against levels[i].
double fit_decay_exponent(const std::vector<std::size_t>& levels, const std::vector<std::complex<double>>& values,
                          std::uint64_t p);

enum class CellCase { Outside, Partial, Inside };

struct CellIntegral {
  CellCase kind = CellCase::Outside;
  std::size_t k = 0;  // ord of f_{l,a}(x0) in the Partial case
  RatFun value{3};
};

/// Local integral over x0 + (p^m Z_p)^n of the face system at direction a.
CellIntegral cell_integral(const PolySystem& sys, const PrimeContext& ctx, std::span<const std::int64_t> x0,
                           std::size_t m, std::span<const std::int64_t> a);

/// Multiplicative character of F_p^x of conductor <= 1: chi(g^e) =
/// exp(2 pi i index e / (p-1)) for the smallest primitive root g.
class Character {
 public:
  Character(const PrimeContext& ctx, std::uint64_t index);
  static Character trivial(const PrimeContext& ctx) { return Character(ctx, 0); }
  static Character quadratic(const PrimeContext& ctx) { return Character(ctx, (ctx.p() - 1) / 2); }

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t generator() const noexcept { return g_; }
  bool is_trivial() const noexcept { return index_ == 0; }
  Character inverse() const;

  /// chi(v) for v a unit mod p; zero for v = 0 mod p.
  std::complex<double> operator()(std::uint64_t v) const;
  /// Discrete logarithm base g, v a unit.
  std::uint64_t log(std::uint64_t v) const;

 private:
  Character(std::uint64_t p, std::uint64_t g, std::vector<std::uint64_t> logs, std::uint64_t index);
  std::uint64_t p_;
  std::uint64_t g_;
  std::vector<std::uint64_t> logs_;
  std::uint64_t index_;
};

/// counts[v] = #{y mod p^{k+1} : f_{<l}(y) = 0, ord f_l(y) = k, ac f_l(y) = v}.
std::vector<std::uint64_t> ac_histogram(const PolySystem& sys, const PrimeContext& ctx, std::size_t k,
                                        double budget = kDefaultBudget);

/// Coefficient of t^k in Z(s, chi).
std::complex<double> coeff_extract(const PolySystem& sys, const PrimeContext& ctx, std::size_t k, const Character& chi,
                                   double budget = kDefaultBudget);
/// Same for the trivial character, exactly.
mpq_class coeff_extract_exact(const PolySystem& sys, const PrimeContext& ctx, std::size_t k,
                              double budget = kDefaultBudget);

/// (p-1)^{-1} sum_v chi(v) exp(2 pi i v / p); chi must be nontrivial.
std::complex<double> gaussian_sum(const Character& chi);

/// |E(u p^{-m}) - stationary-phase expansion| with the expansion built from
/// extracted coefficients and Gaussian sums. Zero at m = 0 by convention.
double stationary_phase_residual(const PolySystem& sys, const PrimeContext& ctx, std::size_t m, std::uint64_t u,
                      double budget = kDefaultBudget);

enum class Region { Full, Origin };

struct TruncatedMeasures {
  std::size_t r = 0;
  std::size_t M = 0;
  Region region = Region::Full;
  std::vector<mpq_class> at_r;       // index k
  std::vector<mpq_class> at_r_next;  // same at r + 1 (empty when r + 1 > M)
  bool stable = false;
};

/// q^{r(l-1)} * measure of {x in region : ord f_i(x) >= r for i < l, ord f_l(x) = k},
/// for k = 0 .. k_max, by enumerating x mod p^M.
TruncatedMeasures truncated_measures(const PolySystem& sys, const PrimeContext& ctx, std::size_t r, std::size_t M,
                             Region region, std::size_t k_max, double budget = kDefaultBudget);

std::string to_string(Region r);

}  // namespace igusa
