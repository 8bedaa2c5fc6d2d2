#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace igusa {

/// Integer vectors are used for monomial exponents and for weight directions.
using IntVec = std::vector<std::int64_t>;
using ExponentVector = IntVec;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::int64_t entry_sum(std::span<const std::int64_t> a);
bool is_strictly_positive(std::span<const std::int64_t> a);
bool is_nonnegative(std::span<const std::int64_t> a);

/// Multivariate polynomial with arbitrary-precision integer coefficients.
/// Terms are keyed by exponent vector; zero coefficients are never stored.
class IntPolynomial {
 public:
  using Terms = std::map<ExponentVector, mpz_class>;

  explicit IntPolynomial(std::size_t n = 1);
  IntPolynomial(std::size_t n, const Terms& terms);

  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_constant_term() const;

  /// Adds `c * x^m`, combining like terms and dropping cancellations.
  void add_term(const ExponentVector& m, const mpz_class& c);

  std::vector<ExponentVector> support() const;
  std::int64_t max_exponent(std::size_t var) const;
  IntPolynomial derivative(std::size_t var) const;

  /// Renders in the input grammar, e.g. "x^2*y - 3*z".
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Parses `text` against the ordered variable list. Throws ParseError with
/// the character offset on malformed input.
IntPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

/// Terms of `f` whose exponent minimises <a, m> over supp(f).
IntPolynomial face_function(const IntPolynomial& f, std::span<const std::int64_t> a);

/// f(point) reduced into [0, modulus).
std::uint64_t evaluate_mod(const IntPolynomial& f, std::span<const std::int64_t> point,
                           std::uint64_t modulus);

/// Coefficients reduced modulo a fixed modulus for tight enumeration loops.
/// Requires modulus < 2^32 so that products fit into 64 bits.
class ModEvaluator {
 public:
  ModEvaluator(const IntPolynomial& f, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// `powers[i][e]` must hold point[i]^e mod modulus for e up to max_exponent(i).
  std::uint64_t operator()(const std::vector<std::vector<std::uint64_t>>& powers) const;

 private:
  struct Term {
    std::uint64_t coeff;
    std::vector<std::pair<std::size_t, std::size_t>> factors;  // (variable, exponent)
  };
  std::uint64_t modulus_;
  std::vector<Term> terms_;
};

/// Ordered system f_1, ..., f_l sharing one ambient dimension.
class PolySystem {
 public:
  PolySystem(std::size_t n, std::vector<IntPolynomial> polys);

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return polys_.size(); }
  const std::vector<IntPolynomial>& polys() const noexcept { return polys_; }
  const IntPolynomial& operator[](std::size_t i) const { return polys_.at(i); }
  const IntPolynomial& last() const { return polys_.back(); }

  /// f_1, ..., f_{l-1}. Requires l >= 2.
  PolySystem prefix() const;

 private:
  std::size_t n_;
  std::vector<IntPolynomial> polys_;
};

PolySystem parse_system(const std::vector<std::string>& texts, const std::vector<std::string>& vars);

/// Residue characteristic of the computation; only odd primes are supported.
class PrimeContext {
 public:
  explicit PrimeContext(std::uint64_t p);
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return p_; }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

struct ConvenienceReport {
  bool convenient = true;
  /// (polynomial index, axis index), both 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> missing;
};

ConvenienceReport is_convenient(const PolySystem& sys);

}  // namespace igusa
