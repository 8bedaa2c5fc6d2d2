#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace igusa {

/// Dense univariate polynomial over Q in the variable t.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t k);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const mpq_class& s) const;
  QPoly derivative() const;

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

  /// Monic greatest common divisor (zero only when both inputs are zero).
  static QPoly gcd(QPoly a, QPoly b);

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// The factor (1 - q^a t^b), b >= 1; it vanishes on the line Re(s) = a/b
/// when t = q^{-s}.
struct GeomFactor {
  std::int64_t a = 0;
  std::int64_t b = 1;
  friend auto operator<=>(const GeomFactor&, const GeomFactor&) = default;
};

struct PoleLine {
  mpq_class re;
  /// Smallest P such that every surviving pole on the line is of the form
  /// re + 2*pi*i*k / (P log q).
  std::int64_t period = 1;
  std::size_t multiplicity = 1;
};

/// Exact element of Q(t) for a fixed prime q, with the denominator kept as
/// a multiset of geometric factors.
class RatFun {
 public:
  explicit RatFun(std::uint64_t q);
  RatFun(std::uint64_t q, QPoly numerator, std::map<GeomFactor, std::size_t> denominator = {});

  static RatFun zero(std::uint64_t q) { return RatFun(q); }
  static RatFun constant(std::uint64_t q, const mpq_class& c);
  static RatFun monomial(std::uint64_t q, const mpq_class& c, std::size_t k);
  /// q^a t^b / (1 - q^a t^b)
  static RatFun geometric_tail(std::uint64_t q, std::int64_t a, std::int64_t b);
  /// 1 / (1 - q^a t^b)
  static RatFun inverse_factor(std::uint64_t q, std::int64_t a, std::int64_t b);

  std::uint64_t q() const noexcept { return q_; }
  const QPoly& numerator() const noexcept { return num_; }
  const std::map<GeomFactor, std::size_t>& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator*(const mpq_class& s) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }

  /// Cross-multiplication equality; representation independent.
  bool equals(const RatFun& o) const;

  /// Coefficients of t^0 ... t^M of the expansion at t = 0.
  std::vector<mpq_class> taylor(std::size_t M) const;

  std::vector<PoleLine> poles() const;

  /// Denominator multiplied out.
  QPoly expanded_denominator() const;

  /// "(4/5)/(1 - 5^-1*t)" style rendering in t = q^{-s}.
  std::string to_t_string() const;
  /// "4*5^{-1}/(1 - 5^{-1-s})" style rendering in s.
  std::string to_s_string() const;

 private:
  void canonicalize();
  void check_same_q(const RatFun& o) const;

  std::uint64_t q_;
  QPoly num_;
  std::map<GeomFactor, std::size_t> den_;
};

/// q^e as an exact rational, e of any sign.
mpq_class qpow(std::uint64_t q, std::int64_t e);

/// 1 - q^a t^b as a polynomial.
QPoly factor_poly(std::uint64_t q, const GeomFactor& f);

std::string to_string(const mpq_class& x);

}  // namespace igusa
