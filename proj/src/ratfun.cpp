#include "igusa/ratfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "igusa/error.hpp"

namespace igusa {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();  // callers may hand in e.g. 2/6
  trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t k) {
  std::vector<mpq_class> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + o * mpq_class(-1); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& s) const {
  if (s == 0) return {};
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  if (rem.size() <= dd) return {QPoly(), *this};
  std::vector<mpq_class> quo(rem.size() - dd);
  const mpq_class lead = d.c_.back();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    mpq_class f = rem[i] / lead;
    quo[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * mpq_class(1 / a.c_.back());
}

// ---------------------------------------------------------------- helpers

mpq_class qpow(std::uint64_t q, std::int64_t e) {
  mpz_class base(std::to_string(q));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(r);
  mpq_class out(1, 1);
  out /= r;
  return out;
}

QPoly factor_poly(std::uint64_t q, const GeomFactor& f) {
  if (f.b < 1) throw DomainError("geometric factor needs a positive power of t");
  std::vector<mpq_class> c(static_cast<std::size_t>(f.b) + 1);
  c[0] = 1;
  c[static_cast<std::size_t>(f.b)] = -qpow(q, f.a);
  return QPoly(std::move(c));
}

std::string to_string(const mpq_class& x) {
  mpq_class y = x;
  y.canonicalize();
  return y.get_str();
}

namespace {

using Denominator = std::map<GeomFactor, std::size_t>;

QPoly product(std::uint64_t q, const Denominator& d) {
  QPoly r = QPoly::constant(1);
  for (const auto& [f, m] : d) {
    QPoly fp = factor_poly(q, f);
    for (std::size_t i = 0; i < m; ++i) r = r * fp;
  }
  return r;
}

// Factors of `full` not already in `have` (multiset difference).
Denominator missing(const Denominator& full, const Denominator& have) {
  Denominator out;
  for (const auto& [f, m] : full) {
    auto it = have.find(f);
    std::size_t h = it == have.end() ? 0 : it->second;
    if (m > h) out[f] = m - h;
  }
  return out;
}

// p-adic valuation and unit part of a nonzero rational.
std::pair<mpq_class, std::int64_t> split_unit(const mpq_class& c, std::uint64_t p) {
  mpz_class num = c.get_num(), den = c.get_den();
  mpz_class pz(std::to_string(p));
  std::int64_t e = 0;
  while (num % pz == 0) {
    num /= pz;
    ++e;
  }
  while (den % pz == 0) {
    den /= pz;
    --e;
  }
  mpq_class u(num, den);
  u.canonicalize();
  return {u, e};
}

std::string s_exponent(std::int64_t e, std::int64_t k) {
  std::ostringstream os;
  if (e != 0) os << e;
  if (k != 0) {
    os << "-";
    if (k != 1) os << k;
    os << "s";
  }
  std::string s = os.str();
  return s.empty() ? "0" : s;
}

std::string t_power(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

std::string q_power(std::uint64_t q, std::int64_t a) {
  if (a == 0) return "";
  return std::to_string(q) + "^" + std::to_string(a);
}

// Joins signed terms into "a + b - c".
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, body] = terms[i];
    if (i == 0) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(std::uint64_t q) : q_(q) {}

RatFun::RatFun(std::uint64_t q, QPoly numerator, std::map<GeomFactor, std::size_t> denominator)
    : q_(q), num_(std::move(numerator)), den_(std::move(denominator)) {
  for (const auto& [f, m] : den_) {
    if (f.b < 1) throw DomainError("geometric factor needs a positive power of t");
  }
  canonicalize();
}

RatFun RatFun::constant(std::uint64_t q, const mpq_class& c) { return RatFun(q, QPoly::constant(c)); }

RatFun RatFun::monomial(std::uint64_t q, const mpq_class& c, std::size_t k) {
  return RatFun(q, QPoly::monomial(c, k));
}

RatFun RatFun::geometric_tail(std::uint64_t q, std::int64_t a, std::int64_t b) {
  return RatFun(q, QPoly::monomial(qpow(q, a), static_cast<std::size_t>(b)), {{GeomFactor{a, b}, 1}});
}

RatFun RatFun::inverse_factor(std::uint64_t q, std::int64_t a, std::int64_t b) {
  return RatFun(q, QPoly::constant(1), {{GeomFactor{a, b}, 1}});
}

void RatFun::check_same_q(const RatFun& o) const {
  if (q_ != o.q_) throw DomainError("rational functions over different primes");
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    QPoly fp = factor_poly(q_, it->first);
    while (it->second > 0) {
      auto [quo, rem] = num_.divmod(fp);
      if (!rem.is_zero()) break;
      num_ = std::move(quo);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  check_same_q(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Denominator common = den_;
  for (const auto& [f, m] : o.den_) common[f] = std::max(common[f], m);
  QPoly n = num_ * product(q_, missing(common, den_)) + o.num_ * product(q_, missing(common, o.den_));
  return RatFun(q_, std::move(n), std::move(common));
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + o * mpq_class(-1); }

RatFun RatFun::operator*(const RatFun& o) const {
  check_same_q(o);
  Denominator d = den_;
  for (const auto& [f, m] : o.den_) d[f] += m;
  return RatFun(q_, num_ * o.num_, std::move(d));
}

RatFun RatFun::operator*(const mpq_class& s) const { return RatFun(q_, num_ * s, den_); }

QPoly RatFun::expanded_denominator() const { return product(q_, den_); }

bool RatFun::equals(const RatFun& o) const {
  if (q_ != o.q_) return false;
  return num_ * o.expanded_denominator() == o.num_ * expanded_denominator();
}

std::vector<mpq_class> RatFun::taylor(std::size_t M) const {
  std::vector<mpq_class> series(M + 1);
  for (std::size_t k = 0; k <= M; ++k) series[k] = num_.coeff(k);
  for (const auto& [f, m] : den_) {
    const mpq_class c = qpow(q_, f.a);
    const auto b = static_cast<std::size_t>(f.b);
    for (std::size_t rep = 0; rep < m; ++rep) {
      // multiply by 1/(1 - c t^b): s_k += c * s_{k-b}, in increasing k
      for (std::size_t k = b; k <= M; ++k) series[k] += c * series[k - b];
    }
  }
  return series;
}

std::vector<PoleLine> RatFun::poles() const {
  std::map<mpq_class, Denominator> groups;
  for (const auto& [f, m] : den_) {
    mpq_class re(mpz_class(static_cast<long>(f.a)), mpz_class(static_cast<long>(f.b)));
    re.canonicalize();
    groups[re][f] = m;
  }
  std::vector<PoleLine> out;
  for (const auto& [re, d] : groups) {
    QPoly dg = product(q_, d);
    QPoly g = QPoly::gcd(num_, dg);
    QPoly rest = dg.divmod(g).first;
    if (rest.degree() <= 0) continue;

    std::size_t mult = 0;
    for (QPoly cur = rest; cur.degree() > 0; cur = QPoly::gcd(cur, cur.derivative())) ++mult;

    const std::int64_t alpha = re.get_num().get_si();
    const std::int64_t beta = re.get_den().get_si();
    std::int64_t lcm = 1;
    for (const auto& [f, m] : d) lcm = std::lcm(lcm, f.b);
    std::int64_t period = lcm;
    for (std::int64_t P = beta; P < lcm; P += beta) {
      if (lcm % P != 0) continue;
      QPoly target = QPoly::constant(1);
      QPoly fp = factor_poly(q_, GeomFactor{alpha * P / beta, P});
      for (std::size_t i = 0; i < mult; ++i) target = target * fp;
      if (target.divmod(rest).second.is_zero()) {
        period = P;
        break;
      }
    }
    out.push_back(PoleLine{re, period, mult});
  }
  return out;
}

std::string RatFun::to_t_string() const {
  std::vector<std::pair<bool, std::string>> terms;
  const auto& c = num_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    mpq_class a = abs(c[k]);
    std::string body;
    if (k == 0) {
      body = to_string(a);
    } else if (a == 1) {
      body = t_power(k);
    } else {
      body = to_string(a) + "*" + t_power(k);
    }
    terms.emplace_back(c[k] < 0, body);
  }
  std::string n = join_terms(terms);
  if (den_.empty()) return n;
  std::string d;
  for (const auto& [f, m] : den_) {
    std::string qa = q_power(q_, f.a);
    std::string fac = "(1 - " + (qa.empty() ? t_power(static_cast<std::size_t>(f.b))
                                            : qa + "*" + t_power(static_cast<std::size_t>(f.b))) + ")";
    if (m > 1) fac += "^" + std::to_string(m);
    d += d.empty() ? fac : "*" + fac;
  }
  if (terms.size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

std::string RatFun::to_s_string() const {
  const std::string p = std::to_string(q_);
  std::vector<std::pair<bool, std::string>> terms;
  const auto& c = num_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    auto [u, e] = split_unit(abs(c[k]), q_);
    std::string body;
    if (e == 0 && k == 0) {
      body = to_string(u);
    } else {
      std::string pw = p + "^{" + s_exponent(e, static_cast<std::int64_t>(k)) + "}";
      body = u == 1 ? pw : to_string(u) + "*" + pw;
    }
    terms.emplace_back(c[k] < 0, body);
  }
  std::string n = join_terms(terms);
  if (den_.empty()) return n;
  std::string d;
  for (const auto& [f, m] : den_) {
    std::string fac = "(1 - " + p + "^{" + s_exponent(f.a, f.b) + "})";
    if (m > 1) fac += "^" + std::to_string(m);
    d += d.empty() ? fac : "*" + fac;
  }
  if (terms.size() > 1) n = "(" + n + ")";
  return n + "/" + (den_.size() == 1 && den_.begin()->second == 1 ? d : "(" + d + ")");
}

}  // namespace igusa
