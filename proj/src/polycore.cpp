#include "igusa/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "igusa/error.hpp"

namespace igusa {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t entry_sum(std::span<const std::int64_t> a) {
  return std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

bool is_strictly_positive(std::span<const std::int64_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v > 0; });
}

bool is_nonnegative(std::span<const std::int64_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v >= 0; });
}

IntPolynomial::IntPolynomial(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("polynomial dimension must be at least 1");
}

IntPolynomial::IntPolynomial(std::size_t n, const Terms& terms) : IntPolynomial(n) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

bool IntPolynomial::has_constant_term() const {
  return terms_.count(ExponentVector(n_, 0)) != 0;
}

void IntPolynomial::add_term(const ExponentVector& m, const mpz_class& c) {
  if (m.size() != n_) throw DomainError("exponent vector has wrong length");
  if (!is_nonnegative(m)) throw DomainError("exponent vector has a negative entry");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::vector<ExponentVector> IntPolynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

std::int64_t IntPolynomial::max_exponent(std::size_t var) const {
  std::int64_t e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.at(var));
  return e;
}

IntPolynomial IntPolynomial::derivative(std::size_t var) const {
  if (var >= n_) throw DomainError("derivative: variable index out of range");
  IntPolynomial d(n_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    ExponentVector e = m;
    e[var] -= 1;
    d.add_term(e, c * static_cast<long>(m[var]));
  }
  return d;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& vars) const {
  if (vars.size() != n_) throw DomainError("to_string: wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads naturally; ties broken by the map order.
  std::vector<std::pair<ExponentVector, mpz_class>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return entry_sum(x.first) > entry_sum(y.first);
  });
  for (const auto& [m, c] : ordered) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(m.begin(), m.end(), [](std::int64_t e) { return e == 0; });
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << vars[i];
      if (m[i] != 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars), poly_(vars.size()) {}

  IntPolynomial run() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    parse_term(negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      parse_term(c == '-');
    }
    return poly_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void parse_term(bool negate) {
    skip_ws();
    mpz_class coeff = 1;
    ExponentVector m(vars_.size(), 0);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(read_digits());
      skip_ws();
      if (peek() != '*') {
        // bare constant
        poly_.add_term(m, negate ? mpz_class(-coeff) : coeff);
        return;
      }
      ++pos_;
      skip_ws();
    }
    if (negate) coeff = -coeff;
    parse_factor(m);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(m);
    }
    poly_.add_term(m, coeff);
  }

  void parse_factor(ExponentVector& m) {
    skip_ws();
    std::size_t start = pos_;
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      if (at_end()) throw ParseError("unexpected end of input, expected a variable", pos_);
      throw ParseError(std::string("expected a variable, found '") + c + "'", pos_);
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::int64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') throw ParseError("negative exponent", pos_);
      std::size_t epos = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected a natural exponent", epos);
      if (digits.size() > 9) throw ParseError("exponent too large", epos);
      e = std::stoll(digits);
    }
    m[idx] += e;
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  IntPolynomial poly_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw DomainError("at least one variable is required");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] == vars[j]) throw DomainError("duplicate variable name '" + vars[i] + "'");
    }
  }
  return Parser(text, vars).run();
}

IntPolynomial face_function(const IntPolynomial& f, std::span<const std::int64_t> a) {
  if (f.is_zero()) throw DomainError("face_function: zero polynomial");
  if (a.size() != f.dim()) throw DomainError("face_function: direction has wrong length");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [m, c] : f.terms()) best = std::min(best, dot(a, m));
  IntPolynomial out(f.dim());
  for (const auto& [m, c] : f.terms()) {
    if (dot(a, m) == best) out.add_term(m, c);
  }
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& c, std::uint64_t modulus) {
  mpz_class r;
  mpz_class mod(std::to_string(modulus));
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
  return std::stoull(r.get_str());
}

std::uint64_t reduce(std::int64_t v, std::uint64_t modulus) {
  auto m = static_cast<__int128>(modulus);
  __int128 r = static_cast<__int128>(v) % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t evaluate_mod(const IntPolynomial& f, std::span<const std::int64_t> point,
                           std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("evaluate_mod: modulus must be positive");
  if (point.size() != f.dim()) throw DomainError("evaluate_mod: point has wrong length");
  std::uint64_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t t = reduce(c, modulus);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t = mulmod(t, powmod(reduce(point[i], modulus), static_cast<std::uint64_t>(m[i]), modulus), modulus);
    }
    acc = (acc + t) % modulus;
  }
  return acc;
}

ModEvaluator::ModEvaluator(const IntPolynomial& f, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0 || modulus >= (std::uint64_t{1} << 32)) {
    throw DomainError("ModEvaluator: modulus must lie in [1, 2^32)");
  }
  for (const auto& [m, c] : f.terms()) {
    Term t;
    t.coeff = reduce(c, modulus);
    if (t.coeff == 0) continue;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t.factors.emplace_back(i, static_cast<std::size_t>(m[i]));
    }
    terms_.push_back(std::move(t));
  }
}

std::uint64_t ModEvaluator::operator()(const std::vector<std::vector<std::uint64_t>>& powers) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = t.coeff;
    for (const auto& [var, e] : t.factors) v = (v * powers[var][e]) % modulus_;
    acc += v;
    if (acc >= modulus_) acc -= modulus_;
  }
  return acc;
}

PolySystem::PolySystem(std::size_t n, std::vector<IntPolynomial> polys) : n_(n), polys_(std::move(polys)) {
  if (polys_.empty()) throw DomainError("a polynomial system needs at least one polynomial");
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (polys_[i].dim() != n_) throw DomainError("polynomial " + std::to_string(i) + " has the wrong dimension");
    if (polys_[i].has_constant_term()) {
      throw DomainError("polynomial " + std::to_string(i) + " has a nonzero constant term");
    }
  }
}

PolySystem PolySystem::prefix() const {
  if (polys_.size() < 2) throw DomainError("prefix: system has fewer than two polynomials");
  return PolySystem(n_, std::vector<IntPolynomial>(polys_.begin(), polys_.end() - 1));
}

PolySystem parse_system(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<IntPolynomial> polys;
  polys.reserve(texts.size());
  for (const auto& t : texts) polys.push_back(parse_polynomial(t, vars));
  return PolySystem(vars.size(), std::move(polys));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw DomainError("integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

PrimeContext::PrimeContext(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) throw DomainError("p = 2 is not supported; use an odd prime");
  if (p >= (std::uint64_t{1} << 31)) throw DomainError("prime is too large");
}

ConvenienceReport is_convenient(const PolySystem& sys) {
  ConvenienceReport rep;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t k = 0; k < sys.dim(); ++k) {
      bool found = false;
      for (const auto& [m, c] : sys[i].terms()) {
        bool pure = m[k] > 0;
        for (std::size_t j = 0; j < m.size() && pure; ++j) {
          if (j != k && m[j] != 0) pure = false;
        }
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) rep.missing.emplace_back(i, k);
    }
  }
  rep.convenient = rep.missing.empty();
  return rep;
}

}  // namespace igusa
