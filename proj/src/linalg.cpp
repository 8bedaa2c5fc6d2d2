#include "igusa/linalg.hpp"

#include <numeric>
#include <utility>

#include "igusa/error.hpp"

namespace igusa::linalg {

namespace {

struct Overflow {};

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// (a*b - c*d) / prev, exact by the Bareiss invariant.
i128 bareiss_step(i128 a, i128 b, i128 c, i128 d, i128 prev) {
  return checked_sub(checked_mul(a, b), checked_mul(c, d)) / prev;
}

mpz_class bareiss_step(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
                       const mpz_class& prev) {
  mpz_class r = a * b - c * d;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), prev.get_mpz_t());
  return r;
}

bool is_zero(i128 v) { return v == 0; }
bool is_zero(const mpz_class& v) { return v == 0; }

// Fraction-free elimination. Returns the rank; for square input also the
// determinant (zero when singular).
template <class T>
std::size_t bareiss(std::vector<std::vector<T>> a, T* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  T prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = bareiss_step(a[r][col], a[i][j], a[i][col], a[r][j], prev);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  if (det) {
    if (rows == cols && r == rows) {
      *det = rows == 0 ? T(1) : a[rows - 1][cols - 1];
      if (sign < 0) *det = -*det;
    } else {
      *det = 0;
    }
  }
  return r;
}

template <class T>
std::vector<std::vector<T>> convert(const std::vector<IntVec>& m) {
  std::vector<std::vector<T>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<T> r;
    r.reserve(row.size());
    for (auto v : row) r.push_back(T(static_cast<long>(v)));
    out.push_back(std::move(r));
  }
  return out;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  if (u == 0) s = "0";
  while (u > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  mpz_class r(s);
  return neg ? mpz_class(-r) : r;
}

std::int64_t to_i64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw DomainError("integer does not fit into 64 bits");
  return v.get_si();
}

}  // namespace

mpz_class determinant(const std::vector<IntVec>& square) {
  for (const auto& row : square) {
    if (row.size() != square.size()) throw DomainError("determinant: matrix is not square");
  }
  try {
    i128 det = 0;
    bareiss<i128>(convert<i128>(square), &det);
    return to_mpz(det);
  } catch (const Overflow&) {
    mpz_class det;
    bareiss<mpz_class>(convert<mpz_class>(square), &det);
    return det;
  }
}

std::size_t rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  try {
    return bareiss<i128>(convert<i128>(rows), nullptr);
  } catch (const Overflow&) {
    return bareiss<mpz_class>(convert<mpz_class>(rows), nullptr);
  }
}

IntVec make_primitive(IntVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntVec kernel_vector(const std::vector<IntVec>& rows) {
  if (rows.empty()) throw DomainError("kernel_vector: no rows");
  const std::size_t n = rows[0].size();
  if (rows.size() + 1 != n) throw DomainError("kernel_vector: need exactly n-1 rows");
  std::vector<mpz_class> comps(n);
  bool nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVec> minor;
    minor.reserve(n - 1);
    for (const auto& row : rows) {
      IntVec r;
      r.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) r.push_back(row[j]);
      }
      minor.push_back(std::move(r));
    }
    comps[i] = determinant(minor);
    if (i % 2 == 1) comps[i] = -comps[i];
    if (comps[i] != 0) nonzero = true;
  }
  if (!nonzero) return {};
  mpz_class g = 0;
  for (const auto& c : comps) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = to_i64(mpz_class(comps[i] / g));
  return out;
}

mpz_class gcd_of_maximal_minors(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 1;
  const std::size_t k = rows.size();
  const std::size_t n = rows[0].size();
  if (k > n) return 0;
  mpz_class g = 0;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<IntVec> minor(k, IntVec(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor[r][c] = rows[r][idx[c]];
    }
    mpz_class d = determinant(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

std::optional<std::vector<mpq_class>> solve_coefficients(const std::vector<IntVec>& gens, const IntVec& target) {
  const std::size_t k = gens.size();
  const std::size_t n = target.size();
  // Augmented n x (k+1) system with the generators as columns.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = static_cast<long>(gens[j].at(i));
    a[i][k] = static_cast<long>(target[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    mpq_class inv = 1 / a[r][col];
    for (std::size_t j = col; j <= k; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (r != k) throw DomainError("solve_coefficients: generators are linearly dependent");
  for (std::size_t i = r; i < n; ++i) {
    if (a[i][k] != 0) return std::nullopt;
  }
  std::vector<mpq_class> mu(k);
  for (std::size_t i = 0; i < r; ++i) mu[pivot_col[i]] = a[i][k];
  return mu;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  const std::size_t n = rows.size();
  if (n == 0) return 0;
  const std::size_t m = rows[0].size();
  for (auto& row : rows) {
    for (auto& v : row) v %= p;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t inv = inv_mod(rows[r][col], p);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (rows[i][col] == 0) continue;
      std::uint64_t f = rows[i][col] * inv % p;
      for (std::size_t j = col; j < m; ++j) {
        rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace igusa::linalg
