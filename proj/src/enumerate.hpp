#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "igusa/error.hpp"
#include "igusa/polycore.hpp"

namespace igusa::detail {

inline void check_budget(const std::string& what, double requested, double cap) {
  if (requested > cap) throw BudgetExceeded(what, requested, cap);
}

inline double box_size(std::uint64_t lo, std::uint64_t hi, std::size_t n) {
  return std::pow(static_cast<double>(hi - lo), static_cast<double>(n));
}

/// Largest exponent of each variable across the given polynomials.
inline std::vector<std::size_t> max_exponents(std::size_t n, const std::vector<const IntPolynomial*>& polys) {
  std::vector<std::size_t> out(n, 0);
  for (const auto* f : polys) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = std::max<std::size_t>(out[i], static_cast<std::size_t>(f->max_exponent(i)));
    }
  }
  return out;
}

/// Walks the points scale*i for i in [lo, hi)^n in lexicographic order (last
/// coordinate fastest), keeping powers[i][e] = x_i^e mod `modulus` current
/// for the evaluators. fn(point, powers) is called once per point.
template <class Fn>
void for_each_point(std::size_t n, std::uint64_t lo, std::uint64_t hi, std::uint64_t modulus,
                    const std::vector<std::size_t>& max_exp, Fn&& fn, std::uint64_t scale = 1) {
  if (lo >= hi) return;
  std::vector<std::uint64_t> index(n, lo), point(n, lo * scale);
  std::vector<std::vector<std::uint64_t>> powers(n);
  auto refresh = [&](std::size_t i) {
    point[i] = index[i] * scale;
    auto& row = powers[i];
    row.assign(max_exp[i] + 1, 0);
    row[0] = 1 % modulus;
    const std::uint64_t x = point[i] % modulus;
    for (std::size_t e = 1; e <= max_exp[i]; ++e) {
      row[e] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(row[e - 1]) * x) % modulus);
    }
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);
  for (;;) {
    fn(static_cast<const std::vector<std::uint64_t>&>(point),
       static_cast<const std::vector<std::vector<std::uint64_t>>&>(powers));
    if (n == 0) return;
    std::size_t i = n;
    for (;;) {
      --i;
      if (++index[i] < hi) {
        refresh(i);
        break;
      }
      index[i] = lo;
      refresh(i);
      if (i == 0) return;
    }
  }
}

}  // namespace igusa::detail
