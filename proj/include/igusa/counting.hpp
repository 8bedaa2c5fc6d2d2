#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igusa/polycore.hpp"

namespace igusa {

/// Default cap on the number of points a single exhaustive enumeration may visit.
inline constexpr double kDefaultBudget = 1e8;

/// Torus points of the face system at a direction: `open` has f_{1..l-1}
/// vanishing and f_l nonzero, `closed` has all l face polynomials vanishing.
struct TorusCount {
  std::uint64_t open = 0;
  std::uint64_t closed = 0;
  friend bool operator==(const TorusCount&, const TorusCount&) = default;
};

TorusCount torus_count(const PolySystem& sys, std::span<const std::int64_t> a, const PrimeContext& ctx,
                       double budget = kDefaultBudget);

/// Rank over F_p of the Jacobian of `sys` at `z`.
std::size_t jacobian_rank(const PolySystem& sys, std::span<const std::int64_t> z, const PrimeContext& ctx);

/// The face system (f_{1,a}, ..., f_{l,a}).
PolySystem face_system(const PolySystem& sys, std::span<const std::int64_t> a);

enum class Scope { AtOrigin, Global };

struct DegeneracyWitness {
  IntVec direction;
  IntVec point;
  std::size_t rank = 0;
};

struct NondegCertificate {
  bool ok = true;
  Scope scope = Scope::Global;
  std::optional<DegeneracyWitness> witness;
  std::size_t directions_checked = 0;
};

/// Checks the face systems at one interior direction per cell of the dual
/// subdivision (strictly positive ones only in AtOrigin scope; the zero
/// direction is added in Global scope).
NondegCertificate check_nondegenerate(const PolySystem& sys, const PrimeContext& ctx, Scope scope,
                                      double budget = kDefaultBudget);

/// Re-evaluates a witness from scratch: every face polynomial vanishes at the
/// point mod p and the Jacobian rank is below min(l, n).
bool verify_witness(const PolySystem& sys, const DegeneracyWitness& w, const PrimeContext& ctx);

/// True when the Jacobian of `sys` has full row rank at every F_p-point of
/// the variety it defines. Callers pass f_1, ..., f_{l-1}.
bool check_good_reduction(const PolySystem& sys, const PrimeContext& ctx, double budget = kDefaultBudget);

std::string to_string(Scope s);

}  // namespace igusa
