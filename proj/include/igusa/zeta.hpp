#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "igusa/counting.hpp"
#include "igusa/fan.hpp"
#include "igusa/newton.hpp"
#include "igusa/ratfun.hpp"

namespace igusa {

struct EngineOptions {
  /// When false, failed hypotheses are recorded in the report instead of
  /// raising HypothesisError.
  bool require_certificates = true;
  double budget = kDefaultBudget;
  /// Pulling order for the triangulation; identity when unset.
  std::optional<std::vector<std::size_t>> ray_order;
};

struct ConeContribution {
  Cone cone;
  IntVec barycenter;
  TorusCount counts;
  RatFun L;
  RatFun S;
  RatFun product;
};

struct CandidatePole {
  IntVec ray;  // empty for the line Re(s) = -1
  mpq_class re;
  std::int64_t period = 1;
};

struct CandidateSet {
  std::vector<CandidatePole> lines;
  std::optional<mpq_class> gamma_f;
  std::size_t multiplicity_bound = 0;
};

struct Hypotheses {
  bool convenient = false;
  bool nondegenerate = false;         // the full system f_1..f_l
  bool nondegenerate_prefix = false;  // f_1..f_{l-1}
  bool good_reduction = false;        // f_1..f_{l-1} smooth over F_p
  bool enforced = true;               // false when certificates were overridden
  std::optional<DegeneracyWitness> witness;
};

struct ActualPole {
  PoleLine line;
  bool candidate = false;
};

struct ZetaReport {
  Scope scope = Scope::Global;
  std::uint64_t p = 0;
  RatFun zeta{3};
  RatFun L0{3};  // zero in origin scope
  std::vector<ConeContribution> contributions;
  Fan fan;
  CandidateSet candidates;
  std::vector<ActualPole> poles;
  std::optional<mpq_class> beta_f;
  Hypotheses hypotheses;
};

/// -sigma(v) + sum_{j<l} d(v, Gamma_j): the power of q attached to a direction.
std::int64_t q_weight(const std::vector<NewtonPolyhedron>& gammas, std::span<const std::int64_t> v);
/// d(v, Gamma_l): the power of t attached to a direction.
std::int64_t t_weight(const std::vector<NewtonPolyhedron>& gammas, std::span<const std::int64_t> v);

/// Lattice-point factor of a simplicial cone lying inside one cell of the
/// dual subdivision.
RatFun compute_S(const Cone& c, const std::vector<NewtonPolyhedron>& gammas, std::uint64_t q);

/// Count factor from the torus counts at the cone's barycenter.
RatFun compute_L(const TorusCount& counts, std::size_t n, std::size_t l, std::uint64_t q);
RatFun compute_L(const PolySystem& sys, std::span<const std::int64_t> a, const PrimeContext& ctx,
                 double budget = kDefaultBudget);

CandidateSet candidate_poles(const PolySystem& sys, const Fan& fan);
CandidateSet candidate_poles(const PolySystem& sys);

/// Z(s) over Z_p^n.
ZetaReport zeta_full(const PolySystem& sys, const PrimeContext& ctx, const EngineOptions& opts = {});
/// Z(s) over (pZ_p)^n: cones with strictly positive barycenter, no L0.
ZetaReport zeta_origin(const PolySystem& sys, const PrimeContext& ctx, const EngineOptions& opts = {});

/// (1 - t Z) / (1 - t), the generating series of normalised congruence counts.
RatFun poincare_series(const PolySystem& sys, const PrimeContext& ctx, const EngineOptions& opts = {});
RatFun poincare_from_zeta(const RatFun& zeta);

}  // namespace igusa
