#include "igusa/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "igusa/error.hpp"

namespace igusa {

namespace {

std::string format_vec(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void require_engine_shape(const PolySystem& sys) {
  if (sys.size() < 2 || sys.size() > sys.dim()) {
    throw DomainError("the zeta engine needs 2 <= l <= n (got l = " + std::to_string(sys.size()) +
                      ", n = " + std::to_string(sys.dim()) + ")");
  }
}

Hypotheses certify(const PolySystem& sys, const PrimeContext& ctx, Scope scope, const EngineOptions& opts) {
  Hypotheses h;
  h.enforced = opts.require_certificates;
  auto conv = is_convenient(sys);
  h.convenient = conv.convenient;
  if (!h.convenient && opts.require_certificates) {
    std::ostringstream os;
    os << "missing pure powers (polynomial, variable):";
    for (auto [i, k] : conv.missing) os << " (" << i + 1 << "," << k + 1 << ")";
    throw HypothesisError("system is not convenient", os.str());
  }
  auto full = check_nondegenerate(sys, ctx, scope, opts.budget);
  auto pre = check_nondegenerate(sys.prefix(), ctx, scope, opts.budget);
  h.nondegenerate = full.ok;
  h.nondegenerate_prefix = pre.ok;
  h.witness = full.ok ? pre.witness : full.witness;
  h.good_reduction = check_good_reduction(sys.prefix(), ctx, opts.budget);
  if (opts.require_certificates && (!full.ok || !pre.ok)) {
    const auto& w = *h.witness;
    std::ostringstream os;
    os << (full.ok ? "f_1..f_{l-1}" : "f_1..f_l") << " degenerate on the face at direction "
       << format_vec(w.direction) << ", torus point " << format_vec(w.point) << " mod " << ctx.p()
       << ", Jacobian rank " << w.rank;
    throw HypothesisError(std::string("non-degeneracy (") + to_string(scope) + ") fails at p = " +
                              std::to_string(ctx.p()),
                          os.str());
  }
  return h;
}

ZetaReport assemble(const PolySystem& sys, const PrimeContext& ctx, Scope scope, const EngineOptions& opts) {
  require_engine_shape(sys);
  const std::uint64_t q = ctx.q();
  const std::size_t n = sys.dim(), l = sys.size();

  ZetaReport rep;
  rep.scope = scope;
  rep.p = ctx.p();
  rep.hypotheses = certify(sys, ctx, scope, opts);

  auto gammas = build_polyhedra(sys);
  rep.fan = triangulate(dual_subdivision(sys), opts.ray_order);
  rep.zeta = RatFun::zero(q);
  rep.L0 = RatFun::zero(q);
  if (scope == Scope::Global) {
    rep.L0 = compute_L(torus_count(sys, IntVec(n, 0), ctx, opts.budget), n, l, q);
    rep.zeta = rep.L0;
  }
  for (const auto& c : rep.fan.cones) {
    IntVec b = barycenter(c);
    if (scope == Scope::AtOrigin && !is_strictly_positive(b)) continue;
    ConeContribution cc{c, b, torus_count(sys, b, ctx, opts.budget), RatFun(q), RatFun(q), RatFun(q)};
    cc.L = compute_L(cc.counts, n, l, q);
    cc.S = compute_S(c, gammas, q);
    cc.product = cc.L * cc.S;
    rep.zeta += cc.product;
    rep.contributions.push_back(std::move(cc));
  }

  rep.candidates = candidate_poles(sys, rep.fan);
  for (const auto& pl : rep.zeta.poles()) {
    ActualPole ap{pl, false};
    std::int64_t period = 0;
    for (const auto& cand : rep.candidates.lines) {
      if (cand.re == pl.re) period = period == 0 ? cand.period : std::lcm(period, cand.period);
    }
    ap.candidate = period != 0 && period % pl.period == 0;
    if (!rep.beta_f || pl.re > *rep.beta_f) rep.beta_f = pl.re;
    rep.poles.push_back(std::move(ap));
  }
  return rep;
}

}  // namespace

std::int64_t q_weight(const std::vector<NewtonPolyhedron>& gammas, std::span<const std::int64_t> v) {
  std::int64_t w = -entry_sum(v);
  for (std::size_t j = 0; j + 1 < gammas.size(); ++j) w += support_value(gammas[j], v);
  return w;
}

std::int64_t t_weight(const std::vector<NewtonPolyhedron>& gammas, std::span<const std::int64_t> v) {
  return support_value(gammas.back(), v);
}

RatFun compute_S(const Cone& c, const std::vector<NewtonPolyhedron>& gammas, std::uint64_t q) {
  if (!c.simplicial) throw DomainError("compute_S needs a simplicial cone");
  const IntVec total = barycenter(c);
  RatFun sum = RatFun::zero(q);
  for (const auto& h : parallelepiped_points(c)) {
    // Points of the half-open parallelepiped, reflected into (0,1]^k.
    IntVec hp(total.size());
    for (std::size_t i = 0; i < hp.size(); ++i) hp[i] = total[i] - h[i];
    sum += RatFun::monomial(q, qpow(q, q_weight(gammas, hp)), static_cast<std::size_t>(t_weight(gammas, hp)));
  }
  std::map<GeomFactor, std::size_t> den;
  mpq_class scale = 1;
  for (const auto& g : c.generators) {
    const std::int64_t a = q_weight(gammas, g), b = t_weight(gammas, g);
    if (b == 0) {
      if (a == 0) throw DomainError("cone generator " + format_vec(g) + " gives a divergent factor 1/(1 - 1)");
      scale /= 1 - qpow(q, a);
    } else {
      ++den[GeomFactor{a, b}];
    }
  }
  return RatFun(q, sum.numerator(), std::move(den)) * scale;
}

RatFun compute_L(const TorusCount& counts, std::size_t n, std::size_t l, std::uint64_t q) {
  const auto codim = static_cast<std::int64_t>(n - l + 1);
  const mpq_class base = qpow(q, -codim);
  RatFun open = RatFun::constant(q, base * mpq_class(static_cast<unsigned long>(counts.open)));
  if (counts.closed == 0) return open;
  // q^{-(n-l+1)} t (1 - q^{-1}) / (1 - q^{-1} t) * c_closed
  const mpq_class coef = base * (1 - qpow(q, -1)) * mpq_class(static_cast<unsigned long>(counts.closed));
  RatFun closed(q, QPoly::monomial(coef, 1), {{GeomFactor{-1, 1}, 1}});
  return open + closed;
}

RatFun compute_L(const PolySystem& sys, std::span<const std::int64_t> a, const PrimeContext& ctx, double budget) {
  require_engine_shape(sys);
  return compute_L(torus_count(sys, a, ctx, budget), sys.dim(), sys.size(), ctx.q());
}

CandidateSet candidate_poles(const PolySystem& sys, const Fan& fan) {
  require_engine_shape(sys);
  auto gammas = build_polyhedra(sys);
  CandidateSet cs;
  cs.multiplicity_bound = sys.dim() - sys.size() + 1;
  for (const auto& r : fan.skeleton) {
    if (!is_strictly_positive(r)) continue;
    const std::int64_t a = q_weight(gammas, r), b = t_weight(gammas, r);
    if (b == 0) continue;
    mpq_class re(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
    re.canonicalize();
    cs.lines.push_back(CandidatePole{r, re, b});
    if (a < 0 && (!cs.gamma_f || re > *cs.gamma_f)) cs.gamma_f = re;
  }
  cs.lines.push_back(CandidatePole{{}, mpq_class(-1), 1});
  return cs;
}

CandidateSet candidate_poles(const PolySystem& sys) {
  return candidate_poles(sys, dual_subdivision(sys));
}

ZetaReport zeta_full(const PolySystem& sys, const PrimeContext& ctx, const EngineOptions& opts) {
  return assemble(sys, ctx, Scope::Global, opts);
}

ZetaReport zeta_origin(const PolySystem& sys, const PrimeContext& ctx, const EngineOptions& opts) {
  return assemble(sys, ctx, Scope::AtOrigin, opts);
}

RatFun poincare_from_zeta(const RatFun& zeta) {
  const std::uint64_t q = zeta.q();
  RatFun one = RatFun::constant(q, 1);
  RatFun tz = RatFun::monomial(q, 1, 1) * zeta;
  return (one - tz) * RatFun::inverse_factor(q, 0, 1);
}

RatFun poincare_series(const PolySystem& sys, const PrimeContext& ctx, const EngineOptions& opts) {
  ZetaReport rep = zeta_full(sys, ctx, opts);
  if (!rep.hypotheses.good_reduction && opts.require_certificates) {
    throw HypothesisError("the Poincare series identity needs good reduction",
                          "f_1..f_{l-1} is singular somewhere over F_" + std::to_string(ctx.p()));
  }
  return poincare_from_zeta(rep.zeta);
}

}  // namespace igusa
