#include "igusa/counting.hpp"

#include <algorithm>

#include "enumerate.hpp"
#include "igusa/error.hpp"
#include "igusa/fan.hpp"
#include "igusa/linalg.hpp"

namespace igusa {

namespace {

struct CompiledSystem {
  std::vector<ModEvaluator> values;
  std::vector<std::vector<ModEvaluator>> partials;  // [poly][var]
  std::vector<std::size_t> max_exp;
};

CompiledSystem compile(const PolySystem& sys, std::uint64_t p, bool with_partials) {
  CompiledSystem cs;
  std::vector<const IntPolynomial*> ptrs;
  for (const auto& f : sys.polys()) {
    cs.values.emplace_back(f, p);
    ptrs.push_back(&f);
  }
  cs.max_exp = detail::max_exponents(sys.dim(), ptrs);
  if (with_partials) {
    for (const auto& f : sys.polys()) {
      std::vector<ModEvaluator> row;
      for (std::size_t i = 0; i < sys.dim(); ++i) row.emplace_back(f.derivative(i), p);
      cs.partials.push_back(std::move(row));
    }
  }
  return cs;
}

std::size_t rank_at(const CompiledSystem& cs, const std::vector<std::vector<std::uint64_t>>& powers,
                    std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> jac;
  for (const auto& row : cs.partials) {
    std::vector<std::uint64_t> r;
    for (const auto& d : row) r.push_back(d(powers));
    jac.push_back(std::move(r));
  }
  return linalg::rank_mod_p(std::move(jac), p);
}

IntVec to_intvec(const std::vector<std::uint64_t>& v) {
  return IntVec(v.begin(), v.end());
}

}  // namespace

std::string to_string(Scope s) { return s == Scope::AtOrigin ? "at_origin" : "global"; }

PolySystem face_system(const PolySystem& sys, std::span<const std::int64_t> a) {
  std::vector<IntPolynomial> faces;
  for (const auto& f : sys.polys()) faces.push_back(face_function(f, a));
  return PolySystem(sys.dim(), std::move(faces));
}

TorusCount torus_count(const PolySystem& sys, std::span<const std::int64_t> a, const PrimeContext& ctx,
                       double budget) {
  const std::uint64_t p = ctx.p();
  const std::size_t n = sys.dim();
  detail::check_budget("torus count", detail::box_size(1, p, n), budget);
  auto faces = face_system(sys, a);
  auto cs = compile(faces, p, false);
  const std::size_t l = faces.size();
  TorusCount tc;
  detail::for_each_point(n, 1, p, p, cs.max_exp, [&](const auto&, const auto& powers) {
    for (std::size_t i = 0; i + 1 < l; ++i) {
      if (cs.values[i](powers) != 0) return;
    }
    if (cs.values[l - 1](powers) == 0) {
      ++tc.closed;
    } else {
      ++tc.open;
    }
  });
  return tc;
}

std::size_t jacobian_rank(const PolySystem& sys, std::span<const std::int64_t> z, const PrimeContext& ctx) {
  if (z.size() != sys.dim()) throw DomainError("point has the wrong length");
  std::vector<std::vector<std::uint64_t>> jac;
  for (const auto& f : sys.polys()) {
    std::vector<std::uint64_t> row;
    for (std::size_t i = 0; i < sys.dim(); ++i) row.push_back(evaluate_mod(f.derivative(i), z, ctx.p()));
    jac.push_back(std::move(row));
  }
  return linalg::rank_mod_p(std::move(jac), ctx.p());
}

NondegCertificate check_nondegenerate(const PolySystem& sys, const PrimeContext& ctx, Scope scope, double budget) {
  const std::uint64_t p = ctx.p();
  const std::size_t n = sys.dim();
  const std::size_t need = std::min(sys.size(), n);
  detail::check_budget("non-degeneracy check", detail::box_size(1, p, n), budget);

  std::vector<IntVec> directions;
  if (scope == Scope::Global) directions.push_back(IntVec(n, 0));
  Fan fan = dual_subdivision(sys);
  for (const auto& c : fan.cones) {
    IntVec b = barycenter(c);
    if (scope == Scope::AtOrigin && !is_strictly_positive(b)) continue;
    directions.push_back(std::move(b));
  }

  NondegCertificate cert;
  cert.scope = scope;
  for (const auto& a : directions) {
    ++cert.directions_checked;
    auto faces = face_system(sys, a);
    auto cs = compile(faces, p, true);
    std::optional<DegeneracyWitness> found;
    detail::for_each_point(n, 1, p, p, cs.max_exp, [&](const auto& point, const auto& powers) {
      if (found) return;
      for (const auto& v : cs.values) {
        if (v(powers) != 0) return;
      }
      std::size_t r = rank_at(cs, powers, p);
      if (r < need) found = DegeneracyWitness{a, to_intvec(point), r};
    });
    if (found) {
      cert.ok = false;
      cert.witness = std::move(found);
      return cert;
    }
  }
  return cert;
}

bool verify_witness(const PolySystem& sys, const DegeneracyWitness& w, const PrimeContext& ctx) {
  if (w.point.size() != sys.dim() || w.direction.size() != sys.dim()) return false;
  for (auto x : w.point) {
    if (x % static_cast<std::int64_t>(ctx.p()) == 0) return false;
  }
  auto faces = face_system(sys, w.direction);
  for (const auto& f : faces.polys()) {
    if (evaluate_mod(f, w.point, ctx.p()) != 0) return false;
  }
  return jacobian_rank(faces, w.point, ctx) < std::min(sys.size(), sys.dim());
}

bool check_good_reduction(const PolySystem& sys, const PrimeContext& ctx, double budget) {
  const std::uint64_t p = ctx.p();
  const std::size_t n = sys.dim();
  detail::check_budget("good-reduction check", detail::box_size(0, p, n), budget);
  auto cs = compile(sys, p, true);
  bool ok = true;
  detail::for_each_point(n, 0, p, p, cs.max_exp, [&](const auto&, const auto& powers) {
    if (!ok) return;
    for (const auto& v : cs.values) {
      if (v(powers) != 0) return;
    }
    if (rank_at(cs, powers, p) != sys.size()) ok = false;
  });
  return ok;
}

}  // namespace igusa
