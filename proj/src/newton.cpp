#include "igusa/newton.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "combinatorics.hpp"
#include "igusa/error.hpp"
#include "igusa/linalg.hpp"

namespace igusa {

namespace {

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

// Sign-normalises a candidate normal: nonnegative and primitive, or empty
// when the hyperplane cannot support a polyhedron with recession cone R_+^n.
IntVec orient(IntVec v) {
  bool has_pos = false, has_neg = false;
  for (auto x : v) {
    has_pos |= x > 0;
    has_neg |= x < 0;
  }
  if (has_pos && has_neg) return {};
  if (!has_pos && !has_neg) return {};
  if (has_neg) {
    for (auto& x : v) x = -x;
  }
  return linalg::make_primitive(std::move(v));
}

std::size_t face_dimension(const std::vector<ExponentVector>& points, const IntVec& a) {
  const std::size_t n = a.size();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& m : points) best = std::min(best, dot(a, m));
  std::vector<IntVec> dirs;
  const ExponentVector* base = nullptr;
  for (const auto& m : points) {
    if (dot(a, m) != best) continue;
    if (!base) {
      base = &m;
      continue;
    }
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = m[i] - (*base)[i];
    dirs.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) dirs.push_back(unit_vector(n, i));
  }
  return linalg::rank(dirs);
}

void check_direction(std::size_t n, std::span<const std::int64_t> a) {
  if (a.size() != n) throw DomainError("direction has the wrong length");
  if (!is_nonnegative(a)) throw DomainError("direction must be entrywise nonnegative");
}

}  // namespace

NewtonPolyhedron build_polyhedron(const IntPolynomial& f) {
  if (f.is_zero()) throw DomainError("Newton polyhedron of the zero polynomial is undefined");
  if (f.has_constant_term()) throw DomainError("Newton polyhedron requires f(0) = 0");
  const std::size_t n = f.dim();
  if (n > kMaxDimension) {
    throw DomainError("dimension " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxDimension));
  }
  NewtonPolyhedron gamma;
  gamma.n = n;
  gamma.generators = f.support();
  const auto& pts = gamma.generators;

  std::set<IntVec> candidates;
  if (n == 1) {
    candidates.insert(IntVec{1});
  } else {
    for (std::size_t k = 1; k <= n && k <= pts.size(); ++k) {
      detail::for_each_combination(pts.size(), k, [&](const std::vector<std::size_t>& pidx) {
        detail::for_each_combination(n, n - k, [&](const std::vector<std::size_t>& axes) {
          std::vector<IntVec> rows;
          rows.reserve(n - 1);
          for (std::size_t j = 1; j < pidx.size(); ++j) {
            IntVec d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = pts[pidx[j]][i] - pts[pidx[0]][i];
            rows.push_back(std::move(d));
          }
          for (auto ax : axes) rows.push_back(unit_vector(n, ax));
          IntVec normal = orient(linalg::kernel_vector(rows));
          if (!normal.empty()) candidates.insert(std::move(normal));
          return true;
        });
        return true;
      });
    }
  }

  for (const auto& a : candidates) {
    if (face_dimension(pts, a) != n - 1) continue;
    std::int64_t offset = std::numeric_limits<std::int64_t>::max();
    for (const auto& m : pts) offset = std::min(offset, dot(a, m));
    gamma.facets.push_back(Facet{a, offset});
  }

  for (const auto& m : pts) {
    std::vector<IntVec> tight;
    for (const auto& fc : gamma.facets) {
      if (dot(fc.normal, m) == fc.offset) tight.push_back(fc.normal);
    }
    if (linalg::rank(tight) == n) gamma.vertices.push_back(m);
  }
  return gamma;
}

std::int64_t support_value(const NewtonPolyhedron& gamma, std::span<const std::int64_t> a) {
  check_direction(gamma.n, a);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& m : gamma.generators) best = std::min(best, dot(a, m));
  return best;
}

FaceDescriptor first_meet_locus(const NewtonPolyhedron& gamma, std::span<const std::int64_t> a) {
  FaceDescriptor face;
  face.value = support_value(gamma, a);
  for (const auto& m : gamma.generators) {
    if (dot(a, m) == face.value) face.attaining.push_back(m);
  }
  return face;
}

std::vector<NewtonPolyhedron> build_polyhedra(const PolySystem& sys) {
  std::vector<NewtonPolyhedron> out;
  out.reserve(sys.size());
  for (const auto& f : sys.polys()) out.push_back(build_polyhedron(f));
  return out;
}

std::int64_t system_support_value(const std::vector<NewtonPolyhedron>& gammas, std::span<const std::int64_t> a) {
  std::int64_t s = 0;
  for (const auto& g : gammas) s += support_value(g, a);
  return s;
}

std::int64_t system_support_value(const PolySystem& sys, std::span<const std::int64_t> a) {
  std::int64_t s = 0;
  for (const auto& f : sys.polys()) {
    if (f.is_zero()) throw DomainError("system contains the zero polynomial");
    check_direction(sys.dim(), a);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& [m, c] : f.terms()) best = std::min(best, dot(a, m));
    s += best;
  }
  return s;
}

}  // namespace igusa
