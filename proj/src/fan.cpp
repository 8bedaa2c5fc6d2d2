#include "igusa/fan.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
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

using RaySet = std::vector<std::size_t>;  // sorted skeleton indices

bool contains_all(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Linear dimension of the cell whose relative interior contains a.
std::size_t cell_dimension(const PolySystem& sys, const DirectionSignature& sig) {
  const std::size_t n = sys.dim();
  std::vector<IntVec> dirs;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    auto pts = sys[j].support();
    const auto& am = sig.argmin[j];
    for (std::size_t k = 1; k < am.size(); ++k) {
      IntVec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = pts[am[k]][i] - pts[am[0]][i];
      dirs.push_back(std::move(d));
    }
  }
  for (auto i : sig.zeros) dirs.push_back(unit_vector(n, i));
  return n - linalg::rank(dirs);
}

// Closed-cell membership: r lies in the closure of the cell of a iff every
// face of r contains the corresponding face of a.
bool dominates(const DirectionSignature& r, const DirectionSignature& a) {
  for (std::size_t j = 0; j < a.argmin.size(); ++j) {
    if (!contains_all(r.argmin[j], a.argmin[j])) return false;
  }
  return contains_all(r.zeros, a.zeros);
}

// Edge directions of a Newton polyhedron (bounded edges only; unbounded ones
// are parallel to coordinate axes and are added separately).
std::vector<IntVec> bounded_edges(const NewtonPolyhedron& g) {
  std::vector<IntVec> out;
  const std::size_t n = g.n;
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      std::vector<IntVec> tight;
      for (const auto& fc : g.facets) {
        if (dot(fc.normal, g.vertices[u]) == fc.offset && dot(fc.normal, g.vertices[v]) == fc.offset) {
          tight.push_back(fc.normal);
        }
      }
      if (linalg::rank(tight) + 1 != n) continue;
      IntVec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = g.vertices[v][i] - g.vertices[u][i];
      out.push_back(std::move(d));
    }
  }
  return out;
}

IntVec orient_nonnegative(IntVec v) {
  bool pos = false, neg = false;
  for (auto x : v) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos == neg) return {};  // zero or mixed signs
  if (neg) {
    for (auto& x : v) x = -x;
  }
  return linalg::make_primitive(std::move(v));
}

Cone cone_from_rays(const std::vector<IntVec>& skeleton, RaySet rays) {
  std::vector<IntVec> gens;
  for (auto r : rays) gens.push_back(skeleton[r]);
  Cone c = make_cone(std::move(gens));
  c.rays = std::move(rays);
  return c;
}

void sort_cones(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end(), [](const Cone& x, const Cone& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.rays < y.rays;
  });
}

std::int64_t to_i64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw DomainError("cone determinant does not fit into 64 bits");
  return v.get_si();
}

}  // namespace

Cone make_cone(std::vector<IntVec> generators) {
  if (generators.empty()) throw DomainError("a cone needs at least one generator");
  const std::size_t n = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != n) throw DomainError("cone generators have mixed lengths");
    if (!is_nonnegative(g)) throw DomainError("cone generators must be nonnegative");
    if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; })) {
      throw DomainError("cone generator is zero");
    }
  }
  Cone c;
  c.dim = linalg::rank(generators);
  c.simplicial = c.dim == generators.size();
  c.generators = std::move(generators);
  c.simple = c.simplicial && linalg::gcd_of_maximal_minors(c.generators) == 1;
  return c;
}

DirectionSignature direction_signature(const PolySystem& sys, std::span<const std::int64_t> a) {
  if (a.size() != sys.dim()) throw DomainError("direction has the wrong length");
  if (!is_nonnegative(a)) throw DomainError("direction must be entrywise nonnegative");
  DirectionSignature sig;
  for (const auto& f : sys.polys()) {
    if (f.is_zero()) throw DomainError("system contains the zero polynomial");
    std::vector<std::size_t> am;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::size_t idx = 0;
    for (const auto& [m, c] : f.terms()) {
      std::int64_t v = dot(a, m);
      if (v < best) {
        best = v;
        am.clear();
      }
      if (v == best) am.push_back(idx);
      ++idx;
    }
    sig.argmin.push_back(std::move(am));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) sig.zeros.push_back(i);
  }
  return sig;
}

Fan dual_subdivision(const PolySystem& sys) {
  const std::size_t n = sys.dim();
  if (n > kMaxDimension) {
    throw DomainError("dimension " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxDimension));
  }
  auto gammas = build_polyhedra(sys);
  Fan fan;
  fan.n = n;
  fan.convenient = is_convenient(sys).convenient;

  // Rays: primitive nonnegative vectors orthogonal to n-1 edge directions of
  // the Minkowski sum whose cell is one-dimensional.
  std::set<IntVec> rays;
  if (n == 1) {
    rays.insert(IntVec{1});
  } else {
    std::set<IntVec> dirs;
    for (const auto& g : gammas) {
      for (auto& e : bounded_edges(g)) dirs.insert(linalg::make_primitive(std::move(e)));
    }
    for (std::size_t i = 0; i < n; ++i) dirs.insert(unit_vector(n, i));
    std::vector<IntVec> dv(dirs.begin(), dirs.end());
    detail::for_each_combination(dv.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<IntVec> rows;
      for (auto i : idx) rows.push_back(dv[i]);
      IntVec k = orient_nonnegative(linalg::kernel_vector(rows));
      if (!k.empty() && !rays.count(k) && cell_dimension(sys, direction_signature(sys, k)) == 1) {
        rays.insert(std::move(k));
      }
      return true;
    });
  }
  fan.skeleton.assign(rays.begin(), rays.end());

  std::vector<DirectionSignature> ray_sig;
  for (const auto& r : fan.skeleton) ray_sig.push_back(direction_signature(sys, r));

  // Cells: every set of rays lying in a common closed cell, grown one ray at
  // a time; the cell of the sum of such a set is read off from signatures.
  std::set<RaySet> cells;
  RaySet current;
  IntVec sum(n, 0);
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    for (std::size_t r = start; r < fan.skeleton.size(); ++r) {
      current.push_back(r);
      for (std::size_t i = 0; i < n; ++i) sum[i] += fan.skeleton[r][i];
      auto sig = direction_signature(sys, sum);
      RaySet cell;
      for (std::size_t s = 0; s < fan.skeleton.size(); ++s) {
        if (dominates(ray_sig[s], sig)) cell.push_back(s);
      }
      if (contains_all(cell, current)) {
        cells.insert(cell);
        grow(r + 1);
      }
      for (std::size_t i = 0; i < n; ++i) sum[i] -= fan.skeleton[r][i];
      current.pop_back();
    }
  };
  grow(0);

  for (const auto& cell : cells) fan.cones.push_back(cone_from_rays(fan.skeleton, cell));
  sort_cones(fan.cones);
  return fan;
}

Fan triangulate(const Fan& fan, const std::optional<std::vector<std::size_t>>& order) {
  const std::size_t k = fan.skeleton.size();
  std::vector<std::size_t> rank_of(k);
  if (order) {
    if (order->size() != k) throw DomainError("ray order must be a permutation of the skeleton");
    std::vector<bool> seen(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      auto r = (*order)[i];
      if (r >= k || seen[r]) throw DomainError("ray order must be a permutation of the skeleton");
      seen[r] = true;
      rank_of[r] = i;
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) rank_of[i] = i;
  }

  std::map<RaySet, const Cone*> by_rays;
  for (const auto& c : fan.cones) by_rays[c.rays] = &c;

  std::map<RaySet, std::vector<RaySet>> memo;
  std::function<const std::vector<RaySet>&(const Cone&)> tri = [&](const Cone& c) -> const std::vector<RaySet>& {
    auto it = memo.find(c.rays);
    if (it != memo.end()) return it->second;
    std::vector<RaySet> out;
    if (c.simplicial) {
      out.push_back(c.rays);
    } else {
      std::size_t v = *std::min_element(c.rays.begin(), c.rays.end(),
                                        [&](auto x, auto y) { return rank_of[x] < rank_of[y]; });
      for (const auto& other : fan.cones) {
        if (other.dim + 1 != c.dim || !contains_all(c.rays, other.rays)) continue;
        if (std::binary_search(other.rays.begin(), other.rays.end(), v)) continue;
        for (const auto& t : tri(other)) {
          RaySet s = t;
          s.insert(std::lower_bound(s.begin(), s.end(), v), v);
          out.push_back(std::move(s));
        }
      }
    }
    return memo.emplace(c.rays, std::move(out)).first->second;
  };

  std::set<RaySet> simplices;
  for (const auto& c : fan.cones) {
    // Faces of maximal cells cover everything; lower cells only matter if
    // they are maximal themselves.
    bool maximal = std::none_of(fan.cones.begin(), fan.cones.end(), [&](const Cone& o) {
      return o.dim > c.dim && contains_all(o.rays, c.rays);
    });
    if (!maximal) continue;
    for (const auto& t : tri(c)) {
      const std::size_t d = t.size();
      for (std::size_t sz = 1; sz <= d; ++sz) {
        detail::for_each_combination(d, sz, [&](const std::vector<std::size_t>& idx) {
          RaySet face;
          for (auto i : idx) face.push_back(t[i]);
          simplices.insert(std::move(face));
          return true;
        });
      }
    }
  }

  Fan out;
  out.n = fan.n;
  out.skeleton = fan.skeleton;
  out.convenient = fan.convenient;
  for (const auto& s : simplices) out.cones.push_back(cone_from_rays(fan.skeleton, s));
  sort_cones(out.cones);
  return out;
}

IntVec barycenter(const Cone& c) {
  if (c.generators.empty()) throw DomainError("barycenter of an empty cone");
  IntVec b(c.generators[0].size(), 0);
  for (const auto& g : c.generators) {
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += g[i];
  }
  return b;
}

bool is_simple(const Cone& c) {
  if (!c.simplicial) throw DomainError("is_simple needs a simplicial cone");
  return linalg::gcd_of_maximal_minors(c.generators) == 1;
}

std::vector<IntVec> parallelepiped_points(const Cone& c) {
  if (!c.simplicial) throw DomainError("parallelepiped_points needs a simplicial cone");
  const std::size_t n = c.generators[0].size();
  const std::size_t k = c.generators.size();

  // Complete to a full-rank set with unit vectors; the points we want are the
  // points of the completed parallelepiped whose extra coordinates vanish.
  std::vector<IntVec> gens = c.generators;
  for (std::size_t i = 0; i < n && gens.size() < n; ++i) {
    gens.push_back(unit_vector(n, i));
    if (linalg::rank(gens) != gens.size()) gens.pop_back();
  }

  // Columns of A are the generators; mu = adj(A) h / det(A).
  std::vector<IntVec> a(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gens[j][i];
  }
  std::int64_t det = to_i64(linalg::determinant(a));
  std::vector<IntVec> adj(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<IntVec> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVec row;
        for (std::size_t s = 0; s < n; ++s) {
          if (s != i) row.push_back(a[r][s]);
        }
        minor.push_back(std::move(row));
      }
      std::int64_t m = n == 1 ? 1 : to_i64(linalg::determinant(minor));
      adj[i][j] = ((i + j) % 2 ? -m : m);
    }
  }
  const std::int64_t d = det < 0 ? -det : det;
  if (det < 0) {
    for (auto& row : adj) {
      for (auto& x : row) x = -x;
    }
  }
  auto mod = [d](std::int64_t x) { return ((x % d) + d) % d; };

  // The quotient Z^n / (lattice of A) is generated by the unit vectors; its
  // elements are the numerators d*mu reduced mod d.
  std::vector<IntVec> step(n, IntVec(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) step[j][i] = mod(adj[i][j]);
  }
  std::set<IntVec> seen{IntVec(n, 0)};
  std::deque<IntVec> queue{IntVec(n, 0)};
  while (!queue.empty()) {
    IntVec cur = queue.front();
    queue.pop_front();
    for (const auto& s : step) {
      IntVec nxt(n);
      for (std::size_t i = 0; i < n; ++i) nxt[i] = mod(cur[i] + s[i]);
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }

  std::vector<IntVec> out;
  for (const auto& mu : seen) {
    bool keep = true;
    for (std::size_t i = k; i < n; ++i) keep &= mu[i] == 0;
    if (!keep) continue;
    IntVec h(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += mu[j] * gens[j][i];
      h[i] = acc / d;
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_relative_interior(const Cone& c, std::span<const std::int64_t> a) {
  if (!c.simplicial) throw DomainError("in_relative_interior needs a simplicial cone");
  auto mu = linalg::solve_coefficients(c.generators, IntVec(a.begin(), a.end()));
  if (!mu) return false;
  return std::all_of(mu->begin(), mu->end(), [](const mpq_class& x) { return x > 0; });
}

std::optional<std::size_t> locate(const Fan& fan, std::span<const std::int64_t> a) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (in_relative_interior(fan.cones[i], a)) return i;
  }
  return std::nullopt;
}

}  // namespace igusa
