#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "igusa/newton.hpp"
#include "igusa/polycore.hpp"

namespace igusa {

/// Cone spanned by primitive nonnegative generators. `rays` indexes the
/// owning fan's skeleton (empty for free-standing cones).
struct Cone {
  std::vector<IntVec> generators;
  std::vector<std::size_t> rays;
  std::size_t dim = 0;
  bool simplicial = false;
  bool simple = false;
};

/// Builds a free-standing cone, filling in dim / simplicial / simple.
Cone make_cone(std::vector<IntVec> generators);

struct Fan {
  std::size_t n = 0;
  std::vector<IntVec> skeleton;
  std::vector<Cone> cones;
  bool convenient = true;
};

/// Which support points of each f_j attain the minimum of <a, .>, plus the
/// zero pattern of a. Two directions lie in the relative interior of the same
/// cell of the dual subdivision exactly when their signatures agree.
struct DirectionSignature {
  std::vector<std::vector<std::size_t>> argmin;
  std::vector<std::size_t> zeros;
  friend bool operator==(const DirectionSignature&, const DirectionSignature&) = default;
  friend auto operator<=>(const DirectionSignature&, const DirectionSignature&) = default;
};

DirectionSignature direction_signature(const PolySystem& sys, std::span<const std::int64_t> a);

/// Common refinement of the normal fans of Gamma(f_1), ..., Gamma(f_l),
/// restricted to the nonnegative orthant. Cells are generally not simplicial.
Fan dual_subdivision(const PolySystem& sys);

/// Pulling triangulation. Rays are pulled in `order` (a permutation of the
/// skeleton indices, identity by default). Already simplicial fans come back
/// with the same cones.
Fan triangulate(const Fan& fan, const std::optional<std::vector<std::size_t>>& order = std::nullopt);

IntVec barycenter(const Cone& c);

/// Lattice points of the half-open parallelepiped {sum mu_i a_i : 0 <= mu_i < 1}.
std::vector<IntVec> parallelepiped_points(const Cone& c);

bool is_simple(const Cone& c);

/// True when `a` lies in the relative interior of the simplicial cone `c`.
bool in_relative_interior(const Cone& c, std::span<const std::int64_t> a);

/// Index of the cone of a simplicial fan whose relative interior contains
/// `a`, if any.
std::optional<std::size_t> locate(const Fan& fan, std::span<const std::int64_t> a);

}  // namespace igusa
