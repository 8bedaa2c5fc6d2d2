#pragma once

#include <cstdint>
#include <vector>

#include "igusa/polycore.hpp"

namespace igusa {

inline constexpr std::size_t kMaxDimension = 6;

/// Supporting hyperplane <normal, x> = offset of a facet. The normal is
/// nonnegative and primitive.
struct Facet {
  IntVec normal;
  std::int64_t offset = 0;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Newton polyhedron conv(supp(f) + R_+^n), kept as its support points,
/// vertices and facet hyperplanes.
struct NewtonPolyhedron {
  std::size_t n = 0;
  std::vector<ExponentVector> generators;
  std::vector<ExponentVector> vertices;
  std::vector<Facet> facets;
};

/// First meet locus F(a, Gamma) recorded by the support points it contains.
struct FaceDescriptor {
  std::vector<ExponentVector> attaining;
  std::int64_t value = 0;
};

NewtonPolyhedron build_polyhedron(const IntPolynomial& f);

/// d(a, Gamma) = min over the polyhedron of <a, x>; requires a >= 0.
std::int64_t support_value(const NewtonPolyhedron& gamma, std::span<const std::int64_t> a);

FaceDescriptor first_meet_locus(const NewtonPolyhedron& gamma, std::span<const std::int64_t> a);

/// d(a, Gamma(f_1 ... f_l)) as the sum of the per-polynomial support values.
std::int64_t system_support_value(const PolySystem& sys, std::span<const std::int64_t> a);
std::int64_t system_support_value(const std::vector<NewtonPolyhedron>& gammas, std::span<const std::int64_t> a);

std::vector<NewtonPolyhedron> build_polyhedra(const PolySystem& sys);

}  // namespace igusa
