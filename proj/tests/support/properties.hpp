#pragma once

// Randomised property suites shared by the unit tests and the acceptance run.

#include <cstdint>
#include <string>

namespace igusa::props {

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::string first_failure;
};

/// Lattice points of the half-open parallelepiped number |det| for random
/// full-dimensional simplicial cones, n <= 4, entries <= 9.
Outcome parallelepiped_count(std::size_t cases, std::uint64_t seed);

/// Each random nonnegative ray lies in exactly one cone of the triangulated fan.
Outcome fan_partition(std::size_t rays, std::uint64_t seed);

/// Sum and product agree with a plain numerator/denominator representation.
Outcome ratfun_reference(std::size_t pairs, std::uint64_t seed);

/// E(-u / p^m) is the complex conjugate of E(u / p^m) for every unit u.
Outcome expsum_conjugation(double tol);

}  // namespace igusa::props
