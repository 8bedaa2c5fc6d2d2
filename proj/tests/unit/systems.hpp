#pragma once

// Systems used throughout the tests.

#include <string>

#include "igusa/polycore.hpp"

namespace igusa::testing {

inline const std::vector<std::string> kXYZ = {"x", "y", "z"};
inline const std::vector<std::string> kXY = {"x", "y"};

// hyperplane section of a cone over a smooth octic plane curve
inline PolySystem cone_section() { return parse_system({"x+y-z", "x^8+y^8+z^8+x^2*y^2*z^2"}, kXYZ); }

// pencil (x^k + y^k, x^4 + y^4 + xy)
inline PolySystem pencil(int k) {
  const std::string ks = std::to_string(k);
  return parse_system({"x^" + ks + "+y^" + ks, "x^4+y^4+x*y"}, kXY);
}

// line through the origin cut with the sum of squares
inline PolySystem line_squares() { return parse_system({"x+y", "x^2+y^2"}, kXY); }

// x^8 + y^8 + (x+y)^8 + x^2 y^2 (x+y)^2, expanded: degenerate on the face of direction (1,1)
inline const char* kCollapsedCurve =
    "2*x^8 + 8*x^7*y + 28*x^6*y^2 + 56*x^5*y^3 + 70*x^4*y^4 + 56*x^3*y^5 + 28*x^2*y^6 + 8*x*y^7 + 2*y^8"
    " + x^4*y^2 + 2*x^3*y^3 + x^2*y^4";

}  // namespace igusa::testing
