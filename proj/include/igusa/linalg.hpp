#pragma once

// Exact linear algebra for the small integer matrices that show up in
// polyhedral computations (n <= 6). Rows are integer vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "igusa/polycore.hpp"

namespace igusa::linalg {

mpz_class determinant(const std::vector<IntVec>& square);

std::size_t rank(const std::vector<IntVec>& rows);

/// Generator of the kernel of n-1 rows in Z^n, via signed maximal minors,
/// made primitive. Empty when the rows are linearly dependent.
IntVec kernel_vector(const std::vector<IntVec>& rows);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec make_primitive(IntVec v);

/// gcd of all k x k minors of a k x n matrix of rank k (lattice index of the
/// saturation). Zero when the rows are dependent.
mpz_class gcd_of_maximal_minors(const std::vector<IntVec>& rows);

/// Coefficients mu with sum_i mu_i * gens[i] == target, or nullopt when the
/// target is outside the span. `gens` must be linearly independent.
std::optional<std::vector<mpq_class>> solve_coefficients(const std::vector<IntVec>& gens, const IntVec& target);

/// Rank over F_p of a matrix given by residues.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

}  // namespace igusa::linalg
