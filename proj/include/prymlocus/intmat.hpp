#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace prym {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using IntRow = std::vector<Int>;
using IntMatrix = std::vector<IntRow>;

// Overflow-checked arithmetic; throws CapExceeded on overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Pivots are positive, entries above each pivot lie in [0, pivot), and zero
/// rows are dropped, so the result is the unique canonical basis.
IntMatrix hermite_normal_form(IntMatrix rows);

// Column index of each row's leading nonzero entry, for a matrix in HNF.
std::vector<std::size_t> pivot_columns(const IntMatrix& hnf);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Int bareiss_determinant(IntMatrix m);

/// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& rows);

/// Solves A t = b exactly by Gaussian elimination over the rationals.
/// Returns nullopt when A is singular. A must be square.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const std::vector<Rational>& b);

bool is_integral(const std::vector<Rational>& v);

// "p/q", or "p" when integral.
std::string format_rational(const Rational& r);

}  // namespace prym
