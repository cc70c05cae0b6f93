#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jordan/ncpoly.hpp"
#include "jordan/rational.hpp"
#include "jordan/rewrite.hpp"

namespace jordan {

/// Normal form in R = Q<x,y>/(xy - yx - y^2) on the basis y^k x^m, computed by
/// the rewriting engine with the single rule xy -> yx + y^2.
NormalPoly normal_form(const NcPoly& f);

/// Reads a normal-form polynomial out of a free-algebra element whose terms
/// are all normal words. Throws InvariantViolated otherwise.
NormalPoly as_normal(const NcPoly& f);

/// n!/(n-k+1)!: the coefficient of y^k x^(n-k+1) in the normal form of x^n y.
/// Throws OutOfRange unless 1 <= k <= n+1.
Rational alpha_coeff(std::size_t k, std::size_t n);

/// x * f in normal form, using x * y^k x^m = y^k x^(m+1) + k y^(k+1) x^m.
NormalPoly left_multiply_by_x(const NormalPoly& f);

/// Product in R via the closed multiplication rule above (no word rewriting).
NormalPoly multiply(const NormalPoly& f, const NormalPoly& g);

/// Number of normal monomials of total degree d (counted on the rewriting
/// system, not by formula).
std::uint64_t hilbert_dim(std::size_t d);

/// Coefficients of 1/(1 - gens*t + rels*t^2) up to t^up_to. Throws Overflow.
std::vector<std::int64_t> gs_series_coefficients(std::int64_t gens, std::int64_t rels, std::size_t up_to);

/// xy - yx - y^2 in the free algebra.
NcPoly jordan_relation();

}  // namespace jordan
