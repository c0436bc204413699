#pragma once

// Orthogonality of X-Hermite polynomials against
// W(x) = exp(-x^2) / H_{lambda^2}(x)^2.

#include "xherm/hermite.hpp"
#include "xherm/quadrature.hpp"
#include "xherm/report.hpp"

namespace xherm {

Real weight(const XHermiteFamily& fam, const Real& x);

/// Lower bound for min |H| over the real line; H must have no real zeros.
Real min_abs_on_real_line(const ExactPoly& h);

/// Smallest X >= 1 (in steps of 1/2) such that the part of the integral of
/// |p| exp(-x^2) / h^2 beyond |x| > X is below bound.
Real truncation_radius(const ExactPoly& p, const Real& h_min, const Real& bound);

/// Integral over the real line of H_i H_j W, to absolute tolerance tol.
/// Evaluated at working_digits().
QuadResult inner_product(const XHermiteFamily& fam, int i, int j, const Real& tol);

/// Rational c with ||H_j||^2 = c sqrt(pi): 2^j j! p_{lambda^2}(j).
/// Throws ExcludedDegree for excluded j.
Rational norm_formula(const XHermiteFamily& fam, int j);

/// norm_formula times 4^l (l the length of lambda): the squared norm under
/// the Wronskian normalization of H^{(lambda)}_j and H_{lambda^2} used here.
/// Each of the 2l Darboux steps contributes a factor 2 (j - k_i), which the
/// plain product 2^j j! p_{lambda^2}(j) counts only as (j - k_i).
Rational wronskian_norm(const XHermiteFamily& fam, int j);

enum class NormConvention { Product, Wronskian };

struct GramMatrix {
    std::vector<int> indices;                 // admissible degrees <= jmax
    std::vector<std::vector<Real>> values;    // symmetric
    std::vector<std::vector<Real>> errors;    // quadrature error estimates
    std::vector<Rational> closed_form;        // sqrt(pi) multiples, diagonal
    NormConvention convention = NormConvention::Product;
    Report report;
};

/// Off-diagonal entries must be <= tol in absolute value, diagonal entries
/// within relative tol of the closed form (norm_formula or wronskian_norm).
GramMatrix gram_matrix(const XHermiteFamily& fam, int jmax, const Real& tol,
                       NormConvention convention = NormConvention::Product);

}  // namespace xherm
