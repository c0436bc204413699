#pragma once

// Globally adaptive 7-point Gauss / 15-point Kronrod quadrature in
// multiprecision arithmetic.

#include "xherm/numeric.hpp"

#include <functional>
#include <stdexcept>

namespace xherm {

struct QuadResult {
    Real value;
    Real abs_error_estimate;
    std::size_t subdivisions = 0;
    bool converged = false;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Nodes and weights on [-1, 1], computed at the current Real precision.
struct KronrodRule {
    std::vector<Real> nodes;           // 15 Kronrod nodes, ascending
    std::vector<Real> kronrod_weights; // matching nodes
    std::vector<Real> gauss_weights;   // zero at the 8 Kronrod-only nodes
};

/// Rule for the current precision (cached per precision).
const KronrodRule& gauss_kronrod_15();

/// Integrates f over [a, b] until the summed |K15 - G7| estimate falls below
/// abs_tol. Throws NonConvergence after max_subdivisions bisections.
QuadResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, const Real& abs_tol,
                     std::size_t max_subdivisions = 4000);

}  // namespace xherm
