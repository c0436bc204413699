#pragma once

// The exceptional subspace U_lambda: polynomials p for which
// 2 H' (x p - p') + H'' p is divisible by H = H_lambda.

#include "xherm/hermite.hpp"
#include "xherm/numeric.hpp"
#include "xherm/report.hpp"

#include <optional>
#include <stdexcept>

namespace xherm {

bool membership(const Partition& lambda, const ExactPoly& p);

/// 2 H' (x p - p') + H'' p modulo H. Zero exactly for members.
ExactPoly membership_remainder(const Partition& lambda, const ExactPoly& p);

/// Number of degrees below |lambda| + lambda_l not attained by any H_{lambda,j}.
std::size_t codimension_by_degrees(const Partition& lambda);

/// Rank of p -> membership_remainder(p) on polynomials of degree <= |lambda| + lambda_l.
std::size_t codimension_by_rank(const Partition& lambda);

/// Both of the above; throws std::logic_error if they disagree.
std::size_t codimension(const Partition& lambda);

struct MultiplicityEntry {
    ExactPoly factor;
    unsigned multiplicity = 0;
};

class NonSimpleRoots : public std::domain_error {
public:
    NonSimpleRoots(const Partition& lambda, std::vector<MultiplicityEntry> profile);
    const std::vector<MultiplicityEntry>& profile() const { return profile_; }

private:
    std::vector<MultiplicityEntry> profile_;
};

struct RootConstraint {
    Complex xi;
    Complex r;
    unsigned multiplicity = 1;
    Real r_scale;     // |xi| + sum_b 1/|xi - xi_b|, the size of the terms summed into r
    Real h_residual;  // |H_lambda(xi)|
};

/// Digits used by root_constraints for a requested precision.
unsigned constraint_digits(double precision);

/// One constraint p'(xi) = r p(xi) per root of H_lambda, sorted by (Re, Im).
/// Root components below the refinement tolerance are set to zero.
/// Values are computed with constraint_digits(precision) digits. Throws
/// NonSimpleRoots unless H_lambda is squarefree.
std::vector<RootConstraint> root_constraints(const Partition& lambda, double precision);

/// |p'(xi) - r p(xi)| / sum_k |c_k| (k |xi|^(k-1) + (|r| + r_scale) |xi|^k), at the
/// current precision.
Real constraint_residual(const RootConstraint& c, const ExactPoly& p);

struct RepeatedFactor {
    ExactPoly factor;
    unsigned multiplicity = 0;
    bool triangular = false;  // multiplicity = m(m+1)/2
    int m = -1;               // -1 when not triangular
    bool power_of_x = false;
};

struct PrimitivityReport {
    Partition lambda;
    bool squarefree = true;
    std::vector<RepeatedFactor> repeated;
    bool all_triangular = true;
    bool only_x_repeats = true;
};

PrimitivityReport primitivity_check(const Partition& lambda);

/// m with n = m(m+1)/2, if any.
std::optional<int> triangular_root(unsigned n);

}  // namespace xherm
