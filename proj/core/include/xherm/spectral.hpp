#pragma once

// Rational extensions of the harmonic oscillator:
// U_lambda = x^2 - 2 (log H_lambda)''.

#include "xherm/numeric.hpp"
#include "xherm/rational_fn.hpp"
#include "xherm/report.hpp"
#include "xherm/subspace.hpp"

namespace xherm {

struct Potential {
    Partition lambda;
    RationalFn U;
    bool regular = false;  // H_lambda has no real zeros
};

Potential potential(const Partition& lambda);

struct RegularityEntry {
    Partition lambda;
    bool adler = false;
    std::size_t real_roots = 0;
};

struct RegularityReport {
    std::vector<RegularityEntry> entries;
    Report report{"krein-adler"};
};

/// Compares is_adler with the Sturm zero count for every partition of weight
/// <= max_weight, with up to max_leading_zeros leading zero parts.
RegularityReport regularity_theorem_check(int max_weight, int max_leading_zeros = 3);

class SingularSample : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// n equispaced points on [lo, hi].
std::vector<Real> sample_grid(std::size_t n, const Real& lo, const Real& hi);

/// max |-psi'' + U psi - (2k - 2l + 1) psi| / max |psi| over the samples, where
/// psi = exp(-x^2/2) H_{lambda,k} / H_lambda. Evaluated at working_digits().
Real eigenfunction_residual(const Partition& lambda, int k, const std::vector<Real>& xs);

/// Same on the default grid: 21 points on [-5, 5].
Real eigenfunction_residual(const Partition& lambda, int k);

struct IndicialEntry {
    ExactPoly factor;
    unsigned multiplicity = 0;
    int m = -1;
    Integer low = 0;   // m(m-1)/2
    Integer high = 0;  // (m+1)(m+2)/2
};

struct IndicialReport {
    std::vector<IndicialEntry> entries;
    Report report{"indicial"};  // a failure per non-triangular multiplicity
};

IndicialReport indicial_check(const Partition& lambda);

/// Indicial roots m(m-1)/2 and (m+1)(m+2)/2 for a root of multiplicity m(m+1)/2.
std::pair<Integer, Integer> indicial_roots(int m);

}  // namespace xherm
