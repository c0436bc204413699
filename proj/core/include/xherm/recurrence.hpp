#pragma once

// The (2l+3)-term recurrence satisfied by H_{lambda,n} for lambda of length l:
//   sum_{k=0}^{2l+2} B^l_{n,k} H_{lambda,n+k} = 0,  n >= -l-1.

#include "xherm/hermite.hpp"
#include "xherm/report.hpp"

#include <stdexcept>

namespace xherm {

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// n! / (i! j! (n-i-j)!), zero unless i, j, n-i-j >= 0.
Integer trinomial(int n, int i, int j);

/// x (x+1) ... (x+i-1); 1 for i = 0 and 0 for i < 0.
Rational pochhammer(const Rational& x, int i);

struct RecCoeffs {
    int ell = 0;
    int n = 0;
    std::vector<ExactPoly> B;  // k = 0 .. 2 ell + 2
};

/// B^l_{n,k} = sum_j (-1)^k 2^-j (n+k+1)_{l+1-j} C^{l+1}_{2j-k,k-j} H_{2j-k}.
/// Throws RangeError for n < -ell-1, invalid_argument for ell < 0.
const RecCoeffs& rec_coeffs(int ell, int n);

/// sum_k B_k H_{lambda,n+k} as a polynomial.
ExactPoly recurrence_residual(const Partition& lambda, int n);

/// Residual is exactly zero for n = -l-1 .. nmax.
Report verify_recurrence(const Partition& lambda, int nmax);

/// H_{lambda,0..N}: the first l+1 by Wronskian, the rest by forward solving
/// each relation for its top term.
std::vector<ExactPoly> generate_via_recurrence(const Partition& lambda, int N);

/// A^l_{n,j,m} = (-1)^m 2^-j (n+2j-m+1)_{l-j} C^l_{m,j-m}.
Rational induction_coeff(int ell, int n, int j, int m);

/// sum_{j<=l, m<=j} A^l_{njm} H_m H_{lambda,n+2j-m} = l! H_{n+l} H_lambda for
/// n = 0 .. nmax, plus Wronskian-of-Wronskians checks on the Hermite
/// polynomials indexed by the gaps of lambda.
Report verify_induction_identity(const Partition& lambda, int nmax);

/// Wr[Wr[f.., g], Wr[f.., h]] == Wr[f..] Wr[f.., g, h].
bool wronskian_of_wronskians_holds(const std::vector<ExactPoly>& fs, const ExactPoly& g, const ExactPoly& h);

/// The recursion on A^l between l and l+1, over j <= l+1, m <= j, l <= ell_max,
/// n in [n_lo, n_hi].
Report verify_coefficient_identity(int ell_max, int n_lo, int n_hi);

}  // namespace xherm
