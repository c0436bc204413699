#pragma once

// Second-order operators T and T_lambda, the order-l intertwiners A_lambda
// and B_lambda, and the first-order Darboux factors. Identities between
// them are checked by exact application to polynomial test functions.

#include "xherm/hermite.hpp"
#include "xherm/rational_fn.hpp"
#include "xherm/report.hpp"

#include <vector>

namespace xherm {

/// y -> p y'' + q y' + r y
struct DiffOp2 {
    RationalFn p;
    RationalFn q;
    RationalFn r;
};

/// T[y] = y'' - 2x y'
DiffOp2 classical_T();

/// T_tau[y] = y'' - 2(x + tau'/tau) y' + (tau''/tau + 2x tau'/tau) y.
DiffOp2 t_from_tau(const ExactPoly& tau);

/// T_lambda, i.e. t_from_tau(H_lambda).
DiffOp2 t_lambda(const Partition& lambda);

RationalFn apply(const DiffOp2& op, const RationalFn& y);

/// Shifted operator T + c.
DiffOp2 shifted(DiffOp2 op, const Rational& c);

/// A_lambda[y] = Wr[H_{k_1}, ..., H_{k_l}, y].
ExactPoly a_lambda(const Partition& lambda, const ExactPoly& y);

/// B_lambda[y] = e^{x^2} H_lambda^{-l} Wr[Hhat_1, ..., Hhat_l, e^{-x^2} y],
/// evaluated by conjugating the Gaussian through the derivatives so the
/// last column holds (D - 2x)^m y.
RationalFn b_lambda(const Partition& lambda, const RationalFn& y);

/// First-order factor of the Darboux chain at level k.
///   A_{lambda,k}[y] = Wr[H_{lambda,k}, y] / H_lambda
///   B_{lambda,k}[y] = (H_lambda / H_{lambda,k}) (y' - (2x + H_lambda'/H_lambda) y)
class FirstOrderFactor {
public:
    enum class Kind { A, B };

    /// Throws std::invalid_argument when k is a gap of lambda.
    FirstOrderFactor(Kind kind, Partition lambda, int k);

    Kind kind() const { return kind_; }
    const Partition& lambda() const { return lambda_; }
    int k() const { return k_; }

    RationalFn operator()(const RationalFn& y) const;

private:
    Kind kind_;
    Partition lambda_;
    int k_;
    ExactPoly h_;   // H_lambda
    ExactPoly hk_;  // H_{lambda,k}
};

/// (T_lambda - 2l) A_lambda = A_lambda T and B_lambda (T_lambda - 2l) = T B_lambda
/// on each test polynomial.
Report verify_intertwining(const Partition& lambda, const std::vector<ExactPoly>& tests);

/// B_{lambda,k} A_{lambda,k} = T_lambda + 2k - 2l and
/// A_{lambda,k} B_{lambda,k} = T_{lambda,k} + 2k - 2l - 2.
Report verify_factorizations(const Partition& lambda, int k, const std::vector<ExactPoly>& tests);

/// T_{lambda^2}[H^{(lambda)}_j] = (4l - 2j) H^{(lambda)}_j for admissible j <= jmax.
Report verify_eigen(const XHermiteFamily& fam, int jmax);

/// T_lambda[H_{lambda,j}] = 2(l - j) H_{lambda,j} for j <= jmax outside the gaps.
Report verify_eigen_general(const Partition& lambda, int jmax);

}  // namespace xherm
