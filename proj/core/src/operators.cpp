#include "xherm/operators.hpp"

#include <string>

namespace xherm {

namespace {

const ExactPoly& x_poly() {
    static const ExactPoly x = ExactPoly::x();
    return x;
}

// (D - 2x) y
RationalFn gauss_shifted_derivative(const RationalFn& y) {
    return y.derivative() - RationalFn(Rational(2) * x_poly()) * y;
}

std::string residual_string(const RationalFn& lhs, const RationalFn& rhs) { return (lhs - rhs).to_string(); }

}  // namespace

DiffOp2 classical_T() {
    return {RationalFn(ExactPoly::constant(1)), RationalFn(ExactPoly{0, -2}), RationalFn()};
}

DiffOp2 t_from_tau(const ExactPoly& tau) {
    const ExactPoly d1 = tau.derivative();
    const ExactPoly d2 = d1.derivative();
    const ExactPoly& x = x_poly();
    return {
        RationalFn(ExactPoly::constant(1)),
        RationalFn(Rational(-2) * (x * tau + d1), tau),
        RationalFn(d2 + Rational(2) * x * d1, tau),
    };
}

DiffOp2 t_lambda(const Partition& lambda) { return t_from_tau(h_lambda(lambda)); }

RationalFn apply(const DiffOp2& op, const RationalFn& y) {
    const RationalFn d1 = y.derivative();
    const RationalFn d2 = d1.derivative();
    return op.p * d2 + op.q * d1 + op.r * y;
}

DiffOp2 shifted(DiffOp2 op, const Rational& c) {
    op.r = op.r + RationalFn(ExactPoly::constant(c));
    return op;
}

ExactPoly a_lambda(const Partition& lambda, const ExactPoly& y) {
    const auto gaps = gap_sequence(lambda);
    std::vector<ExactPoly> fs;
    for (int k : gaps.values()) fs.push_back(hermite(k));
    fs.push_back(y);
    return wronskian(fs);
}

RationalFn b_lambda(const Partition& lambda, const RationalFn& y) {
    const std::size_t l = lambda.length();
    if (l == 0) return y;

    // Columns Hhat_1..Hhat_l with rows 0..l (derivative order).
    std::vector<std::vector<ExactPoly>> cols(l);
    for (std::size_t i = 0; i < l; ++i) {
        ExactPoly f = h_hat(lambda, i + 1);
        for (std::size_t m = 0; m <= l; ++m) {
            cols[i].push_back(f);
            f = f.derivative();
        }
    }

    // Expand the (l+1)x(l+1) determinant along the last column.
    RationalFn acc;
    RationalFn g = y;
    for (std::size_t m = 0; m <= l; ++m) {
        std::vector<std::vector<ExactPoly>> minor;
        for (std::size_t row = 0; row <= l; ++row) {
            if (row == m) continue;
            std::vector<ExactPoly> r;
            for (std::size_t i = 0; i < l; ++i) r.push_back(cols[i][row]);
            minor.push_back(std::move(r));
        }
        ExactPoly cof = determinant(std::move(minor));
        if ((m + l) % 2 == 1) cof = -cof;
        if (!cof.is_zero()) acc = acc + RationalFn(cof) * g;
        if (m < l) g = gauss_shifted_derivative(g);
    }

    ExactPoly hl_pow = ExactPoly::constant(1);
    const ExactPoly hl = h_lambda(lambda);
    for (std::size_t i = 0; i < l; ++i) hl_pow *= hl;
    return acc / RationalFn(hl_pow);
}

FirstOrderFactor::FirstOrderFactor(Kind kind, Partition lambda, int k)
    : kind_(kind), lambda_(std::move(lambda)), k_(k) {
    auto w = h_lambda_j(lambda_, k_);
    if (w.tag != WronskianTag::Regular)
        throw std::invalid_argument("first-order factor level " + std::to_string(k_) + " must avoid the gaps of " +
                                    lambda_.to_string());
    h_ = h_lambda(lambda_);
    hk_ = std::move(w.value);
}

RationalFn FirstOrderFactor::operator()(const RationalFn& y) const {
    const RationalFn dy = y.derivative();
    if (kind_ == Kind::A) {
        return (RationalFn(hk_) * dy - RationalFn(hk_.derivative()) * y) / RationalFn(h_);
    }
    const RationalFn shift = RationalFn(Rational(2) * x_poly()) + RationalFn(h_.derivative(), h_);
    return RationalFn(h_, hk_) * (dy - shift * y);
}

Report verify_intertwining(const Partition& lambda, const std::vector<ExactPoly>& tests) {
    Report rep("intertwining " + lambda.to_string());
    const Rational two_l(2 * static_cast<long>(lambda.length()));
    const DiffOp2 tl_shift = shifted(t_lambda(lambda), -two_l);
    const DiffOp2 t = classical_T();
    for (std::size_t i = 0; i < tests.size(); ++i) {
        const ExactPoly& y = tests[i];
        const std::string where = "test[" + std::to_string(i) + "]";

        const RationalFn lhs_a = apply(tl_shift, RationalFn(a_lambda(lambda, y)));
        const ExactPoly ty = apply(t, RationalFn(y)).as_polynomial();
        const RationalFn rhs_a = RationalFn(a_lambda(lambda, ty));
        rep.check(lhs_a == rhs_a, "(T_lambda - 2l) A = A T", where, [&] { return residual_string(lhs_a, rhs_a); });

        const RationalFn lhs_b = b_lambda(lambda, apply(tl_shift, RationalFn(y)));
        const RationalFn rhs_b = apply(t, b_lambda(lambda, RationalFn(y)));
        rep.check(lhs_b == rhs_b, "B (T_lambda - 2l) = T B", where, [&] { return residual_string(lhs_b, rhs_b); });
    }
    return rep;
}

Report verify_factorizations(const Partition& lambda, int k, const std::vector<ExactPoly>& tests) {
    Report rep("factorization " + lambda.to_string() + " k=" + std::to_string(k));
    const FirstOrderFactor a(FirstOrderFactor::Kind::A, lambda, k);
    const FirstOrderFactor b(FirstOrderFactor::Kind::B, lambda, k);
    const long l = static_cast<long>(lambda.length());
    const DiffOp2 ba_rhs = shifted(t_lambda(lambda), Rational(2 * k - 2 * l));
    const DiffOp2 ab_rhs = shifted(t_from_tau(h_lambda_j(lambda, k).value), Rational(2 * k - 2 * l - 2));
    for (std::size_t i = 0; i < tests.size(); ++i) {
        const RationalFn y(tests[i]);
        const std::string where = "test[" + std::to_string(i) + "]";
        const RationalFn ba = b(a(y));
        const RationalFn ba_expected = apply(ba_rhs, y);
        rep.check(ba == ba_expected, "B_k A_k = T_lambda + 2k - 2l", where, [&] { return residual_string(ba, ba_expected); });
        const RationalFn ab = a(b(y));
        const RationalFn ab_expected = apply(ab_rhs, y);
        rep.check(ab == ab_expected, "A_k B_k = T_{lambda,k} + 2k - 2l - 2", where, [&] { return residual_string(ab, ab_expected); });
    }
    return rep;
}

Report verify_eigen(const XHermiteFamily& fam, int jmax) {
    Report rep("eigen " + fam.lambda().to_string());
    const long l = static_cast<long>(fam.lambda().length());
    const DiffOp2 op = t_lambda(fam.doubled());
    for (int j = 0; j <= jmax; ++j) {
        if (!fam.admissible(j)) continue;
        const ExactPoly h = x_hermite(fam, j);
        const RationalFn lhs = apply(op, RationalFn(h));
        const RationalFn rhs(h * Rational(4 * l - 2 * j));
        rep.check(lhs == rhs, "T_{lambda^2} H_j = (4l - 2j) H_j", "j=" + std::to_string(j), [&] { return residual_string(lhs, rhs); });
    }
    return rep;
}

Report verify_eigen_general(const Partition& lambda, int jmax) {
    Report rep("eigen-general " + lambda.to_string());
    const long l = static_cast<long>(lambda.length());
    const DiffOp2 op = t_lambda(lambda);
    for (int j = 0; j <= jmax; ++j) {
        auto w = h_lambda_j(lambda, j);
        if (w.tag != WronskianTag::Regular) continue;
        const RationalFn lhs = apply(op, RationalFn(w.value));
        const RationalFn rhs(w.value * Rational(2 * (l - j)));
        rep.check(lhs == rhs, "T_lambda H_{lambda,j} = 2(l - j) H_{lambda,j}", "j=" + std::to_string(j), [&] { return residual_string(lhs, rhs); });
    }
    return rep;
}

}  // namespace xherm
