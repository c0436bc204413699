#include "xherm/spectral.hpp"

namespace xherm {

namespace {

struct RealRational {
    RealPoly num, den;
    explicit RealRational(const RationalFn& f) : num(f.num()), den(f.den()) {}
    Real operator()(const Real& x) const { return num(x) / den(x); }
};

}  // namespace

Potential potential(const Partition& lambda) {
    const ExactPoly h = h_lambda(lambda);
    const RationalFn log_d(h.derivative(), h);
    const RationalFn x2(ExactPoly::monomial(1, 2));
    const RationalFn extra = Rational(2) * log_d * log_d - Rational(2) * RationalFn(h.derivative(2), h);
    if (!extra.is_zero() && !extra.is_proper())
        throw std::logic_error("U - x^2 is not a proper rational function for " + lambda.to_string());
    return {lambda, x2 + extra, sturm_real_root_count(h) == 0};
}

RegularityReport regularity_theorem_check(int max_weight, int max_leading_zeros) {
    RegularityReport out;
    for (const auto& lambda : enumerate_partitions(max_weight, max_leading_zeros)) {
        RegularityEntry e{lambda, is_adler(lambda), sturm_real_root_count(h_lambda(lambda))};
        out.report.check(e.adler == (e.real_roots == 0), "is_adler == (no real zeros)", lambda.to_string(), [&] {
            return std::string(e.adler ? "Adler" : "non-Adler") + " with " + std::to_string(e.real_roots) +
                   " real zeros";
        });
        out.entries.push_back(std::move(e));
    }
    return out;
}

std::vector<Real> sample_grid(std::size_t n, const Real& lo, const Real& hi) {
    std::vector<Real> xs;
    if (n == 1) return {lo};
    for (std::size_t i = 0; i < n; ++i) xs.push_back(lo + (hi - lo) * Real(i) / Real(n - 1));
    return xs;
}

Real eigenfunction_residual(const Partition& lambda, int k, const std::vector<Real>& xs) {
    auto w = h_lambda_j(lambda, k);
    if (w.tag != WronskianTag::Regular)
        throw std::invalid_argument("level " + std::to_string(k) + " is a gap of " + lambda.to_string());
    const ExactPoly h = h_lambda(lambda);
    const RationalFn r0(w.value, h);
    const RationalFn r1 = r0.derivative();
    const RationalFn r2 = r1.derivative();
    const RealRational R0(r0), R1(r1), R2(r2), U(potential(lambda).U);
    const RealPoly H(h);
    const long l = static_cast<long>(lambda.length());
    const Real energy(2 * k - 2 * l + 1);

    Real worst_res = 0, worst_psi = 0;
    for (const Real& x : xs) {
        if (H(x) == 0) throw SingularSample("sample " + format_real(x) + " is a zero of H_" + lambda.to_string());
        const Real g = boost::multiprecision::exp(-x * x / 2);
        const Real psi = g * R0(x);
        const Real psi2 = g * (R2(x) - 2 * x * R1(x) + (x * x - 1) * R0(x));
        const Real res = -psi2 + U(x) * psi - energy * psi;
        worst_res = std::max(worst_res, Real(boost::multiprecision::abs(res)));
        worst_psi = std::max(worst_psi, Real(boost::multiprecision::abs(psi)));
    }
    if (worst_psi == 0) return worst_res;
    return worst_res / worst_psi;
}

Real eigenfunction_residual(const Partition& lambda, int k) {
    ScopedPrecision guard(working_digits());
    return eigenfunction_residual(lambda, k, sample_grid(21, Real(-5), Real(5)));
}

std::pair<Integer, Integer> indicial_roots(int m) {
    const Integer mm(m);
    return {mm * (mm - 1) / 2, (mm + 1) * (mm + 2) / 2};
}

IndicialReport indicial_check(const Partition& lambda) {
    IndicialReport out;
    const ExactPoly h = h_lambda(lambda);
    if (h.is_constant()) return out;
    for (const auto& f : squarefree_decomposition(h)) {
        IndicialEntry e;
        e.factor = f.factor;
        e.multiplicity = f.multiplicity;
        const auto m = triangular_root(f.multiplicity);
        if (m) {
            e.m = *m;
            std::tie(e.low, e.high) = indicial_roots(*m);
        }
        out.report.check(m.has_value(), "TriangularityViolation", "(" + f.factor.to_string() + ")",
                         [&] { return "multiplicity " + std::to_string(f.multiplicity) + " is not triangular"; });
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace xherm
