#include "xherm/orthogonality.hpp"

#include <boost/math/constants/constants.hpp>

namespace xherm {

Real weight(const XHermiteFamily& fam, const Real& x) {
    const Real h = RealPoly(fam.h_lambda2())(x);
    return boost::multiprecision::exp(-x * x) / (h * h);
}

Real min_abs_on_real_line(const ExactPoly& h) {
    if (h.is_zero()) return Real(0);
    if (h.is_constant()) return boost::multiprecision::abs(to_real(h.leading()));
    // The minimum of |h| sits at a critical point; evaluate at the midpoint of
    // each tightly isolated critical interval and halve.
    std::optional<Rational> best;
    for (const auto& [lo, hi] : isolate_real_roots(h.derivative(), Rational(1, Integer(1) << 60))) {
        Rational v = h.eval((lo + hi) / 2);
        if (v < 0) v = -v;
        if (!best || v < *best) best = v;
    }
    if (!best) throw std::logic_error("polynomial without real critical points has odd degree");
    return to_real(*best) / 2;
}

Real truncation_radius(const ExactPoly& p, const Real& h_min, const Real& bound) {
    Real s = 0;
    for (const auto& c : p.coeffs()) s += boost::multiprecision::abs(to_real(c));
    const int d = p.is_zero() ? 0 : static_cast<int>(p.degree().value());
    const Real factor = 2 * s / (h_min * h_min);
    Real x = 1;
    for (;; x += Real(0.5)) {
        if (2 * x * x <= d + 1) continue;
        // Tail of x^d exp(-x^2) beyond X is at most X^d exp(-X^2) / (2X - d/X).
        const Real tail = boost::multiprecision::pow(x, d) * boost::multiprecision::exp(-x * x) / (2 * x - d / x);
        if (factor * tail < bound) return x;
    }
}

QuadResult inner_product(const XHermiteFamily& fam, int i, int j, const Real& tol) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
    const ExactPoly prod = x_hermite(fam, i) * x_hermite(fam, j);
    ScopedPrecision guard(working_digits());
    const Real t = tol;
    const Real x_max = truncation_radius(prod, min_abs_on_real_line(fam.h_lambda2()), t / 10);
    const RealPoly num(prod), den(fam.h_lambda2());
    auto f = [&](const Real& x) {
        const Real h = den(x);
        return num(x) * boost::multiprecision::exp(-x * x) / (h * h);
    };
    QuadResult r = integrate(f, -x_max, x_max, t * Real(0.9));
    r.abs_error_estimate += t / 10;
    return r;
}

Rational norm_formula(const XHermiteFamily& fam, int j) {
    require_admissible(fam, j);
    Rational c = p_lambda(fam.doubled()).eval(Rational(j));
    for (int k = 1; k <= j; ++k) c *= 2 * k;
    return c;
}

Rational wronskian_norm(const XHermiteFamily& fam, int j) {
    return norm_formula(fam, j) * Rational(Integer(1) << (2 * fam.lambda().length()));
}

GramMatrix gram_matrix(const XHermiteFamily& fam, int jmax, const Real& tol, NormConvention convention) {
    GramMatrix g;
    g.convention = convention;
    g.report = Report("gram " + fam.lambda().to_string());
    for (int j = 0; j <= jmax; ++j)
        if (fam.admissible(j)) g.indices.push_back(j);
    const std::size_t n = g.indices.size();
    g.values.assign(n, std::vector<Real>(n, Real(0)));
    g.errors.assign(n, std::vector<Real>(n, Real(0)));
    for (int j : g.indices)
        g.closed_form.push_back(convention == NormConvention::Product ? norm_formula(fam, j) : wronskian_norm(fam, j));

    ScopedPrecision guard(working_digits());
    const Real sqrt_pi = boost::multiprecision::sqrt(boost::math::constants::pi<Real>());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            const int i = g.indices[a], j = g.indices[b];
            const Real expected = a == b ? to_real(g.closed_form[a]) * sqrt_pi : Real(0);
            const Real entry_tol = a == b ? tol * expected / 10 : tol / 10;
            QuadResult r;
            try {
                r = inner_product(fam, i, j, entry_tol);
            } catch (const NonConvergence& e) {
                throw NonConvergence("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
            }
            g.values[a][b] = g.values[b][a] = r.value;
            g.errors[a][b] = g.errors[b][a] = r.abs_error_estimate;
            const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (a == b) {
                const Real rel = boost::multiprecision::abs(r.value - expected) / expected;
                g.report.check(rel <= tol, "diagonal matches closed form", where,
                               [&] { return "relative error " + format_real(rel); });
            } else {
                const Real v = boost::multiprecision::abs(r.value);
                g.report.check(v <= tol, "off-diagonal vanishes", where, [&] { return "|value| " + format_real(v); });
            }
        }
    }
    return g;
}

}  // namespace xherm
