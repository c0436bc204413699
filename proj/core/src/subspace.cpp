#include "xherm/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace xherm {

namespace {

ExactPoly membership_expression(const ExactPoly& h, const ExactPoly& p) {
    const ExactPoly d1 = h.derivative();
    const ExactPoly d2 = d1.derivative();
    return Rational(2) * d1 * (ExactPoly::x() * p - p.derivative()) + d2 * p;
}

// Rank of a dense rational matrix by fraction-keeping elimination.
std::size_t rank(std::vector<std::vector<Rational>> a) {
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::string profile_string(const std::vector<MultiplicityEntry>& profile) {
    std::string s;
    for (const auto& e : profile) {
        if (!s.empty()) s += ", ";
        s += "(" + e.factor.to_string() + ")^" + std::to_string(e.multiplicity);
    }
    return s;
}

}  // namespace

ExactPoly membership_remainder(const Partition& lambda, const ExactPoly& p) {
    const ExactPoly h = h_lambda(lambda);
    return membership_expression(h, p).divmod(h).second;
}

bool membership(const Partition& lambda, const ExactPoly& p) {
    return membership_remainder(lambda, p).is_zero();
}

std::size_t codimension_by_degrees(const Partition& lambda) { return missing_degree_count(lambda); }

std::size_t codimension_by_rank(const Partition& lambda) {
    const ExactPoly h = h_lambda(lambda);
    if (h.is_constant()) return 0;
    const std::size_t n = static_cast<std::size_t>(lambda.weight() + lambda.last());
    const std::size_t rdim = h.degree().value();
    std::vector<std::vector<Rational>> m;
    for (std::size_t k = 0; k <= n; ++k) {
        const ExactPoly rem = membership_expression(h, ExactPoly::monomial(1, k)).divmod(h).second;
        std::vector<Rational> row(rdim);
        for (std::size_t i = 0; i < rdim; ++i) row[i] = rem.coeff(i);
        m.push_back(std::move(row));
    }
    return rank(std::move(m));
}

std::size_t codimension(const Partition& lambda) {
    const std::size_t a = codimension_by_degrees(lambda);
    const std::size_t b = codimension_by_rank(lambda);
    if (a != b)
        throw std::logic_error("codimension of " + lambda.to_string() + ": degree count " + std::to_string(a) +
                               " but rank " + std::to_string(b));
    return a;
}

NonSimpleRoots::NonSimpleRoots(const Partition& lambda, std::vector<MultiplicityEntry> profile)
    : std::domain_error("H_lambda has repeated roots for lambda = " + lambda.to_string() + ": " +
                        profile_string(profile)),
      profile_(std::move(profile)) {}

unsigned constraint_digits(double precision) {
    const double want = precision > 0 ? -std::log10(precision) + 20 : 60;
    return static_cast<unsigned>(std::max(60.0, std::ceil(want)));
}

std::vector<RootConstraint> root_constraints(const Partition& lambda, double precision) {
    const ExactPoly h = h_lambda(lambda);
    if (h.is_constant()) return {};
    if (!is_squarefree(h)) {
        std::vector<MultiplicityEntry> profile;
        for (const auto& f : squarefree_decomposition(h)) profile.push_back({f.factor, f.multiplicity});
        throw NonSimpleRoots(lambda, std::move(profile));
    }

    const unsigned digits = constraint_digits(precision);
    ScopedPrecision guard(digits);
    std::vector<Complex> roots = refine_roots(h);
    const Real tiny = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 8);
    for (auto& z : roots) {
        const Real size = std::max(Real(1), z.abs());
        if (boost::multiprecision::abs(z.re) < tiny * size) z.re = 0;
        if (boost::multiprecision::abs(z.im) < tiny * size) z.im = 0;
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    const RealPoly f(h);
    std::vector<RootConstraint> out;
    for (std::size_t a = 0; a < roots.size(); ++a) {
        Complex r = roots[a];
        Real scale = roots[a].abs();
        for (std::size_t b = 0; b < roots.size(); ++b) {
            if (b == a) continue;
            const Complex d = roots[a] - roots[b];
            r = r + Complex(1) / d;
            scale += 1 / d.abs();
        }
        if (boost::multiprecision::abs(r.re) < tiny * scale) r.re = 0;
        if (boost::multiprecision::abs(r.im) < tiny * scale) r.im = 0;
        out.push_back({roots[a], r, 1, scale, f(roots[a]).abs()});
    }
    return out;
}

Real constraint_residual(const RootConstraint& c, const ExactPoly& p) {
    const Complex v = RealPoly(p.derivative())(c.xi) - c.r * RealPoly(p)(c.xi);
    const Real ax = c.xi.abs(), ar = c.r.abs() + c.r_scale;
    Real scale = 0;
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const Real ck = boost::multiprecision::abs(to_real(cs[k]));
        Real term = ar * boost::multiprecision::pow(ax, static_cast<int>(k));
        if (k > 0) term += Real(k) * boost::multiprecision::pow(ax, static_cast<int>(k) - 1);
        scale += ck * term;
    }
    if (scale == 0) return Real(0);
    return v.abs() / scale;
}

std::optional<int> triangular_root(unsigned n) {
    for (unsigned m = 0; m * (m + 1) / 2 <= n; ++m)
        if (m * (m + 1) / 2 == n) return static_cast<int>(m);
    return std::nullopt;
}

PrimitivityReport primitivity_check(const Partition& lambda) {
    PrimitivityReport rep;
    rep.lambda = lambda;
    const ExactPoly h = h_lambda(lambda);
    if (h.is_constant()) return rep;
    for (const auto& f : squarefree_decomposition(h)) {
        if (f.multiplicity == 1) continue;
        rep.squarefree = false;
        RepeatedFactor r;
        r.factor = f.factor;
        r.multiplicity = f.multiplicity;
        if (auto m = triangular_root(f.multiplicity)) {
            r.triangular = true;
            r.m = *m;
        }
        r.power_of_x = f.factor.monic() == ExactPoly::x();
        rep.all_triangular = rep.all_triangular && r.triangular;
        rep.only_x_repeats = rep.only_x_repeats && r.power_of_x;
        rep.repeated.push_back(std::move(r));
    }
    return rep;
}

}  // namespace xherm
