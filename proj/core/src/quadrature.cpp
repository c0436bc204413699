#include "xherm/quadrature.hpp"

#include <map>
#include <mutex>
#include <queue>

namespace xherm {

namespace {

ExactPoly legendre(int n) {
    ExactPoly prev = ExactPoly::constant(1), cur = ExactPoly::x();
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        ExactPoly next = (Rational(2 * k + 1, k + 1) * (ExactPoly::x() * cur)) - Rational(k, k + 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Integral of x^n P(x) over [-1, 1].
Rational legendre_moment(const ExactPoly& p, int n) {
    Rational s = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t e = i + static_cast<std::size_t>(n);
        if (e % 2 == 0) s += c[i] * Rational(2, static_cast<long>(e + 1));
    }
    return s;
}

// Stieltjes polynomial E_8 for the 7-point Gauss rule: monic, even, and
// orthogonal to x^k P_7 for k < 8.
ExactPoly stieltjes8(const ExactPoly& p7) {
    // Unknowns a[0], a[2], a[4], a[6]; moments below degree 7 vanish, so the
    // odd-k conditions k = 1, 3, 5, 7 form a triangular system.
    std::map<int, Rational> a;
    a[8] = 1;
    for (int k = 1; k <= 7; k += 2) {
        const int unknown = 6 - (k - 1);  // 6, 4, 2, 0
        Rational rhs = 0;
        for (int e = 8; e > unknown; e -= 2) rhs += a[e] * legendre_moment(p7, e + k);
        a[unknown] = -rhs / legendre_moment(p7, unknown + k);
    }
    std::vector<Rational> c(9);
    for (auto& [e, v] : a) c[static_cast<std::size_t>(e)] = v;
    return ExactPoly(std::move(c));
}

std::vector<Real> polished_roots(const ExactPoly& p) {
    const RealPoly f(p), df(p.derivative());
    const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) + 2);
    std::vector<Real> roots;
    for (const auto& [lo, hi] : isolate_real_roots(p, Rational(1, 1 << 20))) {
        Real x = to_real((lo + hi) / 2);
        for (int it = 0; it < 100; ++it) {
            const Real step = f(x) / df(x);
            x -= step;
            if (boost::multiprecision::abs(step) < eps) break;
        }
        roots.push_back(x);
    }
    return roots;
}

// Solves A w = b by Gaussian elimination with partial pivoting.
std::vector<Real> solve(std::vector<std::vector<Real>> a, std::vector<Real> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (boost::multiprecision::abs(a[i][k]) > boost::multiprecision::abs(a[piv][k])) piv = i;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Real f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Real> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Real s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

KronrodRule build_rule() {
    const ExactPoly p7 = legendre(7);
    const ExactPoly e8 = stieltjes8(p7);

    std::vector<Real> gauss = polished_roots(p7);
    std::vector<Real> extra = polished_roots(e8);

    KronrodRule rule;
    rule.nodes = gauss;
    rule.nodes.insert(rule.nodes.end(), extra.begin(), extra.end());
    std::sort(rule.nodes.begin(), rule.nodes.end());

    // Kronrod weights from exactness on P_0..P_14.
    const std::size_t n = rule.nodes.size();
    std::vector<RealPoly> basis;
    for (int m = 0; m < static_cast<int>(n); ++m) basis.emplace_back(legendre(m));
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n));
    std::vector<Real> b(n, Real(0));
    b[0] = 2;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i) a[m][i] = basis[m](rule.nodes[i]);
    rule.kronrod_weights = solve(std::move(a), std::move(b));

    const RealPoly dp7(p7.derivative());
    rule.gauss_weights.assign(n, Real(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& g : gauss) {
            if (g == rule.nodes[i]) {
                const Real d = dp7(g);
                rule.gauss_weights[i] = 2 / ((1 - g * g) * d * d);
            }
        }
    }
    return rule;
}

struct Segment {
    Real a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate(const std::function<Real(const Real&)>& f, const KronrodRule& rule, const Real& a, const Real& b) {
    const Real c = (a + b) / 2, h = (b - a) / 2;
    Real k = 0, g = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real fx = f(c + h * rule.nodes[i]);
        k += rule.kronrod_weights[i] * fx;
        if (rule.gauss_weights[i] != 0) g += rule.gauss_weights[i] * fx;
    }
    k *= h;
    g *= h;
    return {a, b, k, boost::multiprecision::abs(k - g)};
}

}  // namespace

const KronrodRule& gauss_kronrod_15() {
    static std::mutex mutex;
    static std::map<unsigned, KronrodRule> cache;
    const unsigned digits = Real::default_precision();
    std::lock_guard lock(mutex);
    auto it = cache.find(digits);
    if (it == cache.end()) {
        KronrodRule rule;
        {
            // 20 guard digits for the moment solve, then round back
            ScopedPrecision guard(digits + 20);
            rule = build_rule();
        }
        for (auto* v : {&rule.nodes, &rule.kronrod_weights, &rule.gauss_weights})
            for (auto& x : *v) x.precision(digits);
        it = cache.emplace(digits, std::move(rule)).first;
    }
    return it->second;
}

QuadResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, const Real& abs_tol,
                     std::size_t max_subdivisions) {
    const KronrodRule& rule = gauss_kronrod_15();
    std::priority_queue<Segment> heap;
    heap.push(evaluate(f, rule, a, b));
    std::size_t splits = 0;
    for (;;) {
        Real value = 0, error = 0;
        auto copy = heap;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
        if (error <= abs_tol) return {value, error, splits, true};
        if (splits >= max_subdivisions)
            throw NonConvergence("quadrature error estimate " + format_real(error) + " above tolerance " +
                                 format_real(abs_tol) + " after " + std::to_string(splits) + " subdivisions");
        Segment worst = heap.top();
        heap.pop();
        const Real mid = (worst.a + worst.b) / 2;
        heap.push(evaluate(f, rule, worst.a, mid));
        heap.push(evaluate(f, rule, mid, worst.b));
        ++splits;
    }
}

}  // namespace xherm
