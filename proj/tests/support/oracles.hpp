#pragma once

// Reference computations used by the unit tests. Everything here is written
// independently of the library's algorithms (cofactor expansion instead of
// Bareiss, plain Gaussian elimination instead of remainder ranks).

#include <random>
#include <vector>

#include "xherm/exact_poly.hpp"

namespace oracle {

using xherm::ExactPoly;
using xherm::Rational;

/// Determinant by Laplace expansion along the first row.
inline ExactPoly laplace_det(const std::vector<std::vector<ExactPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return ExactPoly::constant(1);
    if (n == 1) return m[0][0];
    ExactPoly acc;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<ExactPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<ExactPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        ExactPoly term = m[0][c] * laplace_det(minor);
        if (c % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

inline ExactPoly wronskian(const std::vector<ExactPoly>& fs) {
    std::vector<std::vector<ExactPoly>> m(fs.size());
    for (std::size_t r = 0; r < fs.size(); ++r)
        for (const auto& f : fs) m[r].push_back(f.derivative(static_cast<unsigned>(r)));
    return laplace_det(m);
}

/// Hermite polynomials from the explicit sum n! sum (-1)^m (2x)^(n-2m) / (m! (n-2m)!).
inline ExactPoly hermite(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    auto fact = [](int k) { xherm::Integer f = 1; for (int i = 2; i <= k; ++i) f *= i; return f; };
    for (int m = 0; 2 * m <= n; ++m) {
        xherm::Integer two_pow = xherm::Integer(1) << (n - 2 * m);
        Rational v(fact(n) * two_pow, fact(m) * fact(n - 2 * m));
        v.canonicalize();
        c[static_cast<std::size_t>(n - 2 * m)] = m % 2 == 0 ? v : Rational(-v);
    }
    return ExactPoly(c);
}

/// Rank of a list of coefficient vectors over Q.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    for (auto& r : rows) r.resize(width, Rational(0));
    std::size_t rk = 0;
    for (std::size_t col = 0; col < width && rk < rows.size(); ++col) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rk || rows[r][col] == 0) continue;
            const Rational f = rows[r][col] / rows[rk][col];
            for (std::size_t k = col; k < width; ++k) rows[r][k] -= f * rows[rk][k];
        }
        ++rk;
    }
    return rk;
}

inline ExactPoly random_poly(std::mt19937_64& rng, std::size_t degree, long magnitude) {
    std::uniform_int_distribution<long> dist(-magnitude, magnitude);
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = dist(rng);
    if (c.back() == 0) c.back() = 1;
    return ExactPoly(c);
}

}  // namespace oracle
