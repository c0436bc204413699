#pragma once

// Multiprecision floating point support: a runtime-precision real type,
// a minimal complex type over it, polynomial evaluation and complex root
// refinement.

#include "xherm/exact_poly.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>
#include <vector>

namespace xherm {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Decimal digits for high-precision work: XH_PRECISION if set and valid,
/// otherwise 30.
unsigned working_digits();

/// Sets the default Real precision for the current scope.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Rational& q);

/// 15 significant digits, the format used for every float the tools emit.
std::string format_real(const Real& x, int digits = 15);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT(implicit)

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex operator-() const { return {-re, -im}; }
    Real abs() const;
};

/// Polynomial with Real coefficients converted once from an ExactPoly.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(const ExactPoly& p);

    Real operator()(const Real& x) const;
    Complex operator()(const Complex& z) const;
    std::size_t size() const { return c_.size(); }
    const std::vector<Real>& coeffs() const { return c_; }

private:
    std::vector<Real> c_;
};

/// Eigenvalues of the companion matrix in double precision.
std::vector<std::complex<double>> companion_roots(const ExactPoly& p);

/// All complex roots of a squarefree polynomial, seeded by companion_roots
/// and refined by simultaneous Aberth iterations at the current precision.
/// Throws std::runtime_error if refinement fails to converge.
std::vector<Complex> refine_roots(const ExactPoly& p);

}  // namespace xherm
