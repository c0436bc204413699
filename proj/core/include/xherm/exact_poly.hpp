#pragma once

// Dense univariate polynomials with exact rational coefficients.
//
// Coefficients are stored low-to-high (index = power of x). The zero
// polynomial has no coefficients and a degree of Degree::neg_infinity().

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xherm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Polynomial degree with a distinct sentinel for the zero polynomial.
class Degree {
public:
    static constexpr Degree neg_infinity() { return Degree(); }
    constexpr explicit Degree(std::size_t d) : value_(d), finite_(true) {}

    constexpr bool is_neg_infinity() const { return !finite_; }

    std::size_t value() const {
        if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
        return value_;
    }

    constexpr bool operator==(const Degree&) const = default;
    constexpr std::strong_ordering operator<=>(const Degree& o) const {
        if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
        return value_ <=> o.value_;
    }
    constexpr bool operator==(std::size_t d) const { return finite_ && value_ == d; }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    constexpr Degree() = default;
    std::size_t value_ = 0;
    bool finite_ = false;
};

class ExactPoly;

/// Thrown by exact_divide when the divisor does not divide exactly.
class DivisionError : public std::runtime_error {
public:
    DivisionError(const std::string& what, std::vector<Rational> remainder);
    const std::vector<Rational>& remainder_coeffs() const { return remainder_; }
    ExactPoly remainder() const;

private:
    std::vector<Rational> remainder_;
};

class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<Rational> coeffs);
    ExactPoly(std::initializer_list<Rational> coeffs);

    static ExactPoly constant(const Rational& c);
    static ExactPoly monomial(const Rational& c, std::size_t power);
    static ExactPoly x() { return monomial(1, 1); }

    const std::vector<Rational>& coeffs() const { return c_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& leading() const;

    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    ExactPoly& operator*=(const ExactPoly& o);
    ExactPoly& operator*=(const Rational& s);

    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(ExactPoly a, const Rational& s) { return a *= s; }
    friend ExactPoly operator*(const Rational& s, ExactPoly a) { return a *= s; }
    ExactPoly operator-() const;

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder of Euclidean division; throws on zero divisor.
    std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& d) const;
    /// Quotient when d divides *this exactly, otherwise DivisionError.
    ExactPoly exact_divide(const ExactPoly& d) const;
    bool divisible_by(const ExactPoly& d) const;

    ExactPoly derivative(unsigned order = 1) const;
    /// p(-x).
    ExactPoly reflect() const;
    /// Monic associate; zero stays zero.
    ExactPoly monic() const;
    /// Positive rational scalar multiple with coprime integer coefficients.
    ExactPoly primitive() const;

    Rational eval(const Rational& x) const;

    /// Horner evaluation in any field that can be built from a Rational
    /// through the supplied conversion.
    template <class T, class Convert>
    T eval_with(const T& x, Convert&& convert) const {
        T acc = convert(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + convert(*it);
        return acc;
    }

    double eval(double x) const;

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

/// Determinant of a square matrix of polynomials (fraction-free elimination).
ExactPoly determinant(std::vector<std::vector<ExactPoly>> rows);

/// Wronskian determinant of fs with rows f, f', ..., f^(n-1). The empty
/// Wronskian is the constant 1.
ExactPoly wronskian(std::span<const ExactPoly> fs);

/// Signed remainder chain used for real-root counting.
std::vector<ExactPoly> sturm_sequence(const ExactPoly& p);

/// Number of distinct real roots of a nonzero polynomial.
std::size_t sturm_real_root_count(const ExactPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
std::size_t sturm_root_count_in(const std::vector<ExactPoly>& seq, const Rational& a, const Rational& b);

/// Disjoint isolating intervals (a, b], one per distinct real root, each
/// narrower than width.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const ExactPoly& p, const Rational& width);

struct SquarefreeFactor {
    ExactPoly factor;  // monic, squarefree
    unsigned multiplicity;
};

/// Yun decomposition: p = c * prod factor^multiplicity, factors monic and
/// pairwise coprime, listed by increasing multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const ExactPoly& p);

bool is_squarefree(const ExactPoly& p);

/// Parses "p/q" or "p" in base 10.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

}  // namespace xherm
