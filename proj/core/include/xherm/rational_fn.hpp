#pragma once

#include "xherm/exact_poly.hpp"

namespace xherm {

/// Exact quotient num/den kept in lowest terms with a monic denominator.
class RationalFn {
public:
    RationalFn() : num_(), den_(ExactPoly::constant(1)) {}
    RationalFn(ExactPoly p) : num_(std::move(p)), den_(ExactPoly::constant(1)) {}  // NOLINT(implicit)
    RationalFn(ExactPoly num, ExactPoly den);

    const ExactPoly& num() const { return num_; }
    const ExactPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// The polynomial value; throws std::domain_error when the denominator
    /// is not constant.
    ExactPoly as_polynomial() const;

    RationalFn derivative() const;

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const Rational& s, const RationalFn& a);
    RationalFn operator-() const { return RationalFn(-num_, den_, Reduced{}); }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// deg(num) - deg(den) style test for "proper" rational functions.
    bool is_proper() const { return num_.degree() < den_.degree(); }

    Rational eval(const Rational& x) const;

    std::string to_string() const;

private:
    struct Reduced {};
    RationalFn(ExactPoly num, ExactPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    ExactPoly num_;
    ExactPoly den_;
};

}  // namespace xherm
