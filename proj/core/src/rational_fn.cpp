#include "xherm/rational_fn.hpp"

#include <stdexcept>

namespace xherm {

RationalFn::RationalFn(ExactPoly num, ExactPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = ExactPoly::constant(1);
        return;
    }
    if (!den_.is_constant()) {
        ExactPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_divide(g);
            den_ = den_.exact_divide(g);
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

ExactPoly RationalFn::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + to_string());
    return num_;
}

RationalFn RationalFn::derivative() const {
    if (is_polynomial()) return RationalFn(num_.derivative(), den_, Reduced{});
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn operator*(const Rational& s, const RationalFn& a) {
    if (s == 0) return RationalFn();
    return RationalFn(a.num_ * s, a.den_, RationalFn::Reduced{});
}

Rational RationalFn::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

std::string RationalFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace xherm
