#include <doctest.h>

#include "xherm/spectral.hpp"

using namespace xherm;

namespace {

Real finite_difference_residual(const Partition& lambda, int k, const Real& x) {
    // psi = e^{-x^2/2} H_{lambda,k} / H_lambda; second derivative by a central
    // difference with step 1e-15 at 80 digits.
    const RealPoly num(h_lambda_j(lambda, k).value), den(h_lambda(lambda));
    const RationalFn U = potential(lambda).U;
    const RealPoly un(U.num()), ud(U.den());
    auto psi = [&](const Real& t) { return boost::multiprecision::exp(-t * t / 2) * num(t) / den(t); };
    const Real h("1e-15");
    const Real d2 = (psi(x + h) - 2 * psi(x) + psi(x - h)) / (h * h);
    const Real energy(2 * k - 2 * static_cast<long>(lambda.length()) + 1);
    return boost::multiprecision::abs(-d2 + un(x) / ud(x) * psi(x) - energy * psi(x));
}

}  // namespace

TEST_CASE("potential examples") {
    Potential p = potential(Partition{});
    CHECK(p.U == RationalFn(ExactPoly::monomial(1, 2)));
    CHECK(p.regular);

    p = potential({1, 1});
    const RationalFn h(ExactPoly{4, 0, 8});
    const RationalFn ld = RationalFn(ExactPoly{0, 16}) / h;
    const RationalFn expected = RationalFn(ExactPoly::monomial(1, 2)) + Rational(2) * ld * ld - RationalFn(ExactPoly{32}) / h;
    CHECK(p.U == expected);
    CHECK(p.regular);

    p = potential({1});
    CHECK(p.U == RationalFn(ExactPoly::monomial(1, 2)) + RationalFn(ExactPoly{2}, ExactPoly::monomial(1, 2)));
    CHECK_FALSE(p.regular);
}

TEST_CASE("potential tends to the oscillator") {
    const RationalFn x2(ExactPoly::monomial(1, 2));
    for (const auto& lambda : enumerate_partitions(7, 1)) {
        const RationalFn extra = potential(lambda).U - x2;
        if (!extra.is_zero()) CHECK(extra.is_proper());
    }
}

TEST_CASE("regularity agrees with the Adler predicate") {
    const auto r = regularity_theorem_check(6);
    CHECK(r.report.ok());
    bool saw11 = false, saw2 = false;
    for (const auto& e : r.entries) {
        if (e.lambda == Partition{1, 1}) {
            saw11 = true;
            CHECK(e.adler);
            CHECK(e.real_roots == 0);
        }
        if (e.lambda == Partition{2}) {
            saw2 = true;
            CHECK_FALSE(e.adler);
            CHECK(e.real_roots == 2);
        }
    }
    CHECK(saw11);
    CHECK(saw2);
    CHECK(regularity_theorem_check(8, 1).report.ok());
}

TEST_CASE("eigenfunction residuals") {
    ScopedPrecision guard(30);
    const std::vector<Real> xs{Real(-2), Real(-1), Real(0), Real(1), Real(2)};
    CHECK(eigenfunction_residual({1, 1}, 0, xs) <= Real("1e-12"));
    CHECK(eigenfunction_residual(Partition{}, 3, xs) <= Real("1e-12"));
    CHECK(eigenfunction_residual({1, 1, 3, 3}, 0, xs) <= Real("1e-12"));
    CHECK(eigenfunction_residual({1, 1}, 5) <= Real("1e-12"));
    CHECK_THROWS_AS(eigenfunction_residual({1, 1}, 1, xs), std::invalid_argument);
    CHECK_THROWS_AS(eigenfunction_residual({1}, 0, xs), SingularSample);
}

TEST_CASE("classical levels are 2k+1") {
    ScopedPrecision guard(30);
    for (int k = 0; k <= 8; ++k) CHECK(eigenfunction_residual(Partition{}, k) <= Real("1e-20"));
}

TEST_CASE("finite differences confirm the Schroedinger form") {
    ScopedPrecision guard(80);
    for (const auto& [lambda, k] : std::vector<std::pair<Partition, int>>{{{1, 1}, 0}, {{1, 1}, 4}, {{1, 3}, 0}, {{2, 2}, 7}}) {
        for (const char* x : {"-1.3", "0.2", "2.5"}) CHECK(finite_difference_residual(lambda, k, Real(x)) < Real("1e-10"));
    }
}

TEST_CASE("Adler partitions up to weight 6 have small residuals") {
    ScopedPrecision guard(30);
    for (const auto& lambda : enumerate_partitions(6)) {
        if (!is_adler(lambda)) continue;
        for (int k = 0; k <= 8; ++k) {
            if (h_lambda_j(lambda, k).tag != WronskianTag::Regular) continue;
            CHECK_MESSAGE(eigenfunction_residual(lambda, k) <= Real("1e-10"), lambda.to_string(), " k=", k);
        }
    }
}

TEST_CASE("indicial roots") {
    CHECK(indicial_roots(1) == std::pair<Integer, Integer>{0, 3});
    CHECK(indicial_roots(2) == std::pair<Integer, Integer>{1, 6});
    const auto r = indicial_check({1, 1});
    CHECK(r.report.ok());
    REQUIRE_FALSE(r.entries.empty());
    for (const auto& e : r.entries) {
        CHECK(e.multiplicity == 1);
        CHECK(e.low == 0);
        CHECK(e.high == 3);
    }
    const auto r12 = indicial_check({1, 2});
    CHECK(r12.report.ok());
    bool found = false;
    for (const auto& e : r12.entries)
        if (e.multiplicity == 3) {
            found = true;
            CHECK(e.m == 2);
            CHECK(e.low == 1);
            CHECK(e.high == 6);
        }
    CHECK(found);
}

TEST_CASE("sample grid") {
    ScopedPrecision guard(30);
    const auto xs = sample_grid(21, Real(-5), Real(5));
    REQUIRE(xs.size() == 21);
    CHECK(xs.front() == -5);
    CHECK(xs[10] == 0);
    CHECK(xs.back() == 5);
}
