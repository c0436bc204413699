#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xherm/hermite.hpp"
#include "xherm/subspace.hpp"

using namespace xherm;

namespace {

Rational to_rational(const Real& v, unsigned digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Real scaled = v * to_real(Rational(scale));
    Integer z;
    mpfr_get_z(z.get_mpz_t(), scaled.backend().data(), MPFR_RNDN);
    Rational q(z, scale);
    q.canonicalize();
    return q;
}

Real abs_sum(const ExactPoly& p) {
    Real s = 0;
    for (const auto& c : p.coeffs()) s += boost::multiprecision::abs(to_real(c));
    return s;
}

// Random polynomial of the given degree satisfying every root constraint,
// found by elimination on the real and imaginary parts of the constraints.
ExactPoly constrained_random(const Partition& lambda, std::size_t degree, std::mt19937_64& rng) {
    const auto cs = root_constraints(lambda, 1e-40);
    const std::size_t cols = degree + 1;
    std::vector<std::vector<Real>> rows;
    for (const auto& c : cs) {
        std::vector<Real> re(cols), im(cols);
        Complex pow_prev(Real(0)), pow_cur(Real(1));  // xi^{k-1}, xi^k
        for (std::size_t k = 0; k < cols; ++k) {
            const Complex term = Complex(Real(static_cast<long>(k))) * pow_prev - c.r * pow_cur;
            re[k] = term.re;
            im[k] = term.im;
            pow_prev = pow_cur;
            pow_cur = pow_cur * c.xi;
        }
        rows.push_back(re);
        rows.push_back(im);
    }
    // Reduced row echelon form with partial pivoting.
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows.size(); ++col) {
        std::size_t best = rk;
        for (std::size_t r = rk; r < rows.size(); ++r)
            if (boost::multiprecision::abs(rows[r][col]) > boost::multiprecision::abs(rows[best][col])) best = r;
        if (boost::multiprecision::abs(rows[best][col]) < Real("1e-40")) continue;
        std::swap(rows[rk], rows[best]);
        const Real piv = rows[rk][col];
        for (auto& v : rows[rk]) v /= piv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rk) continue;
            const Real f = rows[r][col];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rk][k];
        }
        pivots.push_back(col);
        ++rk;
    }
    REQUIRE(pivots.size() == static_cast<std::size_t>(lambda.weight()));
    std::uniform_int_distribution<int> dist(-9, 9);
    std::vector<Real> coeff(cols, Real(0));
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t k = 0; k < cols; ++k)
        if (!is_pivot[k]) coeff[k] = dist(rng);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Real v = 0;
        for (std::size_t k = 0; k < cols; ++k)
            if (!is_pivot[k]) v -= rows[i][k] * coeff[k];
        coeff[pivots[i]] = v;
    }
    std::vector<Rational> q;
    for (const auto& v : coeff) q.push_back(to_rational(v, 50));
    return ExactPoly(q);
}

std::vector<std::vector<Rational>> span_rows(const Partition& lambda, std::size_t max_degree) {
    std::vector<std::vector<Rational>> rows;
    for (int j = 0;; ++j) {
        const auto w = h_lambda_j(lambda, j);
        if (w.value.is_zero()) continue;
        if (w.value.degree().value() > max_degree) break;
        rows.push_back(w.value.coeffs());
    }
    return rows;
}

}  // namespace

TEST_CASE("membership examples") {
    CHECK(membership({1, 1}, h_lambda_j({1, 1}, 0).value));
    CHECK(membership({1, 1}, ExactPoly{16}));
    CHECK_FALSE(membership({1, 1}, ExactPoly::x()));
    CHECK_FALSE(membership_remainder({1, 1}, ExactPoly::x()).is_zero());
    std::mt19937_64 rng(17);
    const ExactPoly h = h_lambda({1, 1});
    for (int t = 0; t < 10; ++t) CHECK(membership({1, 1}, h * h * oracle::random_poly(rng, 5, 100)));
    CHECK(membership(Partition{}, ExactPoly{1, 2, 3}));
}

TEST_CASE("members form a linear space") {
    const Partition lambda{1, 3};
    const ExactPoly a = h_lambda_j(lambda, 0).value, b = h_lambda_j(lambda, 4).value;
    CHECK(membership(lambda, a + Rational(3, 7) * b));
    CHECK_FALSE(membership({1, 1}, ExactPoly::x() * ExactPoly{16}));
    CHECK_FALSE(membership(lambda, ExactPoly::x() * a));
}

TEST_CASE("every H_{lambda,j} is a member") {
    for (const auto& lambda : enumerate_partitions(6, 1))
        for (int j = 0; j <= 12; ++j) {
            const auto w = h_lambda_j(lambda, j);
            if (w.tag == WronskianTag::Regular) REQUIRE_MESSAGE(membership(lambda, w.value), lambda.to_string(), " j=", j);
        }
}

TEST_CASE("membership agrees with the span of H_{lambda,j}") {
    std::mt19937_64 rng(123);
    for (const auto& lambda : enumerate_partitions(5)) {
        const std::size_t top = static_cast<std::size_t>(lambda.weight() + lambda.last() + 2);
        const auto rows = span_rows(lambda, top);
        const bool squarefree = is_squarefree(h_lambda(lambda));
        for (int t = 0; t < 8; ++t) {
            ExactPoly p = oracle::random_poly(rng, top, 5);
            if (t % 2 == 0) {
                // perturb a span element so both outcomes are exercised
                p = ExactPoly{};
                for (const auto& r : rows) p += Rational(static_cast<long>(rng() % 5) - 2) * ExactPoly(r);
                if (t == 4) p += ExactPoly::monomial(1, static_cast<std::size_t>(rng() % (top + 1)));
                if (p.is_zero()) continue;
            }
            auto with = rows;
            with.push_back(p.coeffs());
            const bool in_span = oracle::rank(with) == oracle::rank(rows);
            if (squarefree) {
                CHECK_MESSAGE(membership(lambda, p) == in_span, lambda.to_string());
            } else if (in_span) {
                CHECK(membership(lambda, p));
            }
        }
    }
}

TEST_CASE("codimension") {
    CHECK(codimension({1, 1}) == 2);
    CHECK(codimension(Partition{}) == 0);
    CHECK(codimension({1, 1, 3, 3}) == 8);
    CHECK(codimension_by_rank({1, 1, 3, 3}) == 8);
    CHECK(codimension_by_degrees({1, 3}) == 4);
}

TEST_CASE("codimension methods agree on squarefree H_lambda up to weight 8") {
    for (const auto& lambda : enumerate_partitions(8)) {
        const std::size_t by_degrees = codimension_by_degrees(lambda);
        CHECK(by_degrees == static_cast<std::size_t>(lambda.weight()));
        if (is_squarefree(h_lambda(lambda))) CHECK_MESSAGE(codimension_by_rank(lambda) == by_degrees, lambda.to_string());
    }
}

TEST_CASE("divisibility rank drops when H_lambda has a repeated root") {
    // H_{(1,2)} = c x^3; a triple root imposes a single condition.
    CHECK(codimension_by_degrees({1, 2}) == 3);
    CHECK(codimension_by_rank({1, 2}) == 1);
    CHECK_THROWS_AS(codimension({1, 2}), std::logic_error);
}

TEST_CASE("root constraints for (1,1)") {
    const auto cs = root_constraints({1, 1}, 1e-40);
    REQUIRE(cs.size() == 2);
    ScopedPrecision guard(constraint_digits(1e-40));
    const Real inv_sqrt2 = 1 / boost::multiprecision::sqrt(Real(2));
    CHECK(boost::multiprecision::abs(cs[0].xi.re) < Real("1e-50"));
    CHECK(boost::multiprecision::abs(cs[0].xi.im + inv_sqrt2) < Real("1e-50"));
    CHECK(boost::multiprecision::abs(cs[1].xi.im - inv_sqrt2) < Real("1e-50"));
    for (const auto& c : cs) {
        CHECK(c.multiplicity == 1);
        CHECK(c.r.abs() < Real("1e-50"));
        CHECK(constraint_residual(c, h_lambda_j({1, 1}, 0).value) <= Real("1e-40"));
        CHECK(constraint_residual(c, h_lambda_j({1, 1}, 3).value) <= Real("1e-40"));
    }
    CHECK(constraint_residual(cs[1], ExactPoly::x()) > Real("0.1"));
}

TEST_CASE("root constraints for () and (2)") {
    CHECK(root_constraints(Partition{}, 1e-40).empty());
    const auto cs = root_constraints({2}, 1e-40);
    REQUIRE(cs.size() == 2);
    ScopedPrecision guard(constraint_digits(1e-40));
    const Real s2 = boost::multiprecision::sqrt(Real(2));
    CHECK(boost::multiprecision::abs(cs[0].xi.re + 1 / s2) < Real("1e-50"));
    CHECK(boost::multiprecision::abs(cs[1].xi.re - 1 / s2) < Real("1e-50"));
    CHECK(boost::multiprecision::abs(cs[1].r.re - s2) < Real("1e-50"));
    CHECK(boost::multiprecision::abs(cs[0].r.re + s2) < Real("1e-50"));
}

TEST_CASE("root constraints need simple roots") {
    try {
        (void)root_constraints({1, 2}, 1e-40);
        FAIL("expected NonSimpleRoots");
    } catch (const NonSimpleRoots& e) {
        REQUIRE(e.profile().size() == 1);
        CHECK(e.profile()[0].factor == ExactPoly::x());
        CHECK(e.profile()[0].multiplicity == 3);
    }
}

TEST_CASE("members satisfy the root constraints") {
    for (const auto& lambda : enumerate_partitions(6)) {
        if (!is_squarefree(h_lambda(lambda))) continue;
        const auto cs = root_constraints(lambda, 1e-40);
        REQUIRE(cs.size() == static_cast<std::size_t>(lambda.weight()));
        ScopedPrecision guard(constraint_digits(1e-40));
        for (int j = 0; j <= lambda.last() + static_cast<int>(lambda.length()) + 2; ++j) {
            const auto w = h_lambda_j(lambda, j);
            if (w.tag != WronskianTag::Regular) continue;
            for (const auto& c : cs) CHECK(constraint_residual(c, w.value) <= Real("1e-40"));
        }
    }
}

TEST_CASE("polynomials solving the root constraints are members") {
    std::mt19937_64 rng(31);
    for (const Partition& lambda : {Partition{1, 1}, Partition{2}, Partition{1, 3}, Partition{2, 2}, Partition{1, 1, 3, 3}}) {
        ScopedPrecision guard(100);
        const std::size_t degree = static_cast<std::size_t>(lambda.weight() + lambda.last() + 3);
        for (int t = 0; t < 3; ++t) {
            const ExactPoly p = constrained_random(lambda, degree, rng);
            const ExactPoly rem = membership_remainder(lambda, p);
            const Real bound = Real("1e-40") * abs_sum(p) * abs_sum(h_lambda(lambda));
            CHECK_MESSAGE(abs_sum(rem) <= bound, lambda.to_string());
            // the exact test is not fooled into accepting x p
            CHECK_FALSE(membership(lambda, ExactPoly::x() * h_lambda_j(lambda, 0).value));
        }
    }
}

TEST_CASE("primitivity") {
    auto r = primitivity_check({1, 1});
    CHECK(r.squarefree);
    CHECK(r.repeated.empty());

    r = primitivity_check({1, 3});
    CHECK(r.squarefree);

    r = primitivity_check({2, 2});
    CHECK(r.squarefree);
    CHECK(r.only_x_repeats);

    r = primitivity_check({1, 2});
    CHECK_FALSE(r.squarefree);
    REQUIRE(r.repeated.size() == 1);
    CHECK(r.repeated[0].power_of_x);
    CHECK(r.repeated[0].multiplicity == 3);
    CHECK(r.repeated[0].triangular);
    CHECK(r.repeated[0].m == 2);
}

TEST_CASE("repeated factors up to weight 8 are powers of x with triangular multiplicity") {
    std::size_t imprimitive = 0;
    for (const auto& lambda : enumerate_partitions(8)) {
        const auto r = primitivity_check(lambda);
        CHECK(r.all_triangular);
        CHECK(r.only_x_repeats);
        if (!r.squarefree) ++imprimitive;
    }
    CHECK(imprimitive == 11);
}

TEST_CASE("triangular numbers") {
    CHECK(triangular_root(1) == 1);
    CHECK(triangular_root(3) == 2);
    CHECK(triangular_root(6) == 3);
    CHECK_FALSE(triangular_root(4).has_value());
    CHECK_FALSE(triangular_root(2).has_value());
}
