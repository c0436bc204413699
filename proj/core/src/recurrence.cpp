#include "xherm/recurrence.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace xherm {

namespace {

Rational pow2_inverse(int j) { return Rational(1, Integer(1) << j); }

Integer factorial(int n) {
    Integer f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// H_{lambda,m}, zero for negative m and for gap indices.
ExactPoly wronskian_term(const Partition& lambda, int m) {
    if (m < 0) return {};
    return h_lambda_j(lambda, m).value;
}

}  // namespace

Integer trinomial(int n, int i, int j) {
    if (i < 0 || j < 0 || n - i - j < 0) return 0;
    return factorial(n) / (factorial(i) * factorial(j) * factorial(n - i - j));
}

Rational pochhammer(const Rational& x, int i) {
    if (i < 0) return 0;
    Rational p = 1;
    for (int k = 0; k < i; ++k) p *= x + k;
    return p;
}

const RecCoeffs& rec_coeffs(int ell, int n) {
    if (ell < 0) throw std::invalid_argument("recurrence order must be non-negative");
    if (n < -ell - 1)
        throw RangeError("recurrence index n = " + std::to_string(n) + " below -l-1 = " + std::to_string(-ell - 1));
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<RecCoeffs>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{ell, n}];
    if (slot) return *slot;

    auto rc = std::make_unique<RecCoeffs>();
    rc->ell = ell;
    rc->n = n;
    for (int k = 0; k <= 2 * ell + 2; ++k) {
        ExactPoly b;
        const int j_lo = (k + 1) / 2;
        const int j_hi = std::min(k, ell + 1);
        for (int j = j_lo; j <= j_hi; ++j) {
            Rational c = pow2_inverse(j) * pochhammer(Rational(n + k + 1), ell + 1 - j) *
                         Rational(trinomial(ell + 1, 2 * j - k, k - j));
            if (k % 2 == 1) c = -c;
            if (c != 0) b += c * hermite(2 * j - k);
        }
        rc->B.push_back(std::move(b));
    }
    slot = std::move(rc);
    return *slot;
}

ExactPoly recurrence_residual(const Partition& lambda, int n) {
    const int ell = static_cast<int>(lambda.length());
    const RecCoeffs& rc = rec_coeffs(ell, n);
    ExactPoly sum;
    for (int k = 0; k <= 2 * ell + 2; ++k) {
        if (rc.B[static_cast<std::size_t>(k)].is_zero()) continue;
        sum += rc.B[static_cast<std::size_t>(k)] * wronskian_term(lambda, n + k);
    }
    return sum;
}

Report verify_recurrence(const Partition& lambda, int nmax) {
    Report rep("recurrence " + lambda.to_string());
    const int ell = static_cast<int>(lambda.length());
    for (int n = -ell - 1; n <= nmax; ++n) {
        const ExactPoly r = recurrence_residual(lambda, n);
        rep.check(r.is_zero(), "sum_k B_k H_{lambda,n+k} = 0", "n=" + std::to_string(n), [&] { return r.to_string(); });
    }
    return rep;
}

std::vector<ExactPoly> generate_via_recurrence(const Partition& lambda, int N) {
    const int ell = static_cast<int>(lambda.length());
    if (N < ell + 1)
        throw std::invalid_argument("generate_via_recurrence needs N >= l+1 = " + std::to_string(ell + 1));
    std::vector<ExactPoly> h;
    for (int m = 0; m <= ell; ++m) h.push_back(wronskian_term(lambda, m));
    auto at = [&](int m) -> ExactPoly { return m < 0 ? ExactPoly() : h[static_cast<std::size_t>(m)]; };
    // The top coefficient is 2^-(l+1) H_0, so solving multiplies by -2^(l+1).
    const Rational top_inverse = -Rational(Integer(1) << (ell + 1));
    for (int t = ell + 1; t <= N; ++t) {
        const int n = t - 2 * ell - 2;
        const RecCoeffs& rc = rec_coeffs(ell, n);
        ExactPoly sum;
        for (int k = 0; k < 2 * ell + 2; ++k) {
            const ExactPoly& b = rc.B[static_cast<std::size_t>(k)];
            if (!b.is_zero()) sum += b * at(n + k);
        }
        h.push_back(top_inverse * sum);
    }
    return h;
}

Rational induction_coeff(int ell, int n, int j, int m) {
    if (j < 0 || m < 0) return 0;
    Rational c = pow2_inverse(j) * pochhammer(Rational(n + 2 * j - m + 1), ell - j) * Rational(trinomial(ell, m, j - m));
    return m % 2 == 0 ? c : Rational(-c);
}

bool wronskian_of_wronskians_holds(const std::vector<ExactPoly>& fs, const ExactPoly& g, const ExactPoly& h) {
    std::vector<ExactPoly> fg = fs, fh = fs, fgh = fs;
    fg.push_back(g);
    fh.push_back(h);
    fgh.push_back(g);
    fgh.push_back(h);
    const std::vector<ExactPoly> outer{wronskian(fg), wronskian(fh)};
    return wronskian(outer) == wronskian(fs) * wronskian(fgh);
}

Report verify_induction_identity(const Partition& lambda, int nmax) {
    Report rep("induction " + lambda.to_string());
    const int ell = static_cast<int>(lambda.length());
    const ExactPoly hl = h_lambda(lambda);
    const Rational lfact(factorial(ell));
    for (int n = 0; n <= nmax; ++n) {
        ExactPoly lhs;
        for (int j = 0; j <= ell; ++j)
            for (int m = 0; m <= j; ++m) {
                const Rational c = induction_coeff(ell, n, j, m);
                if (c != 0) lhs += c * (hermite(m) * wronskian_term(lambda, n + 2 * j - m));
            }
        const ExactPoly rhs = lfact * (hermite(n + ell) * hl);
        rep.check(lhs == rhs, "sum A H_m H_{lambda,n+2j-m} = l! H_{n+l} H_lambda", "n=" + std::to_string(n),
                  [&] { return (lhs - rhs).to_string(); });
    }

    std::vector<ExactPoly> fs;
    const auto gaps = gap_sequence(lambda);
    for (int k : gaps.values()) fs.push_back(hermite(k));
    const int first_free = gaps.size() ? gaps.values().back() + 1 : 0;
    for (int a = first_free; a < first_free + 2; ++a) {
        const int b = a + 1 + (a - first_free);
        rep.check(wronskian_of_wronskians_holds(fs, hermite(a), hermite(b)), "Wr[Wr[f,g],Wr[f,h]] = Wr[f] Wr[f,g,h]",
                  "g=H_" + std::to_string(a) + ",h=H_" + std::to_string(b), [] { return std::string("mismatch"); });
    }
    return rep;
}

Report verify_coefficient_identity(int ell_max, int n_lo, int n_hi) {
    Report rep("induction coefficients");
    for (int ell = 0; ell <= ell_max; ++ell)
        for (int n = n_lo; n <= n_hi; ++n)
            for (int j = 0; j <= ell + 1; ++j)
                for (int m = 0; m <= j; ++m) {
                    const Rational lhs = Rational(2 * (ell + n - 1)) * induction_coeff(ell, n - 2, j, m) +
                                         induction_coeff(ell, n, j - 1, m) - induction_coeff(ell, n - 1, j - 1, m - 1) -
                                         Rational(2 * (m + 1)) * induction_coeff(ell, n - 1, j, m + 1);
                    const Rational rhs = 2 * induction_coeff(ell + 1, n - 2, j, m);
                    rep.check(lhs == rhs, "A^l -> A^(l+1)",
                              "l=" + std::to_string(ell) + ",n=" + std::to_string(n) + ",j=" + std::to_string(j) +
                                  ",m=" + std::to_string(m),
                              [&] { return format_rational(lhs) + " != " + format_rational(rhs); });
                }
    return rep;
}

}  // namespace xherm
