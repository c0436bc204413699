#include "xherm/numeric.hpp"

#include <Eigen/Dense>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <sstream>

namespace xherm {

unsigned working_digits() {
    if (const char* env = std::getenv("XH_PRECISION")) {
        unsigned v = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, v);
        if (ec == std::errc() && ptr == end && v >= 16 && v <= 2000) return v;
    }
    return 30;
}

ScopedPrecision::ScopedPrecision(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
    Real num(q.get_num_mpz_t());
    Real den(q.get_den_mpz_t());
    return num / den;
}

std::string format_real(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

Real Complex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

RealPoly::RealPoly(const ExactPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c_.push_back(to_real(q));
}

Real RealPoly::operator()(const Real& x) const {
    Real acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex RealPoly::operator()(const Complex& z) const {
    Complex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + Complex(*it);
    return acc;
}

std::vector<std::complex<double>> companion_roots(const ExactPoly& p) {
    if (p.is_constant()) return {};
    const std::size_t n = p.degree().value();
    const ExactPoly m = p.monic();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -m.coeff(i).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

std::vector<Complex> refine_roots(const ExactPoly& p) {
    const auto seeds = companion_roots(p);
    const std::size_t n = seeds.size();
    std::vector<Complex> z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Nudge seeds off each other and off the real axis so that exact
        // coincidences in double precision do not stall the iteration.
        const double jitter = 1e-9 * static_cast<double>(i + 1);
        z.emplace_back(Real(seeds[i].real() + jitter), Real(seeds[i].imag() + jitter));
    }
    const RealPoly f(p);
    const RealPoly df(p.derivative());
    const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) + 4);

    for (int iter = 0; iter < 500; ++iter) {
        Real worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex fz = f(z[i]);
            if (fz.re == 0 && fz.im == 0) continue;
            const Complex ratio = fz / df(z[i]);
            Complex sum;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum = sum + Complex(1) / (z[i] - z[j]);
            const Complex w = ratio / (Complex(1) - ratio * sum);
            z[i] = z[i] - w;
            const Real scale = std::max(Real(1), z[i].abs());
            worst = std::max(worst, Real(w.abs() / scale));
        }
        if (worst < tol) return z;
    }
    throw std::runtime_error("root refinement did not converge");
}

}  // namespace xherm
