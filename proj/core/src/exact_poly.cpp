#include "xherm/exact_poly.hpp"

#include <algorithm>
#include <sstream>

namespace xherm {

namespace {

// Integer polynomials, used for the fraction-free determinant.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// a / d where d is known to divide a exactly in Z[x].
ZPoly zdivexact(ZPoly a, const ZPoly& d) {
    if (d.empty()) throw std::domain_error("division by the zero polynomial");
    if (a.empty()) return {};
    if (a.size() < d.size()) throw std::logic_error("inexact division in fraction-free elimination");
    const std::size_t dd = d.size() - 1;
    ZPoly q(a.size() - dd);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c;
        mpz_divexact(c.get_mpz_t(), a[k + dd].get_mpz_t(), d.back().get_mpz_t());
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) a[k + i] -= c * d[i];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("inexact division in fraction-free elimination");
    return q;
}

int sign_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int sign_at(const ExactPoly& p, const Rational& x) { return sgn(p.eval(x)); }

int sign_at_infinity(const ExactPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (!positive && p.degree().value() % 2 == 1) s = -s;
    return s;
}

}  // namespace

DivisionError::DivisionError(const std::string& what, std::vector<Rational> remainder)
    : std::runtime_error(what), remainder_(std::move(remainder)) {}

ExactPoly DivisionError::remainder() const { return ExactPoly(remainder_); }

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

ExactPoly::ExactPoly(std::initializer_list<Rational> coeffs) : ExactPoly(std::vector<Rational>(coeffs)) {}

ExactPoly ExactPoly::constant(const Rational& c) { return ExactPoly(std::vector<Rational>{c}); }

ExactPoly ExactPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return ExactPoly(std::move(v));
}

void ExactPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational ExactPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& ExactPoly::leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    ExactPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) { return *this = *this * o; }

ExactPoly& ExactPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

std::pair<ExactPoly, ExactPoly> ExactPoly::divmod(const ExactPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (c_.size() < d.c_.size()) return {ExactPoly(), *this};
    std::vector<Rational> r = c_;
    const std::size_t dd = d.c_.size() - 1;
    std::vector<Rational> q(r.size() - dd);
    const Rational inv = 1 / d.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = r[k + dd] * inv;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) r[k + i] -= c * d.c_[i];
    }
    r.resize(dd);
    return {ExactPoly(std::move(q)), ExactPoly(std::move(r))};
}

ExactPoly ExactPoly::exact_divide(const ExactPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DivisionError("exact division left a nonzero remainder: " + r.to_string(), r.coeffs());
    return q;
}

bool ExactPoly::divisible_by(const ExactPoly& d) const { return divmod(d).second.is_zero(); }

ExactPoly ExactPoly::derivative(unsigned order) const {
    ExactPoly r = *this;
    for (unsigned o = 0; o < order && !r.c_.empty(); ++o) {
        for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i - 1] = r.c_[i] * static_cast<unsigned long>(i);
        r.c_.pop_back();
        r.trim();
    }
    return r;
}

ExactPoly ExactPoly::reflect() const {
    ExactPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

ExactPoly ExactPoly::monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

ExactPoly ExactPoly::primitive() const {
    if (is_zero()) return {};
    Integer den = 1, num = 0;
    for (const auto& q : c_) {
        if (q == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    }
    return *this * Rational(den, num);
}

Rational ExactPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double ExactPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string ExactPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& q = c_[k];
        if (q == 0) continue;
        Rational mag = abs(q);
        if (first) {
            if (q < 0) os << "-";
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag.get_str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

ExactPoly gcd(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        ExactPoly r = x.divmod(y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExactPoly determinant(std::vector<std::vector<ExactPoly>> rows) {
    const std::size_t n = rows.size();
    if (n == 0) return ExactPoly::constant(1);
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");

    // Lift each column to integer coefficients.
    Rational scale = 1;
    std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        Integer den = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& q : rows[i][j].coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        scale /= den;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = rows[i][j].coeffs();
            ZPoly z(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) {
                Rational v = c[k] * den;
                z[k] = v.get_num();
            }
            m[i][j] = std::move(z);
        }
    }

    int sign = 1;
    ZPoly prev{Integer(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].empty()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].empty()) ++p;
            if (p == n) return {};
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ZPoly t = zsub(zmul(m[k][k], m[i][j]), zmul(m[i][k], m[k][j]));
                m[i][j] = zdivexact(std::move(t), prev);
            }
            m[i][k].clear();
        }
        prev = m[k][k];
    }

    const ZPoly& d = m[n - 1][n - 1];
    std::vector<Rational> out(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) out[k] = Rational(d[k]) * scale * sign;
    return ExactPoly(std::move(out));
}

ExactPoly wronskian(std::span<const ExactPoly> fs) {
    const std::size_t n = fs.size();
    if (n == 0) return ExactPoly::constant(1);
    std::vector<std::vector<ExactPoly>> rows(n, std::vector<ExactPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        ExactPoly d = fs[j];
        for (std::size_t i = 0; i < n; ++i) {
            rows[i][j] = d;
            d = d.derivative();
        }
    }
    return determinant(std::move(rows));
}

std::vector<ExactPoly> sturm_sequence(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    std::vector<ExactPoly> seq{p.primitive()};
    ExactPoly d = p.derivative().primitive();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    for (;;) {
        ExactPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back((-r).primitive());
    }
    return seq;
}

std::size_t sturm_real_root_count(const ExactPoly& p) {
    auto seq = sturm_sequence(p);
    std::vector<int> lo, hi;
    for (const auto& s : seq) {
        lo.push_back(sign_at_infinity(s, false));
        hi.push_back(sign_at_infinity(s, true));
    }
    return static_cast<std::size_t>(sign_variations(lo) - sign_variations(hi));
}

std::size_t sturm_root_count_in(const std::vector<ExactPoly>& seq, const Rational& a, const Rational& b) {
    std::vector<int> sa, sb;
    for (const auto& s : seq) {
        sa.push_back(sign_at(s, a));
        sb.push_back(sign_at(s, b));
    }
    return static_cast<std::size_t>(sign_variations(sa) - sign_variations(sb));
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const ExactPoly& poly, const Rational& width) {
    if (poly.is_constant()) return {};
    // Distinct roots only; split points are nudged off roots so that no root
    // ever sits on an interval endpoint.
    const ExactPoly p = poly.exact_divide(gcd(poly, poly.derivative()));
    auto seq = sturm_sequence(p);
    Rational bound = 1;
    for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(abs(c / p.leading())));
    bound += 1;

    std::vector<std::pair<Rational, Rational>> out;
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        std::size_t n = sturm_root_count_in(seq, a, b);
        if (n == 0) continue;
        if (n == 1 && b - a < width) {
            out.emplace_back(a, b);
            continue;
        }
        Rational mid = (a + b) / 2;
        for (int k = 3; p.eval(mid) == 0; ++k) mid = a + (b - a) * Rational(k - 1, 2 * k);
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;
    ExactPoly f = p.monic();
    ExactPoly fp = f.derivative();
    ExactPoly a0 = gcd(f, fp);
    ExactPoly b = f.exact_divide(a0);
    ExactPoly c = fp.exact_divide(a0);
    ExactPoly d = c - b.derivative();
    for (unsigned i = 1; !b.is_constant(); ++i) {
        ExactPoly a = gcd(b, d);
        b = b.exact_divide(a);
        c = d.exact_divide(a);
        d = c - b.derivative();
        if (!a.is_constant()) out.push_back({a.monic(), i});
    }
    return out;
}

bool is_squarefree(const ExactPoly& p) { return gcd(p, p.derivative()).is_constant(); }

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("invalid rational literal: " + s);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("invalid rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

}  // namespace xherm
