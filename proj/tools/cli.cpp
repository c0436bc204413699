#include "cli.hpp"

#include "xherm/json.hpp"
#include "xherm/operators.hpp"
#include "xherm/orthogonality.hpp"
#include "xherm/recurrence.hpp"
#include "xherm/spectral.hpp"
#include "xherm/subspace.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <boost/math/constants/constants.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace xh {

using namespace xherm;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    Json json;
    std::string csv;  // used instead of json when non-empty
    int code = kPass;
};

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt15(const Real& x) { return fmt15(rounded(x)); }

Partition partition_arg(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid partition '") + text + "': " + e.what());
    }
}

Real positive_real(const std::string& text, const char* what) {
    Real v;
    try {
        std::size_t used = 0;
        (void)std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        v = Real(text);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
    if (!(v > 0)) throw UsageError(std::string(what) + " must be positive");
    return v;
}

Json complex_json(const Complex& z) { return Json::array({rounded(z.re), rounded(z.im)}); }

std::string parity_name(const ExactPoly& p) {
    if (p.is_zero()) return "zero";
    const ExactPoly r = p.reflect();
    if (r == p) return "even";
    if (r == -p) return "odd";
    return "none";
}

// Adds per-report summaries, the total check count and all failures.
int attach_reports(Json& j, const std::vector<Report>& reports) {
    Json reps = Json::array();
    Json failures = Json::array();
    std::size_t checks = 0;
    for (const auto& r : reports) {
        reps.push_back(Json{{"name", r.name}, {"checks", r.checks}, {"failures", r.failures.size()}});
        checks += r.checks;
        for (const auto& f : r.failures)
            failures.push_back(Json{{"report", r.name}, {"check", f.check}, {"where", f.where}, {"detail", f.detail}});
    }
    j["reports"] = std::move(reps);
    j["checks"] = checks;
    const bool ok = failures.empty();
    j["failures"] = std::move(failures);
    return ok ? kPass : kVerificationFailure;
}

// ---- poly -------------------------------------------------------------

struct PolyArgs {
    std::string partition;
    std::optional<int> j;
    bool xhermite = false;
};

Output cmd_poly(const PolyArgs& a, bool csv) {
    const Partition lambda = partition_arg(a.partition);
    ExactPoly p;
    Json excluded = Json::array();
    if (a.xhermite) {
        const XHermiteFamily fam(lambda);
        for (int k : fam.excluded()) excluded.push_back(k);
        if (a.j) {
            try {
                p = x_hermite(fam, *a.j);
            } catch (const ExcludedDegree& e) {
                throw UsageError(e.what());
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
        } else {
            p = fam.h_lambda2();
        }
    } else {
        const auto gaps = gap_sequence(lambda);
        for (int k : gaps.values()) excluded.push_back(k);
        if (a.j) {
            auto t = h_lambda_j(lambda, *a.j);
            if (t.tag != WronskianTag::Regular)
                throw UsageError("j = " + std::to_string(*a.j) + " is negative or a gap of " + lambda.to_string());
            p = std::move(t.value);
        } else {
            p = h_lambda(lambda);
        }
    }

    Output o;
    if (csv) {
        std::string s = "power,coefficient\n";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += std::to_string(i) + "," + format_rational(p.coeffs()[i]) + "\n";
        o.csv = s;
        return o;
    }
    o.json = Json{{"command", "poly"},
                  {"partition", to_json(lambda)},
                  {"family", a.xhermite ? "xhermite" : "wronskian"},
                  {"j", a.j ? Json(*a.j) : Json(nullptr)},
                  {"degree", p.is_zero() ? Json(nullptr) : Json(p.degree().value())},
                  {"parity", parity_name(p)},
                  {"excluded", std::move(excluded)},
                  {"coeffs", to_json(p)["coeffs"]}};
    return o;
}

// ---- potential --------------------------------------------------------

struct PotentialArgs {
    std::string partition;
    std::size_t samples = 401;
    std::string range = "-6:6";
    bool sampled = false;
    bool check_regularity = false;
    int max_weight = 8;
    std::vector<int> residual_k;
    bool indicial = false;
};

std::pair<Real, Real> parse_range(const std::string& text) {
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) throw UsageError("range must look like lo:hi, got '" + text + "'");
    Real lo, hi;
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        (void)std::stod(a, &u1);
        (void)std::stod(b, &u2);
        if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(text);
        lo = Real(a);
        hi = Real(b);
    } catch (const std::exception&) {
        throw UsageError("invalid range '" + text + "'");
    }
    if (!(lo < hi)) throw UsageError("range must satisfy lo < hi");
    return {lo, hi};
}

Output cmd_potential(const PotentialArgs& a, bool csv) {
    Output o;
    if (a.check_regularity) {
        if (a.max_weight < 0) throw UsageError("max-weight must be non-negative");
        const auto rr = regularity_theorem_check(a.max_weight);
        Json entries = Json::array();
        for (const auto& e : rr.entries)
            entries.push_back(Json{{"partition", to_json(e.lambda)}, {"adler", e.adler}, {"real_roots", e.real_roots}});
        o.json = Json{{"command", "potential"}, {"check", "regularity"}, {"max_weight", a.max_weight}};
        o.json["partitions"] = std::move(entries);
        o.code = attach_reports(o.json, {rr.report});
        return o;
    }

    const Partition lambda = partition_arg(a.partition);
    if (a.samples < 2) throw UsageError("samples must be at least 2");
    const auto [lo, hi] = parse_range(a.range);
    const Potential pot = potential(lambda);
    const ExactPoly h = h_lambda(lambda);

    ScopedPrecision guard(working_digits());
    const RealPoly num(pot.U.num()), den(pot.U.den());
    const auto xs = sample_grid(a.samples, lo, hi);
    auto value_at = [&](const Real& x) -> std::optional<Real> {
        const Real d = den(x);
        if (d == 0) return std::nullopt;
        return num(x) / d;
    };

    if (csv) {
        std::string s = "x,U(x)\n";
        for (const Real& x : xs) {
            const auto u = value_at(x);
            s += fmt15(x) + "," + (u ? fmt15(*u) : std::string("nan")) + "\n";
        }
        o.csv = s;
        return o;
    }

    o.json = Json{{"command", "potential"},
                  {"partition", to_json(lambda)},
                  {"U", Json{{"num", to_json(pot.U.num())}, {"den", to_json(pot.U.den())}}},
                  {"regular", pot.regular},
                  {"real_roots", sturm_real_root_count(h)}};
    if (a.sampled) {
        Json rows = Json::array();
        for (const Real& x : xs) {
            const auto u = value_at(x);
            rows.push_back(Json::array({rounded(x), u ? Json(rounded(*u)) : Json(nullptr)}));
        }
        o.json["samples"] = std::move(rows);
    }
    std::vector<Report> reports;
    if (!a.residual_k.empty()) {
        Report rep("eigenfunction residual " + lambda.to_string());
        Json res = Json::array();
        for (int k : a.residual_k) {
            try {
                const Real r = eigenfunction_residual(lambda, k);
                res.push_back(Json{{"k", k}, {"residual", rounded(r)}});
                rep.check(r <= Real("1e-10"), "normalized residual <= 1e-10", "k=" + std::to_string(k),
                          [&] { return fmt15(r); });
            } catch (const SingularSample& e) {
                res.push_back(Json{{"k", k}, {"residual", nullptr}, {"error", e.what()}});
                rep.record(false, "sample avoids zeros of H_lambda", "k=" + std::to_string(k), e.what());
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        o.json["residuals"] = std::move(res);
        reports.push_back(std::move(rep));
    }
    if (a.indicial) {
        const auto ind = indicial_check(lambda);
        Json entries = Json::array();
        for (const auto& e : ind.entries) {
            Json row{{"factor", to_json(e.factor)}, {"multiplicity", e.multiplicity}};
            if (e.m >= 0) {
                row["m"] = e.m;
                row["indicial_roots"] = Json::array({e.low.get_str(), e.high.get_str()});
            } else {
                row["m"] = nullptr;
                row["indicial_roots"] = nullptr;
            }
            entries.push_back(std::move(row));
        }
        o.json["indicial"] = std::move(entries);
        reports.push_back(ind.report);
    }
    if (!reports.empty()) o.code = attach_reports(o.json, reports);
    return o;
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
    std::string partition;
    int jmax = 10;
};

Output cmd_verify(const VerifyArgs& a) {
    const Partition lambda = partition_arg(a.partition);
    if (a.jmax < 0) throw UsageError("jmax must be non-negative");
    std::vector<ExactPoly> tests;
    for (int j = 0; j <= a.jmax; ++j) tests.push_back(hermite(j));

    std::vector<Report> reports;
    reports.push_back(verify_eigen(XHermiteFamily(lambda), a.jmax));
    reports.push_back(verify_eigen_general(lambda, a.jmax));
    reports.push_back(verify_intertwining(lambda, tests));
    const auto gaps = gap_sequence(lambda);
    Report fact("factorizations " + lambda.to_string());
    for (int k = 0; k <= a.jmax; ++k)
        if (!gaps.contains(k)) fact.merge(verify_factorizations(lambda, k, tests));
    reports.push_back(std::move(fact));

    Output o;
    o.json = Json{{"command", "verify"}, {"partition", to_json(lambda)}, {"jmax", a.jmax}};
    o.code = attach_reports(o.json, reports);
    return o;
}

// ---- subspace ---------------------------------------------------------

struct SubspaceArgs {
    std::string partition;
    bool codim = false;
    bool constraints = false;
    bool primitivity = false;
    double precision = 1e-40;
    std::string member;
};

Output cmd_subspace(const SubspaceArgs& a) {
    const Partition lambda = partition_arg(a.partition);
    if (!(a.precision > 0)) throw UsageError("precision must be positive");
    const bool all = !a.codim && !a.constraints && !a.primitivity && a.member.empty();
    Output o;
    o.json = Json{{"command", "subspace"}, {"partition", to_json(lambda)}};
    std::vector<Report> reports;

    if (all || a.codim) {
        const std::size_t by_deg = codimension_by_degrees(lambda);
        const std::size_t by_rank = codimension_by_rank(lambda);
        o.json["codimension"] = Json{{"by_degrees", by_deg}, {"by_rank", by_rank}, {"weight", lambda.weight()}};
        Report rep("codimension " + lambda.to_string());
        rep.check(by_deg == by_rank && by_deg == static_cast<std::size_t>(lambda.weight()), "codim = |lambda|", "lambda",
                  [&] { return std::to_string(by_deg) + " / " + std::to_string(by_rank); });
        reports.push_back(std::move(rep));
    }

    if (all || a.constraints) {
        Report rep("root constraints " + lambda.to_string());
        try {
            const auto cs = root_constraints(lambda, a.precision);
            ScopedPrecision guard(constraint_digits(a.precision));
            Json list = Json::array();
            for (const auto& c : cs)
                list.push_back(Json{{"xi", complex_json(c.xi)}, {"r", complex_json(c.r)}, {"h_residual", rounded(c.h_residual)}});
            // Members H_{lambda,j} must satisfy every constraint.
            Real worst = 0;
            const auto gaps = gap_sequence(lambda);
            const int jtop = lambda.last() + static_cast<int>(lambda.length()) + 2;
            for (int j = 0; j <= jtop; ++j) {
                if (gaps.contains(j)) continue;
                const ExactPoly p = h_lambda_j(lambda, j).value;
                for (const auto& c : cs) worst = std::max(worst, constraint_residual(c, p));
            }
            rep.check(worst <= Real(a.precision), "members satisfy p'(xi) = r p(xi)", "j<=" + std::to_string(jtop),
                      [&] { return "max residual " + fmt15(worst); });
            o.json["constraints"] = Json{{"digits", constraint_digits(a.precision)},
                                         {"roots", std::move(list)},
                                         {"max_member_residual", rounded(worst)}};
        } catch (const NonSimpleRoots& e) {
            Json prof = Json::array();
            for (const auto& m : e.profile()) prof.push_back(Json{{"factor", to_json(m.factor)}, {"multiplicity", m.multiplicity}});
            o.json["constraints"] = Json{{"error", "NonSimpleRoots"}, {"profile", std::move(prof)}};
            rep.record(false, "H_lambda squarefree", "lambda", e.what());
        }
        reports.push_back(std::move(rep));
    }

    if (all || a.primitivity) {
        const auto pr = primitivity_check(lambda);
        Json rep_json = Json::array();
        for (const auto& r : pr.repeated)
            rep_json.push_back(Json{{"factor", to_json(r.factor)},
                                    {"multiplicity", r.multiplicity},
                                    {"triangular", r.triangular},
                                    {"m", r.m >= 0 ? Json(r.m) : Json(nullptr)},
                                    {"power_of_x", r.power_of_x}});
        o.json["primitivity"] = Json{{"squarefree", pr.squarefree},
                                     {"repeated", std::move(rep_json)},
                                     {"all_triangular", pr.all_triangular},
                                     {"only_x_repeats", pr.only_x_repeats}};
        Report rep("primitivity " + lambda.to_string());
        rep.record(pr.all_triangular, "repeated multiplicities are triangular", "lambda");
        rep.record(pr.only_x_repeats, "only x may repeat", "lambda");
        reports.push_back(std::move(rep));
    }

    if (!a.member.empty()) {
        std::vector<Rational> c;
        std::stringstream ss(a.member);
        std::string item;
        try {
            while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
        } catch (const std::exception& e) {
            throw UsageError("invalid coefficient list '" + a.member + "': " + e.what());
        }
        const ExactPoly p(std::move(c));
        const ExactPoly rem = membership_remainder(lambda, p);
        o.json["member"] = Json{{"polynomial", to_json(p)}, {"member", rem.is_zero()}, {"remainder", to_json(rem)}};
    }
    o.code = attach_reports(o.json, reports);
    return o;
}

// ---- gram -------------------------------------------------------------

struct GramArgs {
    std::string partition;
    int jmax = 8;
    std::string tol = "1e-10";
    std::string norm = "product";
};

Output cmd_gram(const GramArgs& a, bool csv) {
    const Partition lambda = partition_arg(a.partition);
    if (a.jmax < 0) throw UsageError("jmax must be non-negative");
    const Real tol = positive_real(a.tol, "tolerance");
    const NormConvention conv = a.norm == "wronskian" ? NormConvention::Wronskian : NormConvention::Product;
    const XHermiteFamily fam(lambda);
    const GramMatrix g = gram_matrix(fam, a.jmax, tol, conv);

    ScopedPrecision guard(working_digits());
    const Real sqrt_pi = boost::multiprecision::sqrt(boost::math::constants::pi<Real>());
    Output o;
    o.code = g.report.ok() ? kPass : kVerificationFailure;
    const std::size_t n = g.indices.size();
    if (csv) {
        std::string s = "i,j,value,abs_error,expected\n";
        for (std::size_t a1 = 0; a1 < n; ++a1)
            for (std::size_t b = 0; b < n; ++b) {
                const Real expected = a1 == b ? to_real(g.closed_form[a1]) * sqrt_pi : Real(0);
                s += std::to_string(g.indices[a1]) + "," + std::to_string(g.indices[b]) + "," + fmt15(g.values[a1][b]) +
                     "," + fmt15(g.errors[a1][b]) + "," + fmt15(expected) + "\n";
            }
        o.csv = s;
        return o;
    }
    Json matrix = Json::array(), closed = Json::array();
    for (std::size_t r = 0; r < n; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < n; ++c) row.push_back(rounded(g.values[r][c]));
        matrix.push_back(std::move(row));
        closed.push_back(Json{{"j", g.indices[r]}, {"sqrt_pi_multiple", format_rational(g.closed_form[r])}});
    }
    o.json = Json{{"command", "gram"},
                  {"partition", to_json(lambda)},
                  {"jmax", a.jmax},
                  {"tol", rounded(tol)},
                  {"norm", conv == NormConvention::Wronskian ? "wronskian" : "product"},
                  {"indices", g.indices},
                  {"matrix", std::move(matrix)},
                  {"closed_form", std::move(closed)}};
    attach_reports(o.json, {g.report});
    return o;
}

// ---- recur ------------------------------------------------------------

struct RecurArgs {
    std::string partition;
    int nmax = 10;
    bool verify = false;
    std::optional<int> generate;
    bool compare = false;
    bool induction = false;
    bool coeffs = false;
};

Output cmd_recur(const RecurArgs& a) {
    const Partition lambda = partition_arg(a.partition);
    const int ell = static_cast<int>(lambda.length());
    if (a.nmax < -ell - 1) throw UsageError("nmax must be at least -l-1");
    const bool any = a.verify || a.generate || a.induction || a.coeffs;
    Output o;
    o.json = Json{{"command", "recur"}, {"partition", to_json(lambda)}, {"ell", ell}, {"nmax", a.nmax}};
    std::vector<Report> reports;
    if (!any || a.verify) reports.push_back(verify_recurrence(lambda, a.nmax));
    if (a.coeffs) {
        Json rows = Json::array();
        for (int n = -ell - 1; n <= a.nmax; ++n) {
            Json bs = Json::array();
            for (const auto& b : rec_coeffs(ell, n).B) bs.push_back(to_json(b));
            rows.push_back(Json{{"n", n}, {"B", std::move(bs)}});
        }
        o.json["coefficients"] = std::move(rows);
    }
    if (a.generate) {
        if (*a.generate < ell + 1) throw UsageError("--generate needs N >= l+1 = " + std::to_string(ell + 1));
        const auto gen = generate_via_recurrence(lambda, *a.generate);
        Json polys = Json::array();
        for (const auto& p : gen) polys.push_back(to_json(p));
        o.json["generated"] = std::move(polys);
        if (a.compare) {
            Report rep("recurrence vs wronskian " + lambda.to_string());
            for (int n = 0; n <= *a.generate; ++n) {
                const ExactPoly direct = h_lambda_j(lambda, n).value;
                rep.check(gen[static_cast<std::size_t>(n)] == direct, "generated == direct", "n=" + std::to_string(n),
                          [&] { return (gen[static_cast<std::size_t>(n)] - direct).to_string(); });
            }
            reports.push_back(std::move(rep));
        }
    }
    if (a.induction) reports.push_back(verify_induction_identity(lambda, std::max(0, a.nmax)));
    o.code = attach_reports(o.json, reports);
    return o;
}

// ---- sweep ------------------------------------------------------------

struct SweepArgs {
    int max_weight = 6;
    int jmax = 12;
    int nmax = 10;
    int leading_zeros = 0;
    unsigned threads = 0;
};

Output cmd_sweep(const SweepArgs& a) {
    if (a.max_weight < 0 || a.jmax < 0 || a.leading_zeros < 0) throw UsageError("sweep bounds must be non-negative");
    const auto parts = enumerate_partitions(a.max_weight, a.leading_zeros);
    const std::vector<std::string> names{"degree-parity", "eigen-general", "krein-adler",
                                         "codimension",   "membership",    "recurrence"};
    std::vector<std::vector<Report>> per(parts.size());

    auto work = [&](const Partition& lambda) {
        std::vector<Report> r(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) r[i].name = names[i];
        r[0].merge(verify_degree_parity(lambda, a.jmax, false));
        r[1].merge(verify_eigen_general(lambda, a.jmax));
        const bool adler = is_adler(lambda);
        const std::size_t roots = sturm_real_root_count(h_lambda(lambda));
        r[2].record(adler == (roots == 0), "is_adler == (no real zeros)", lambda.to_string());
        const std::size_t by_deg = codimension_by_degrees(lambda), by_rank = codimension_by_rank(lambda);
        r[3].check(by_deg == by_rank && by_deg == static_cast<std::size_t>(lambda.weight()), "codim = |lambda|",
                   lambda.to_string(), [&] { return std::to_string(by_deg) + " / " + std::to_string(by_rank); });
        for (int j = 0; j <= a.jmax; ++j) {
            auto t = h_lambda_j(lambda, j);
            if (t.tag != WronskianTag::Regular) continue;
            r[4].record(membership(lambda, t.value), "H_{lambda,j} in U_lambda", lambda.to_string() + " j=" + std::to_string(j));
        }
        Report rec = verify_recurrence(lambda, a.nmax);
        for (auto& f : rec.failures) f.where = lambda.to_string() + " " + f.where;
        r[5].merge(rec);
        const int ell = static_cast<int>(lambda.length());
        if (a.nmax >= ell + 1) {
            const auto gen = generate_via_recurrence(lambda, a.nmax);
            for (int n = 0; n <= a.nmax; ++n)
                r[5].record(gen[static_cast<std::size_t>(n)] == h_lambda_j(lambda, n).value, "generated == direct",
                            lambda.to_string() + " n=" + std::to_string(n));
        }
        return r;
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = std::min<unsigned>(a.threads ? a.threads : hw, static_cast<unsigned>(std::max<std::size_t>(1, parts.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i; (i = next++) < parts.size();) per[i] = work(parts[i]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Report> merged(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) merged[i].name = names[i];
    for (const auto& r : per)
        for (std::size_t i = 0; i < names.size(); ++i) merged[i].merge(r[i]);

    Output o;
    o.json = Json{{"command", "sweep"},
                  {"max_weight", a.max_weight},
                  {"leading_zeros", a.leading_zeros},
                  {"jmax", a.jmax},
                  {"nmax", a.nmax},
                  {"partitions", parts.size()}};
    o.code = attach_reports(o.json, merged);
    return o;
}

// CLI11 reads "--range -6:6" as two options; glue such values to their flag.
std::vector<std::string> normalize_args(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string s = argv[i];
        if (s == "--range" && i + 1 < argc && argv[i + 1][0] == '-') {
            args.push_back(s + "=" + argv[++i]);
            continue;
        }
        args.push_back(std::move(s));
    }
    return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"xh: exceptional Hermite polynomials, exact constructions and verification sweeps"};
    app.name("xh");
    app.require_subcommand(1);

    bool json_flag = false, csv_flag = false, timing = false;
    std::string output;
    auto add_common = [&](CLI::App* sub, bool has_csv) {
        auto* j = sub->add_flag("--json", json_flag, "JSON output (default)");
        if (has_csv) sub->add_flag("--csv", csv_flag, "CSV output")->excludes(j);
        sub->add_flag("--timing", timing, "Include wall time in the JSON report");
        sub->add_option("-o,--output", output, "Write to this file instead of stdout");
    };

    PolyArgs poly;
    auto* s_poly = app.add_subcommand("poly", "Wronskian H_{lambda,j} or X-Hermite polynomial");
    s_poly->add_option("--partition", poly.partition, "Comma-separated weakly increasing parts");
    s_poly->add_option("--j", poly.j, "Appended Hermite index");
    s_poly->add_flag("--xhermite", poly.xhermite, "Use the doubled family H^{(lambda)}_j");
    add_common(s_poly, true);

    PotentialArgs pot;
    auto* s_pot = app.add_subcommand("potential", "Rational extension U_lambda and its checks");
    s_pot->add_option("--partition", pot.partition, "Comma-separated weakly increasing parts");
    auto* o_samples = s_pot->add_option("--samples", pot.samples, "Number of sample points");
    auto* o_range = s_pot->add_option("--range", pot.range, "Sample interval lo:hi");
    s_pot->add_flag("--check-regularity", pot.check_regularity, "Compare is_adler with real zero counts");
    s_pot->add_option("--max-weight", pot.max_weight, "Weight bound for --check-regularity");
    s_pot->add_option("--residual-k", pot.residual_k, "Levels k for the Schroedinger residual");
    s_pot->add_flag("--indicial", pot.indicial, "Indicial roots at repeated zeros");
    add_common(s_pot, true);

    VerifyArgs ver;
    auto* s_ver = app.add_subcommand("verify", "Eigen, intertwining and factorization identities");
    s_ver->add_option("--partition", ver.partition, "Comma-separated weakly increasing parts");
    s_ver->add_option("--jmax", ver.jmax, "Largest degree index checked");
    add_common(s_ver, false);

    SubspaceArgs sub;
    auto* s_sub = app.add_subcommand("subspace", "Exceptional subspace U_lambda");
    s_sub->add_option("--partition", sub.partition, "Comma-separated weakly increasing parts");
    s_sub->add_flag("--codim", sub.codim, "Codimension by degree gaps and by rank");
    s_sub->add_flag("--constraints", sub.constraints, "Root constraints p'(xi) = r p(xi)");
    s_sub->add_flag("--primitivity", sub.primitivity, "Repeated zeros of H_lambda");
    s_sub->add_option("--precision", sub.precision, "Target accuracy of the root constraints");
    s_sub->add_option("--member", sub.member, "Test membership of the polynomial with these ascending coefficients");
    add_common(s_sub, false);

    GramArgs gram;
    auto* s_gram = app.add_subcommand("gram", "Gram matrix of X-Hermite polynomials");
    s_gram->add_option("--partition", gram.partition, "Comma-separated weakly increasing parts");
    s_gram->add_option("--jmax", gram.jmax, "Largest degree index");
    s_gram->add_option("--tol", gram.tol, "Absolute tolerance (relative on the diagonal)");
    s_gram->add_option("--norm", gram.norm, "Closed form for the diagonal: product or wronskian")
        ->check(CLI::IsMember({"product", "wronskian"}));
    add_common(s_gram, true);

    RecurArgs rec;
    auto* s_rec = app.add_subcommand("recur", "(2l+3)-term recurrence");
    s_rec->add_option("--partition", rec.partition, "Comma-separated weakly increasing parts");
    s_rec->add_option("--nmax", rec.nmax, "Largest n checked");
    s_rec->add_flag("--verify", rec.verify, "Exact residual of every relation");
    s_rec->add_option("--generate", rec.generate, "Generate H_{lambda,0..N} by the recurrence");
    s_rec->add_flag("--compare-wronskian", rec.compare, "Compare generated polynomials with direct Wronskians");
    s_rec->add_flag("--induction", rec.induction, "Induction and Wronskian-of-Wronskians identities");
    s_rec->add_flag("--coeffs", rec.coeffs, "Emit the coefficients B_{n,k}");
    add_common(s_rec, false);

    SweepArgs sw;
    auto* s_sw = app.add_subcommand("sweep", "Exhaustive battery over all partitions of bounded weight");
    s_sw->add_option("--max-weight", sw.max_weight, "Largest |lambda|");
    s_sw->add_option("--jmax", sw.jmax, "Largest appended index");
    s_sw->add_option("--nmax", sw.nmax, "Largest recurrence index");
    s_sw->add_option("--leading-zeros", sw.leading_zeros, "Also prefix up to this many zero parts");
    s_sw->add_option("--threads", sw.threads, "Worker threads (0: hardware concurrency)");
    add_common(s_sw, false);

    std::vector<std::string> args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "xh: " << e.what() << "\n";
        return kUsageError;
    }

    const bool csv = csv_flag;
    const auto start = std::chrono::steady_clock::now();
    Output result;
    std::string name;
    try {
        if (s_poly->parsed()) {
            name = "poly";
            result = cmd_poly(poly, csv);
        } else if (s_pot->parsed()) {
            name = "potential";
            pot.sampled = o_samples->count() > 0 || o_range->count() > 0;
            result = cmd_potential(pot, csv);
        } else if (s_ver->parsed()) {
            name = "verify";
            result = cmd_verify(ver);
        } else if (s_sub->parsed()) {
            name = "subspace";
            result = cmd_subspace(sub);
        } else if (s_gram->parsed()) {
            name = "gram";
            result = cmd_gram(gram, csv);
        } else if (s_rec->parsed()) {
            name = "recur";
            result = cmd_recur(rec);
        } else {
            name = "sweep";
            result = cmd_sweep(sw);
        }
    } catch (const UsageError& e) {
        err << "xh " << name << ": " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "xh " << name << ": " << e.what() << "\n";
        Json j{{"command", name}, {"error", e.what()}};
        out << j.dump(2) << "\n";
        return kVerificationFailure;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (!result.csv.empty()) {
        text = result.csv;
    } else {
        if (timing) result.json["wall_time_s"] = rounded(seconds);
        text = result.json.dump(2) + "\n";
    }
    if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            err << "xh: cannot write " << output << "\n";
            return kUsageError;
        }
        f << text;
    } else {
        out << text;
    }
    if (result.json.contains("checks"))
        err << "xh " << name << ": " << result.json["checks"].get<std::size_t>() << " checks, "
            << result.json["failures"].size() << " failures, " << fmt15(seconds) << " s\n";
    return result.code;
}

}  // namespace xh
