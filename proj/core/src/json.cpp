#include "xherm/json.hpp"

#include <cstdio>
#include <cstdlib>

namespace xherm {

Json to_json(const ExactPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(format_rational(c));
    return Json{{"coeffs", std::move(coeffs)}};
}

ExactPoly poly_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.push_back(parse_rational(v.get<std::string>()));
    return ExactPoly(std::move(c));
}

Json to_json(const Partition& lambda) {
    Json a = Json::array();
    for (int p : lambda.parts()) a.push_back(p);
    return a;
}

Partition partition_from_json(const Json& j) {
    if (j.is_object()) return Partition(j.at("partition").get<std::vector<int>>());
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const Report& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(Json{{"check", f.check}, {"where", f.where}, {"detail", f.detail}});
    return Json{{"name", r.name}, {"checks", r.checks}, {"failures", std::move(failures)}};
}

double rounded(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

double rounded(const Real& x) { return std::strtod(format_real(x, 15).c_str(), nullptr); }

}  // namespace xherm
