#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "xherm/hermite.hpp"
#include "xherm/json.hpp"

using xherm::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "xh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = xh::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly emits the Wronskian coefficients") {
    const Result r = run({"poly", "--partition", "1,1", "--j", "3"});
    REQUIRE(r.code == xh::kPass);
    const Json j = Json::parse(r.out);
    CHECK(j["coeffs"] == Json::array({"0", "192", "0", "128"}));
    CHECK(j["degree"] == 3);
    CHECK(j["parity"] == "odd");
    CHECK(j["partition"] == Json::array({1, 1}));
}

TEST_CASE("poly for an X-Hermite polynomial") {
    const Result r = run({"poly", "--partition", "1,3", "--j", "0", "--xhermite", "--json"});
    REQUIRE(r.code == xh::kPass);
    const Json j = Json::parse(r.out);
    CHECK(j["degree"] == 4);
    CHECK(j["parity"] == "even");
    CHECK(j["excluded"] == Json::array({1, 2, 5, 6}));
    CHECK(xherm::poly_from_json(j) == xherm::x_hermite(xherm::XHermiteFamily(xherm::Partition{1, 3}), 0));
}

TEST_CASE("poly csv") {
    const Result r = run({"poly", "--partition", "1,1", "--j", "0", "--csv"});
    REQUIRE(r.code == xh::kPass);
    CHECK(r.out == "power,coefficient\n0,16\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"poly", "--partition", "2,1"}).code == xh::kUsageError);
    CHECK(run({"poly", "--partition", "1,1", "--j", "1"}).code == xh::kUsageError);
    CHECK(run({"poly", "--partition", "1", "--j", "2", "--xhermite"}).code == xh::kUsageError);
    CHECK(run({"frobnicate"}).code == xh::kUsageError);
    CHECK(run({"gram", "--partition", "1", "--tol", "0"}).code == xh::kUsageError);
    CHECK(run({"potential", "--partition", "1", "--range", "2:1"}).code == xh::kUsageError);
    CHECK(run({"gram", "--partition", "1", "--norm", "other"}).code == xh::kUsageError);
}

TEST_CASE("verify passes for (1,3)") {
    const Result r = run({"verify", "--partition", "1,3", "--jmax", "10"});
    CHECK(r.code == xh::kPass);
    const Json j = Json::parse(r.out);
    CHECK(j["partition"] == Json::array({1, 3}));
    CHECK(j["failures"].empty());
    CHECK(j["checks"].get<int>() > 0);
    CHECK_FALSE(j.contains("wall_time_s"));
    CHECK(r.err.find("failures") != std::string::npos);
}

TEST_CASE("timing adds wall time") {
    const Json j = Json::parse(run({"verify", "--partition", "1", "--jmax", "4", "--timing"}).out);
    CHECK(j.contains("wall_time_s"));
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"sweep", "--max-weight", "4", "--jmax", "6", "--threads", "4"};
    const Result a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    const std::vector<std::string> g{"gram", "--partition", "2", "--jmax", "5", "--norm", "wronskian"};
    CHECK(run(g).out == run(g).out);
}

TEST_CASE("potential accepts a negative range as a separate argument") {
    const Result r = run({"potential", "--partition", "1", "--samples", "5", "--range", "-1:1", "--csv"});
    REQUIRE(r.code == xh::kPass);
    CHECK(r.out == "x,U(x)\n-1,3\n-0.5,8.25\n0,nan\n0.5,8.25\n1,3\n");
    CHECK(run({"potential", "--partition", "1,1", "--range", "-6:6"}).code == xh::kPass);
}

TEST_CASE("potential regularity and residual checks") {
    const Result r = run({"potential", "--partition", "1,1", "--check-regularity", "--max-weight", "5", "--residual-k", "0",
                          "3", "--indicial"});
    CHECK(r.code == xh::kPass);
    const Json j = Json::parse(r.out);
    CHECK(j["failures"].empty());
}

TEST_CASE("subspace reports") {
    Result r = run({"subspace", "--partition", "1,1"});
    CHECK(r.code == xh::kPass);
    Json j = Json::parse(r.out);
    CHECK(j["codimension"]["by_degrees"] == 2);

    r = run({"subspace", "--partition", "1,1", "--member", "16"});
    CHECK(r.code == xh::kPass);
    CHECK(Json::parse(r.out)["member"]["member"] == true);
    r = run({"subspace", "--partition", "1,1", "--member", "0,1"});
    CHECK(Json::parse(r.out)["member"]["member"] == false);

    r = run({"subspace", "--partition", "1,2", "--constraints"});
    CHECK(r.code == xh::kVerificationFailure);
    j = Json::parse(r.out);
    CHECK(j["constraints"]["error"] == "NonSimpleRoots");
}

TEST_CASE("gram and recur") {
    Result r = run({"gram", "--partition", "1", "--jmax", "4", "--norm", "wronskian", "--csv"});
    CHECK(r.code == xh::kPass);
    CHECK(r.out.rfind("i,j,value,abs_error,expected\n", 0) == 0);

    r = run({"recur", "--partition", "1,3", "--nmax", "6"});
    CHECK(r.code == xh::kPass);
    r = run({"recur", "--partition", "1", "--generate", "5", "--compare-wronskian"});
    CHECK(r.code == xh::kPass);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "xh_cli_test_output.json";
    const Result r = run({"poly", "--partition", "1", "--j", "0", "-o", path.string()});
    REQUIRE(r.code == xh::kPass);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(Json::parse(in)["coeffs"] == Json::array({"-2"}));
    std::filesystem::remove(path);
}

TEST_CASE("JSON schemas") {
    using namespace xherm;
    const Json p = Json::parse(R"({"coeffs":["4","0","8"]})");
    CHECK(poly_from_json(p) == ExactPoly{4, 0, 8});
    CHECK(to_json(ExactPoly{Rational(1, 2), 0, -3}).dump() == R"({"coeffs":["1/2","0","-3"]})");
    CHECK(to_json(ExactPoly{}).dump() == R"({"coeffs":[]})");
    CHECK(partition_from_json(Json::parse(R"({"partition":[1,1,3,3]})")) == Partition{1, 1, 3, 3});
    CHECK(partition_from_json(Json::parse("[0,2]")) == Partition{0, 2});
    CHECK(to_json(Partition{1, 3}).dump() == "[1,3]");
    CHECK_THROWS(partition_from_json(Json::parse("[3,1]")));
}
