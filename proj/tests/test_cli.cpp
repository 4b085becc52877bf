#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sugeno/cli.hpp"

#ifndef SUGENO_TEST_DIR
#error "SUGENO_TEST_DIR must point at tests/"
#endif

namespace {

using nlohmann::json;

const std::string kData = std::string(SUGENO_TEST_DIR) + "/data/";
const std::string kGolden = std::string(SUGENO_TEST_DIR) + "/golden/";

struct Outcome {
    int code;
    std::string out;
    json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sugeno::cli::run(args, out, err);
    return {code, out.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), {}};
}

// Structural checks of the published report shapes.
void check_convergence_report(const json& r) {
    REQUIRE(r.is_object());
    CHECK(r.at("mode").is_string());
    const std::string verdict = r.at("verdict");
    CHECK((verdict == "pass" || verdict == "fail" || verdict == "inconclusive"));
    CHECK(r.at("horizon").is_number_unsigned());
    CHECK(r.at("tail_start").is_number_unsigned());
    CHECK(r.at("epsilon").is_number());
    CHECK(r.at("tail_sup").is_number());
    CHECK(r.at("tail_argmax").is_number_unsigned());
    CHECK(r.at("terms").is_array());
    CHECK(r.at("terms").size() == r.at("horizon").get<std::size_t>());
    if (r["mode"] == "in-capacity") {
        for (const auto& t : r.at("thresholds")) {
            CHECK(t.at("t").is_number());
            CHECK(t.at("tail_sup").is_number());
            CHECK(t.at("verdict").is_string());
        }
    }
    if (r["mode"] == "in-mean") CHECK(r.at("semicopula").is_string());
}

void check_error(const Outcome& o, const std::string& code, const std::string& location_prefix) {
    CHECK(o.code == 2);
    const auto j = o.parsed();
    REQUIRE(j.contains("error"));
    CHECK(j["error"].at("code") == code);
    CHECK(j["error"].at("message").is_string());
    const std::string location = j["error"].at("location");
    CHECK(location.rfind(location_prefix, 0) == 0);
}

}  // namespace

TEST_CASE("integrate golden") {
    const auto o = run({"integrate", kData + "uniform4_min.json"});
    CHECK(o.code == 0);
    CHECK(o.out == slurp(kGolden + "integrate_uniform4_min.json"));
    const auto j = o.parsed();
    CHECK(j["value"] == 0.5);
    CHECK(j["argmax_t"] == 0.5);
    CHECK(j["method"] == "exact");
}

TEST_CASE("integrate other capacity kinds") {
    auto j = run({"integrate", kData + "possibility_instance.json"}).parsed();
    CHECK(j["value"].get<double>() == 0.3);
    j = run({"integrate", kData + "distortion_instance.json"}).parsed();
    CHECK(j["value"].get<double>() == 0.25);
    CHECK(j["argmax_t"].get<double>() == 1.0);
}

TEST_CASE("oracle subcommand agrees with the exact value") {
    const auto o = run({"oracle", kData + "uniform4_min.json", "--grid-points", "1001"});
    CHECK(o.code == 0);
    const auto j = o.parsed();
    CHECK(j["method"] == "grid");
    CHECK(j["grid_points"] == 1001);
    CHECK(j["value"].get<double>() <= j["exact_value"].get<double>());
    CHECK(j["exact_value"] == 0.5);
}

TEST_CASE("counterexample theorem 2 golden") {
    const auto o = run({"counterexample", "--theorem", "2", "--rate", "1/n", "--horizon", "50"});
    CHECK(o.code == 0);
    CHECK(o.out == slurp(kGolden + "counterexample_theorem2_1n_50.json"));
    const auto j = o.parsed();
    CHECK(j["reproduced"] == true);
    CHECK(j["audit"]["hypothesis"]["verdict"] == "fail");
    CHECK(j["audit"]["conclusion"]["verdict"] == "pass");
    CHECK(j["audit"]["conclusion"]["mode"] == "in-mean");
    check_convergence_report(j["audit"]["hypothesis"]);
    check_convergence_report(j["audit"]["conclusion"]);
}

TEST_CASE("counterexample theorem 1") {
    const auto o = run({"counterexample", "--theorem", "1", "--horizon", "200", "--n", "6"});
    CHECK(o.code == 0);
    const auto j = o.parsed();
    CHECK(j["audit"]["hypothesis"]["verdict"] == "fail");
    CHECK(j["audit"]["conclusion"]["verdict"] == "pass");
    CHECK(j["audit"]["conclusion"]["mode"] == "in-capacity");
    CHECK(j["params"]["epsilon"] == 0.0);

    // A constant rate is rejected.
    check_error(run({"counterexample", "--theorem", "1", "--rate", "0.3"}), "BadRate", "");
    check_error(run({"counterexample", "--theorem", "3"}), "Usage", "");
}

TEST_CASE("check-capacity exit codes") {
    auto o = run({"check-capacity", kData + "not_normalized.json"});
    CHECK(o.code == 1);
    CHECK(o.out == slurp(kGolden + "check_capacity_not_normalized.json"));
    CHECK(o.parsed()["code"] == "NotNormalized");

    o = run({"check-capacity", kData + "max_not_one.json"});
    CHECK(o.code == 1);
    CHECK(o.parsed()["code"] == "MaxNotOne");

    o = run({"check-capacity", kData + "possibility_instance.json"});
    CHECK(o.code == 0);
    CHECK(o.parsed()["valid"] == true);
    CHECK(o.parsed()["n"] == 3);
}

TEST_CASE("check-semicopula") {
    auto o = run({"check-semicopula", "--builtin", "lukasiewicz", "--resolution", "50"});
    CHECK(o.code == 0);
    CHECK(o.parsed()["verdict"] == "pass");
    o = run({"check-semicopula", kData + "midpoint_table.json", "--resolution", "10"});
    CHECK(o.code == 1);
    CHECK(o.parsed()["counts"]["neutral-right"].get<int>() > 0);
    check_error(run({"check-semicopula"}), "Usage", "");
}

TEST_CASE("converge golden and CSV sidecar") {
    const std::string csv = "converge_explicit_test.csv";
    const auto o = run({"--csv", csv, "converge", kData + "converge_explicit.json"});
    CHECK(o.code == 0);
    CHECK(o.out == slurp(kGolden + "converge_explicit.json"));
    const auto j = o.parsed();
    REQUIRE(j["reports"].size() == 3);
    for (const auto& r : j["reports"]) check_convergence_report(r);
    CHECK(slurp(csv) ==
          "n,strict_value,mean_value,survival_at_t_min\n"
          "1,1,0.5,1\n"
          "2,0.25,0.25,0.25\n"
          "3,0,0,0\n"
          "4,0,0,0\n");
    std::remove(csv.c_str());
}

TEST_CASE("converge with a constant-rate sequence reports the strict failure") {
    const auto o = run({"converge", kData + "converge_rate.json"});
    CHECK(o.code == 1);
    const auto j = o.parsed();
    CHECK(j["reports"][0]["verdict"] == "pass");
    CHECK(j["reports"][1]["verdict"] == "fail");
    CHECK(j["reports"][2]["verdict"] == "pass");
    CHECK(j["sequence"]["horizon"] == 20);
}

TEST_CASE("audit") {
    auto o = run({"audit", kData + "converge_explicit.json"});
    CHECK(o.code == 0);
    CHECK(o.parsed()["consistency_violations"] == 0);

    o = run({"--seed", "42", "audit", "--random", "25", "--n", "5", "--horizon", "30", "--semicopula", "all"});
    CHECK(o.code == 0);
    const auto j = o.parsed();
    CHECK(j["audits"] == 25 * 5);
    CHECK(j["consistency_violations"] == 0);
    CHECK(j["hypothesis_pass"] == 25 * 5);
}

TEST_CASE("fixed seed gives byte-identical output; seed is honoured") {
    const std::vector<std::string> args{"audit", "--random", "30", "--seed", "9", "--semicopula", "all"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    const auto c = run({"audit", "--random", "30", "--seed", "10", "--semicopula", "all"});
    CHECK(c.out != a.out);
    const auto d = run({"converge", kData + "converge_rate.json"});
    CHECK(d.out == run({"converge", kData + "converge_rate.json"}).out);
}

TEST_CASE("input errors exit 2 with a structured error") {
    check_error(run({"integrate", kData + "malformed.json"}), "Parse", kData + "malformed.json");
    check_error(run({"integrate", kData + "missing_capacity.json"}), "BadInstance", "/capacity");
    check_error(run({"integrate", kData + "bad_function_length.json"}), "BadLength", "/function/values");
    check_error(run({"integrate", kData + "does_not_exist.json"}), "Parse", "");
    check_error(run({"integrate", kData + "uniform4_min.json", "--bogus"}), "Usage", "");
    check_error(run({}), "Usage", "");
    check_error(run({"frobnicate"}), "Usage", "");
}

TEST_CASE("numbers round-trip losslessly") {
    const auto o = run({"converge", kData + "converge_rate.json"});
    const auto j = o.parsed();
    const auto& terms = j["reports"][2]["terms"];
    for (std::size_t n = 1; n <= terms.size(); ++n) {
        // prodmax on a constant 1/n residual integrates to S(1/n, 1) = 1/n.
        CHECK(terms[n - 1].get<double>() == 1.0 / static_cast<double>(n));
    }
}
