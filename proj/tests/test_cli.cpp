// End-to-end checks of the bcb executable: exit codes, output shape, and the
// BCB_SEED environment override.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "bcb/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string out_path = "/tmp/bcb_cli_out.txt";
    const std::string cmd = env + " " + std::string(BCB_CLI_PATH) + " " + args + " > " +
                            out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.output = bcb::read_file(out_path);
    return r;
}

void write_tmp(const std::string& path, const std::string& content) {
    bcb::write_file(path, content);
}

}  // namespace

TEST_CASE("roots subcommand prints the structure with residuals") {
    write_tmp("/tmp/bcb_p1.json", R"({"coefficients": [1, 0, 1]})");
    const RunResult r = run("roots /tmp/bcb_p1.json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("case") == "cross-product");
    CHECK(j.at("combined").size() == 4);
    CHECK(j.at("residuals").size() == 4);
}

TEST_CASE("bounds subcommand lists the requested kinds") {
    write_tmp("/tmp/bcb_p2.json", R"({"coefficients": [3, 2, 1]})");
    const RunResult r = run("bounds /tmp/bcb_p2.json --kinds cauchy,kojima");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("kind") == "cauchy");
    CHECK(j[0].at("radius").get<double>() == doctest::Approx(4.0));
    CHECK(j[1].at("radius").get<double>() == doctest::Approx(2.0 + std::sqrt(3.0)));
}

TEST_CASE("verify subcommand succeeds on a well-behaved polynomial") {
    write_tmp("/tmp/bcb_p3.json", R"({"coefficients": [3, 2, 1]})");
    const RunResult r = run("verify /tmp/bcb_p3.json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("kind") == "verify");
    CHECK(j.at("trials").size() == 1);
}

TEST_CASE("stress subcommand: exit codes and determinism") {
    const RunResult bad = run("stress --trials 0");
    CHECK(bad.exit_code == 1);

    const RunResult a = run("stress --trials 2 --seed 9 --degree-min 2 --degree-max 3");
    const RunResult b = run("stress --trials 2 --seed 9 --degree-min 2 --degree-max 3");
    CHECK(a.exit_code == 0);
    nlohmann::json ja = nlohmann::json::parse(a.output);
    nlohmann::json jb = nlohmann::json::parse(b.output);
    ja.erase("generated_at");
    jb.erase("generated_at");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("BCB_SEED overrides the default, explicit flag wins") {
    const RunResult defaulted = run("stress --trials 1 --degree-min 2 --degree-max 2");
    const RunResult via_env = run("stress --trials 1 --degree-min 2 --degree-max 2",
                                  "BCB_SEED=777");
    const RunResult via_flag = run("stress --trials 1 --seed 777 --degree-min 2 --degree-max 2");
    const RunResult flag_beats_env =
        run("stress --trials 1 --seed 12345 --degree-min 2 --degree-max 2", "BCB_SEED=777");

    const auto seed_of = [](const RunResult& r) {
        return nlohmann::json::parse(r.output).at("config").at("seed").get<std::uint64_t>();
    };
    CHECK(seed_of(defaulted) == 12345u);
    CHECK(seed_of(via_env) == 777u);
    CHECK(seed_of(via_flag) == 777u);
    CHECK(seed_of(flag_beats_env) == 12345u);

    const RunResult bad_env = run("stress --trials 1", "BCB_SEED=zebra");
    CHECK(bad_env.exit_code == 1);
}

TEST_CASE("stress csv output parses back") {
    const RunResult r = run("stress --trials 2 --seed 3 --format csv");
    CHECK(r.exit_code == 0);
    const auto rows = bcb::rows_from_csv(r.output);
    CHECK(!rows.empty());
}

TEST_CASE("gershgorin subcommand passes and rejects bad sizes") {
    const RunResult ok = run("gershgorin --trials 5 --seed 1");
    CHECK(ok.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(ok.output);
    CHECK(j.at("passed") == true);
    CHECK(j.at("fixed_counterexample").at("ball_union_miss") == true);

    const RunResult bad = run("gershgorin --trials 5 --size 9");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("report subcommand converts json to csv") {
    const RunResult stress = run("stress --trials 2 --seed 6 --output /tmp/bcb_report.json");
    CHECK(stress.exit_code == 0);
    const RunResult csv = run("report /tmp/bcb_report.json --format csv");
    CHECK(csv.exit_code == 0);
    const auto rows = bcb::rows_from_csv(csv.output);
    CHECK(!rows.empty());
    const RunResult round = run("report /tmp/bcb_report.json --format json");
    CHECK(round.exit_code == 0);
    CHECK(nlohmann::json::parse(round.output).at("kind") == "stress");
}

TEST_CASE("verify exits 2 on a containment violation") {
    // the pinned landau counterexample: (10e + e')Z + (1e-3 e + 1e-6 e')
    write_tmp("/tmp/bcb_landau.json",
              R"({"coefficients": [[0.0005005, 0, 0, 0.0004995], [5.5, 0, 0, 4.5]]})");
    const RunResult r = run("verify /tmp/bcb_landau.json");
    CHECK(r.exit_code == 2);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    bool landau_violated = false;
    for (const auto& check : j.at("trials").at(0).at("bounds"))
        if (check.at("label") == "landau(t=1)" && !check.value("skipped", false))
            landau_violated = !check.at("contained").get<bool>();
    CHECK(landau_violated);
}

TEST_CASE("input errors exit with code 1") {
    write_tmp("/tmp/bcb_bad1.json", "{ not json");
    CHECK(run("roots /tmp/bcb_bad1.json").exit_code == 1);

    write_tmp("/tmp/bcb_bad2.json", R"({"coefficients": [[1,2,3,"x"]]})");
    CHECK(run("roots /tmp/bcb_bad2.json").exit_code == 1);

    // degree over the supported limit
    std::string big = R"({"coefficients": [)";
    for (int i = 0; i < 14; ++i) big += "1, ";
    big += "1]}";
    write_tmp("/tmp/bcb_bad3.json", big);
    CHECK(run("roots /tmp/bcb_bad3.json").exit_code == 1);

    // constant polynomial cannot be bounded
    write_tmp("/tmp/bcb_bad4.json", R"({"coefficients": [5]})");
    CHECK(run("bounds /tmp/bcb_bad4.json").exit_code == 1);

    // zero-divisor leading coefficient: quotient bounds are undefined
    write_tmp("/tmp/bcb_bad5.json", R"({"coefficients": [1, [0.5, 0, 0, 0.5]]})");
    CHECK(run("bounds /tmp/bcb_bad5.json --kinds cauchy").exit_code == 1);
}
