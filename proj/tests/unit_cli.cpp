#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GPTK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/gptk_test_") + name;
    std::ofstream os(path);
    os << content;
    return path;
}

const char* kFermatSpec = R"({
  "field": {"p": 2, "k": 2},
  "degree": 3,
  "terms": [[3,0,0,"1"],[0,3,0,"1"],[0,0,3,"1"]]
})";

} // namespace

TEST_CASE("genus hurwitz") {
    RunResult r = run_cli("genus hurwitz --n 3 --base-genus 1 --different 18");
    CHECK(r.exit_code == 0);
    Json j = r.json();
    CHECK(j["schema_version"] == "1.0.0");
    CHECK(j["results"]["genus"] == 10);
    CHECK(j["results"]["consistent"] == true);
}

TEST_CASE("genus dsh") {
    RunResult r = run_cli("genus dsh --n 8 --base-prank 0 --orbits 1");
    CHECK(r.exit_code == 0);
    CHECK(r.json()["results"]["p_rank"] == 0);
}

TEST_CASE("genus hurwitz from a profile file") {
    std::string prof = write_temp(
        "profile.json", R"({"points":[{"label":"P1","filtration":[3,3,3,3,3]}]})");
    RunResult r = run_cli("genus hurwitz --n 3 --base-genus 0 --profile " + prof);
    CHECK(r.exit_code == 0);
    Json j = r.json();
    CHECK(j["results"]["different"] == 10);
    CHECK(j["results"]["genus"] == 3);
}

TEST_CASE("field info reports the canonical modulus") {
    RunResult r = run_cli("field info --p 2 --k 2");
    CHECK(r.exit_code == 0);
    Json j = r.json();
    CHECK(j["results"]["field"]["modulus"] == Json::array({1, 1, 1}));
    CHECK(j["results"]["field"]["order"] == 4);
}

TEST_CASE("curve points and singular") {
    std::string spec = write_temp("fermat.json", kFermatSpec);
    RunResult r = run_cli("curve points --curve " + spec);
    CHECK(r.exit_code == 0);
    CHECK(r.json()["results"]["count"] == 9);

    RunResult s = run_cli("curve singular --curve " + spec);
    CHECK(s.exit_code == 0);
    CHECK(s.json()["results"]["count"] == 0);
}

TEST_CASE("galois detect") {
    std::string spec = write_temp("fermat.json", kFermatSpec);
    RunResult r = run_cli("galois detect --curve " + spec + " --point 1:1:0");
    CHECK(r.exit_code == 0);
    Json j = r.json();
    CHECK(j["results"]["group_order"] == 2);
    CHECK(j["results"]["certificate"] == true);
}

TEST_CASE("verify-pair then classify round-trip") {
    const char* m4 = R"({
      "field": {"p": 2, "k": 2},
      "degree": 4,
      "terms": [[4,0,0,"1"],[1,0,3,"1"],[0,1,3,"1"]]
    })";
    std::string spec = write_temp("m4.json", m4);
    RunResult r = run_cli("galois verify-pair --curve " + spec + " --p1 0:0:1 --p2 1:0:1");
    CHECK(r.exit_code == 0);
    Json envelope = r.json();
    CHECK(envelope["results"]["g_order"] == 12);
    CHECK(envelope["results"]["classification"]["label"] == "AGL(1,4)");
    CHECK(envelope["results"]["cond_II"] == true);
    CHECK(envelope["results"]["cond_III"] == "true");
    std::string core = write_temp("pair_core.json", envelope["results"].dump());
    RunResult c = run_cli("group classify --pair-report " + core);
    CHECK(c.exit_code == 0);
    Json cj = c.json();
    CHECK(cj["results"]["label"] == "AGL(1,4)");
    CHECK(cj["results"]["matches_stored"] == true);
}

TEST_CASE("catalog verify exits zero on a passing entry") {
    RunResult r = run_cli("catalog verify suzuki-q8");
    CHECK(r.exit_code == 0);
    CHECK(r.json()["results"]["pass"] == true);
}

TEST_CASE("expectation mismatch exits two, report still emitted") {
    RunResult r = run_cli("genus hurwitz --n 3 --base-genus 1 --different 18 --expect-genus 9");
    CHECK(r.exit_code == 2);
    CHECK(r.json()["results"]["genus"] == 10);
}

TEST_CASE("input errors exit one") {
    CHECK(run_cli("field info --p 6 --k 1").exit_code == 1);
    CHECK(run_cli("curve points --curve /no/such/file").exit_code == 1);
    CHECK(run_cli("catalog verify no-such-entry").exit_code == 1);
}

TEST_CASE("results are byte-identical across runs") {
    for (const char* cmd : {"catalog verify roquette-q5", "field info --p 3 --k 2",
                            "genus hurwitz --n 2 --base-genus 0 --different 2"}) {
        Json a = run_cli(cmd).json();
        Json b = run_cli(cmd).json();
        CHECK(a["results"].dump() == b["results"].dump());
        CHECK(a["inputs_digest"] == b["inputs_digest"]);
    }
}
