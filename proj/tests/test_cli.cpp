// End-to-end tests driving the installed binary through a shell, covering
// output formats, exit codes and report determinism.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "dilates/report.hpp"

namespace fs = std::filesystem;
using dilates::Json;

namespace {

const char* cli_path() {
#ifdef DILATES_CLI_PATH
    return DILATES_CLI_PATH;
#else
    const char* p = std::getenv("DILATES_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "DILATES_CLI_PATH must point at the binary");
    return p;
#endif
}

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("dilates_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
    static int counter = 0;
    ++counter;
    fs::path in = write_file("stdin_" + std::to_string(counter), stdin_text);
    fs::path out = work_dir() / ("stdout_" + std::to_string(counter));
    fs::path err = work_dir() / ("stderr_" + std::to_string(counter));
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" +
                      std::string(cli_path()) + "\" " + args + " < \"" + in.string() +
                      "\" > \"" + out.string() + "\" 2> \"" + err.string() + "\"";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
}

const std::string kTriangle = "0 0\n1 0\n0 1\n";

}  // namespace

TEST_CASE("compute prints the summary line") {
    fs::path in = write_file("triangle.txt", kTriangle);
    RunResult r = run_cli("compute -q 2 -i \"" + in.string() + "\"");
    CHECK(r.code == 0);
    CHECK(r.out == "|A|=3 rank=2 r=3 |A+qA|=9\n");
    CHECK(r.err.empty());
}

TEST_CASE("compute reads stdin when no input is given") {
    RunResult r = run_cli("compute -q 2", kTriangle);
    CHECK(r.code == 0);
    CHECK(r.out == "|A|=3 rank=2 r=3 |A+qA|=9\n");

    RunResult dash = run_cli("compute -q 2 -i -", kTriangle);
    CHECK(dash.code == 0);
    CHECK(dash.out == r.out);
}

TEST_CASE("compute emits a structured report") {
    RunResult r = run_cli("compute -q -2 --json", kTriangle);
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["tool"] == "dilates");
    CHECK(doc["command"] == "compute");
    CHECK(doc["parameters"]["q"] == -2);
    CHECK(doc["results"]["cardinality"] == 3);
    CHECK(doc["results"]["rank"] == 2);
    CHECK(doc["results"]["coset_count"] == 3);
    CHECK(doc["results"]["computed"] == 9);
    CHECK(doc.contains("input_digest"));

    // -o writes the same report next to the summary line
    fs::path out = work_dir() / "compute_report.json";
    RunResult r2 = run_cli("compute -q -2 -o \"" + out.string() + "\"", kTriangle);
    CHECK(r2.code == 0);
    CHECK(r2.out == "|A|=3 rank=2 r=3 |A+qA|=9\n");
    CHECK(Json::parse(read_file(out)) == doc);
}

TEST_CASE("comments, blank lines and duplicates in input") {
    std::string text = "# corpus\n\n0 0   # origin\n1 1\n0 0\n";
    RunResult r = run_cli("compute -q 2", text);
    CHECK(r.code == 0);
    CHECK(r.out == "|A|=2 rank=1 r=2 |A+qA|=4\n");
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.err.find("duplicate point") != std::string::npos);
    CHECK(r.err.find("line 5") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    RunResult bad_token = run_cli("compute -q 2", "0 0\n1 x\n");
    CHECK(bad_token.code == 2);
    CHECK(bad_token.err.find("parse error") != std::string::npos);
    CHECK(bad_token.err.find("line 2") != std::string::npos);

    RunResult bad_width = run_cli("compute -q 2", "0 0\n1 2 3\n");
    CHECK(bad_width.code == 2);

    RunResult empty = run_cli("compute -q 2", "# nothing\n");
    CHECK(empty.code == 2);
}

TEST_CASE("invalid parameters exit 3") {
    CHECK(run_cli("compute -q 1", kTriangle).code == 3);
    CHECK(run_cli("compute", kTriangle).code == 3);          // missing required -q
    CHECK(run_cli("compute -q 2 --nope", kTriangle).code == 3);
    CHECK(run_cli("", kTriangle).code == 3);                 // a subcommand is required
    CHECK(run_cli("construct --family XY --d 2 --N 3").code == 3);
}

TEST_CASE("version flag") {
    RunResult r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("reduce rescales to a unimodular difference lattice") {
    std::string doubled = "0 0\n2 0\n0 2\n";
    RunResult r = run_cli("reduce", doubled);
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n0 1\n1 0\n");
    CHECK(r.err == "det=4\n");

    RunResult j = run_cli("reduce --json", doubled);
    REQUIRE(j.code == 0);
    Json doc = Json::parse(j.out);
    CHECK(doc["command"] == "reduce");
    CHECK(doc["results"]["det"] == 4);
    CHECK(doc["results"]["anchor"] == Json::parse("[0,0]"));
    CHECK(doc["results"]["transform"] == Json::parse("[[2,0],[0,2]]"));
    CHECK(doc["results"]["output"] == Json::parse("[[0,0],[0,1],[1,0]]"));

    // rank-deficient input violates the hypothesis
    CHECK(run_cli("reduce", "0 0\n1 1\n").code == 4);
}

TEST_CASE("verify passes on the simplex and reports every row") {
    RunResult r = run_cli("verify -q 2", kTriangle);
    CHECK(r.code == 0);
    CHECK(r.out.find("|A|=3 rank=2 r=3 |A+qA|=9") != std::string::npos);
    CHECK(r.out.find("ruzsa_sumset: PASS required=6") != std::string::npos);
    CHECK(r.out.find("coset_count: PASS required=6") != std::string::npos);
    CHECK(r.out.find("two_d_plus_one: PASS required=6") != std::string::npos);
    CHECK(r.out.find("slope_q_plus_1: SLACK slope=3 slack=0") != std::string::npos);

    RunResult j = run_cli("verify -q 2 --json", kTriangle);
    REQUIRE(j.code == 0);
    Json doc = Json::parse(j.out);
    CHECK(doc["results"]["bounds"]["rows"].size() == 6);
    CHECK(doc["results"]["dichotomy"]["applicable"] == true);
    REQUIRE(doc["results"]["dichotomy"]["parts"].size() == 3);
    for (const Json& part : doc["results"]["dichotomy"]["parts"])
        CHECK(part["holds"] == true);
    CHECK_FALSE(doc["results"].contains("witness"));
}

TEST_CASE("verify flags an impossible claimed value") {
    RunResult r = run_cli("verify -q 2 --override-cardinality 5", kTriangle);
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.err.find("witness") != std::string::npos);

    RunResult j = run_cli("verify -q 2 --override-cardinality 5 --json", kTriangle);
    CHECK(j.code == 1);
    Json doc = Json::parse(j.out);
    CHECK(doc["results"].contains("witness"));
}

TEST_CASE("verify marks the dichotomy inapplicable off the reduced case") {
    RunResult j = run_cli("verify -q 2 --json", "0 0\n2 0\n0 2\n");
    REQUIRE(j.code == 0);
    Json doc = Json::parse(j.out);
    CHECK(doc["results"]["dichotomy"]["applicable"] == false);
    CHECK(doc["results"]["dichotomy"]["note"] == "set is not reduced");
    CHECK(doc["results"]["dichotomy"]["parts"].empty());
}

TEST_CASE("construct emits the family and verifies it") {
    RunResult r = run_cli("construct --family AN --d 2 --N 4");
    CHECK(r.code == 0);
    CHECK(r.out == "0 1\n1 0\n2 0\n3 0\n");

    fs::path rep = work_dir() / "an_report.json";
    RunResult v = run_cli("construct --family AN --d 2 --N 4 -q 2 --report \"" +
                          rep.string() + "\"");
    CHECK(v.code == 0);
    Json doc = Json::parse(read_file(rep));
    CHECK(doc["command"] == "construct");
    CHECK(doc["results"]["family"] == "AN");
    CHECK(doc["results"]["computed"] == 14);
    CHECK(doc["results"]["upper_bound"] == 19);
    CHECK(doc["results"]["exact_expected"] == 14);
    CHECK(doc["results"]["ok"] == true);

    // without --report the verification summary lands on stderr
    RunResult s = run_cli("construct --family AN --d 2 --N 4 -q 3");
    CHECK(s.code == 0);
    CHECK(s.err.find("verified: |A+qA|=16 <= 22") != std::string::npos);

    CHECK(run_cli("construct --family AN --d 1 --N 4").code == 3);
}

TEST_CASE("search reports the minimum and its witness") {
    RunResult r = run_cli("search --d 2 -q 2 --n 3 --grid 1");
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["command"] == "search");
    CHECK(doc["parameters"]["mode"] == "exhaustive");
    CHECK_FALSE(doc["parameters"].contains("workers"));
    CHECK_FALSE(doc["parameters"].contains("samples"));
    CHECK(doc["results"]["min_value"] == 9);
    CHECK(doc["results"]["witness"] == Json::parse("[[0,0],[0,1],[1,0]]"));
    CHECK(doc["results"]["witness_source"] == "enumeration");
    CHECK(doc["results"]["subsets_examined"] == 4);
    CHECK(doc["results"]["injected_candidates"] == 1);
}

TEST_CASE("search reports are byte-identical across worker counts") {
    std::string base = "search --d 2 -q 2 --n 4 --grid 2";
    RunResult one = run_cli(base + " --workers 1");
    RunResult four = run_cli(base + " --workers 4");
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.out == four.out);

    std::string rnd = "search --d 2 -q 2 --n 5 --grid 3 --random 2000 --seed 7";
    RunResult r1 = run_cli(rnd + " --workers 1");
    RunResult r4 = run_cli(rnd + " --workers 4");
    REQUIRE(r1.code == 0);
    REQUIRE(r4.code == 0);
    CHECK(r1.out == r4.out);
    Json doc = Json::parse(r1.out);
    CHECK(doc["parameters"]["mode"] == "random");
    CHECK(doc["parameters"]["samples"] == 2000);
    CHECK(doc["parameters"]["seed"] == 7);
}

TEST_CASE("random mode requires the seed and vice versa") {
    CHECK(run_cli("search --d 2 -q 2 --n 4 --grid 2 --random 100").code == 3);
    CHECK(run_cli("search --d 2 -q 2 --n 4 --grid 2 --seed 7").code == 3);
    CHECK(run_cli("search --d 2 -q 2 --n 4 --grid 2 --workers 0").code == 3);
}

TEST_CASE("search exits 4 when no candidate exists") {
    RunResult r = run_cli("search --d 2 -q 2 --n 2 --grid 1");
    CHECK(r.code == 4);
    CHECK(r.err.find("hypothesis violated") != std::string::npos);
}

TEST_CASE("budget refusals exit 5 and name the requirement") {
    RunResult r = run_cli("search --d 2 -q 2 --n 3 --grid 1 --budget 3");
    CHECK(r.code == 5);
    CHECK(r.err.find("budget exceeded") != std::string::npos);
    CHECK(r.err.find("needs 4 subsets") != std::string::npos);

    RunResult env = run_cli("search --d 2 -q 2 --n 3 --grid 1", "", "DILATE_BUDGET=3");
    CHECK(env.code == 5);

    // the flag wins over the environment
    RunResult flag = run_cli("search --d 2 -q 2 --n 3 --grid 1 --budget 100", "",
                             "DILATE_BUDGET=3");
    CHECK(flag.code == 0);

    RunResult junk = run_cli("search --d 2 -q 2 --n 3 --grid 1", "", "DILATE_BUDGET=abc");
    CHECK(junk.code == 3);
}
