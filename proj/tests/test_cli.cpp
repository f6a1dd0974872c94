#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = std::string(DOMCERT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("dominance command") {
    RunResult r = run("dominance '[1,1]' '[2,0]'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "true\n");

    r = run("dominance '[2,0]' '[1,1]' --explain");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("false") != std::string::npos);
    CHECK(r.output.find("partial sum 1: 2 > 1") != std::string::npos);

    r = run("dominance '[3,1]' '[1,0]' --scaled");
    CHECK(r.exit_code == 0);

    r = run("dominance '[2,0]' '[1,1,0]'");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("rank mismatch") != std::string::npos);

    CHECK(run("dominance '[nonsense'").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("tensor command") {
    RunResult r = run("tensor '[1,0]' --power 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"multiplicity\": 2") != std::string::npos);
    CHECK(r.output.find("\"power\": 3") != std::string::npos);

    CHECK(run("tensor '[1,0]' --power 3 --contains '[2,1]'").exit_code == 0);
    CHECK(run("tensor '[1,0]' --power 3 --contains '[3,1]'").exit_code == 1);
    CHECK(run("tensor '[3,2,1,0]' --power 12 --support-cap 20").exit_code == 3);
    CHECK(run("tensor '[1,0]'").exit_code == 2);
}

TEST_CASE("cone commands") {
    RunResult r = run("cone-vertices '[4,2,0]'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"scale\": 6") != std::string::npos);
    CHECK(r.output.find("\"dimension\": 3") != std::string::npos);

    r = run("cone-vertices '[1,0]'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"1/2\"") != std::string::npos);

    r = run("sigma '[2,0]'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"size\": 8") != std::string::npos);

    r = run("decompose '[1,0]' '[2,1]'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"remainder\": [\n    1,\n    0\n  ]") != std::string::npos);

    CHECK(run("decompose '[2,1,0]' '[3,0,0]'").exit_code == 2);
    CHECK(run("sigma '[0,0]'").exit_code == 2);
}

TEST_CASE("certify and verify round trip") {
    auto cert_path = scratch("domcert_cli_wedge.json");
    RunResult r = run("certify wedge --rank 3 --column 2 --power 3 --out " + cert_path.string());
    CHECK(r.exit_code == 0);
    r = run("verify " + cert_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "accepted\n");

    auto dom_path = scratch("domcert_cli_dom.json");
    r = run("certify dominance '[2,0]' '[1,1]' --power 2 --out " + dom_path.string());
    CHECK(r.exit_code == 0);
    CHECK(run("verify " + dom_path.string() + " --deep").exit_code == 0);

    std::string tampered = slurp(dom_path);
    auto pos = tampered.find("\"power\": 2");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 10, "\"power\": 3");
    auto bad_path = scratch("domcert_cli_tampered.json");
    std::ofstream(bad_path) << tampered;
    r = run("verify " + bad_path.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("rejected:") == 0);

    std::ofstream(bad_path) << "this is not json";
    CHECK(run("verify " + bad_path.string()).exit_code == 2);
    CHECK(run("verify /nonexistent/cert.json").exit_code == 2);

    r = run("certify vertex '[4,2,0]' '(1,2)'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"blockwise\"") != std::string::npos);
    CHECK(run("certify det '[0,0]'").exit_code == 2);
    std::filesystem::remove(cert_path);
    std::filesystem::remove(dom_path);
    std::filesystem::remove(bad_path);
}

TEST_CASE("verify reads stdin") {
    RunResult r = run("certify det '[2,1,0]' | " + std::string(DOMCERT_CLI_PATH) + " verify -");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "accepted\n");
}

TEST_CASE("selftest output is stable across jobs") {
    RunResult one = run("selftest --jobs 1");
    RunResult four = run("selftest --jobs 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(one.output.find("\"status\": \"ok\"") != std::string::npos);
}
