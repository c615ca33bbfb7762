#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NOVIKOV_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("dim command") {
    auto r = run_cli("dim 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "20\n");

    auto r1 = run_cli("dim 1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == "1\n");

    auto rj = run_cli("dim 7 --format json");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j["dim"] == "924");
}

TEST_CASE("basis command emits one term per line") {
    auto r = run_cli("basis 4");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n')
            ++lines;
    CHECK(lines == 20);
    CHECK(r.output.find("(a*(b*(c*d)))") != std::string::npos);

    auto rj = run_cli("basis 2 --json");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0].contains("tableau"));
    CHECK(j[0].contains("term"));
}

TEST_CASE("tableaux command formats") {
    auto r = run_cli("tableaux 4 --format csv");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n')
            ++lines;
    CHECK(lines == 21); // header + 20 tableaux

    auto rj = run_cli("tableaux 3 --format json");
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j.size() == 6);
    CHECK(j[0].contains("shape"));
    CHECK(j[0].contains("nose"));

    auto rl = run_cli("tableaux 3 --letters a,a,a --alphabet a");
    CHECK(rl.exit_code == 0);
}

TEST_CASE("expand command") {
    auto r = run_cli("expand \"((a*b)*c)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "u_a^(1)*u_b^(1)*u_c + u_a^(2)*u_b*u_c\n");

    auto rj = run_cli("expand \"(a*b)\" --format json");
    auto j = nlohmann::json::parse(rj.output);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["coeff"] == "1");

    auto bad = run_cli("expand \"(a*b\"");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("normalize command") {
    auto r = run_cli("normalize \"(a*(b*c))\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 * (a*(b*c))\n");

    auto rj = run_cli("normalize \"((a*b)*c)\" --format json");
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j["dim"] == 6);
}

TEST_CASE("gf command") {
    auto r = run_cli("gf 6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4,20\n") != std::string::npos);
}

TEST_CASE("exp command") {
    auto r = run_cli("exp 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2.114742\n");
}

TEST_CASE("lemmas command") {
    auto r = run_cli("lemmas --max-n 10 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n,dim,lower,upper,root_estimate\n") == 0);
    CHECK(r.output.find("4,20,32/3,64,") != std::string::npos);
}

TEST_CASE("verify command at a small cap") {
    auto r = run_cli("verify --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("dim").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("dim 4 --format yaml").exit_code == 2);
    CHECK(run_cli("expand \"(a*zz)\"").exit_code == 2);
}

TEST_CASE("byte-identical output for fixed flags and seed") {
    auto a = run_cli("verify --max-n 2 --seed 5 --format json");
    auto b = run_cli("verify --max-n 2 --seed 5 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("output redirection") {
    std::string path = "/tmp/novikov_cli_dim_out.txt";
    auto r = run_cli("dim 5 --out " + path);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[32] = {0};
    REQUIRE(fgets(buf, sizeof buf, f) != nullptr);
    fclose(f);
    remove(path.c_str());
    CHECK(std::string(buf) == "70\n");
}
