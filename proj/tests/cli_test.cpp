#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef FARHI_CLI_PATH
#error "FARHI_CLI_PATH must point at the farhi binary"
#endif

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(FARHI_CLI_PATH) + " " + args;
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("eval") {
    CHECK(run("eval --poly \"x^2+1\" --k 1 --n 2 2>/dev/null").out == "5\n");
    CHECK(run("eval --poly \"x\" --k 1 --n 9 2>/dev/null").out == "1\n");
    // extended value at a zero-set point, note lands on stderr
    RunResult r = run("eval --poly \"x\" --k 2 --n 0 2>&1 1>/dev/null");
    CHECK(r.out.find("zero set") != std::string::npos);
    CHECK(run("eval --poly \"x\" --k 2 --n 0 2>/dev/null").out == "2\n");
    CHECK(run("eval --poly \"x\" --k 2 --n -1 2>/dev/null").out == "1\n");
}

TEST_CASE("exit codes") {
    CHECK(run("eval --poly \"x^^2\" --k 1 --n 0 2>/dev/null").status == 2);
    CHECK(run("eval --poly \"x^2+x\" --k 1 --n 5 2>/dev/null").status == 3);
    CHECK(run("nonsense 2>/dev/null").status == 2);
    CHECK(run("closed-form --k 2 --a 2 --b 4 2>/dev/null").status == 3);
    CHECK(run("eval --poly \"x\" --k 1 --n 3 2>/dev/null").status == 0);
}

TEST_CASE("period human output") {
    RunResult r = run("period --poly \"x^2+1\" --k 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("T = 5·13 = 65") != std::string::npos);
    CHECK(r.out.find("C = 1560") != std::string::npos);
    RunResult r2 = run("period --poly \"x\" --k 0");
    CHECK(r2.out.find("T = 1") != std::string::npos);
}

TEST_CASE("period json output") {
    RunResult r = run("period --poly \"x^3+1\" --k 1 --json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"T\": \"7\"") != std::string::npos);
    CHECK(r.out.find("\"C\": \"14\"") != std::string::npos);
}

TEST_CASE("table csv") {
    RunResult r = run("table --template \"x^2+{b}\" --b-from 1 --b-to 2 --k-from 1 --k-to 2 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "b,k,T,T_factored\n"
          "1,1,5,5\n"
          "1,2,10,2·5\n"
          "2,1,9,3^2\n"
          "2,2,18,2·3^2\n");
}

TEST_CASE("table markdown and json") {
    RunResult md = run("table --template \"x^2+{b}\" --b-from 1 --b-to 1 --k-from 1 --k-to 1");
    CHECK(md.status == 0);
    CHECK(md.out.find("| x^2 + 1 | 5 |") != std::string::npos);
    RunResult js = run("table --template \"x^3+{b}\" --b-from 1 --b-to 1 --k-from 1 --k-to 2 --format json");
    CHECK(js.status == 0);
    CHECK(js.out.find("\"T\": \"7\"") != std::string::npos);
    CHECK(js.out.find("\"T\": \"182\"") != std::string::npos);
    // negative b keeps the substituted polynomial parseable
    RunResult neg = run("table --template \"x^2+{b}\" --b-from -2 --b-to -2 --k-from 1 --k-to 1 --format csv");
    CHECK(neg.status == 0);
    CHECK(neg.out.find("-2,1,") != std::string::npos);
}

TEST_CASE("closed-form") {
    CHECK(run("closed-form --k 4").out == "T = 2^2·3 = 12\n");
    CHECK(run("closed-form --k 2 --a 2 --b 1").out == "T = 1\n");
    CHECK(run("closed-form --k 2 --a 3 --spaced").out == "T = 2·3 = 6\n");
}

TEST_CASE("table aborts naming the failing cell") {
    RunResult r = run("table --template \"x^2+{b}*x\" --b-from 1 --b-to 1 --k-to 2 2>&1");
    CHECK(r.status == 3);  // hypothesis violation inside the first cell
    CHECK(r.out.find("(b=1, k=1)") != std::string::npos);
}

TEST_CASE("output determinism") {
    const std::string cmd = "period --poly \"x^3+2\" --k 2 --json";
    CHECK(run(cmd).out == run(cmd).out);
    const std::string tbl = "table --template \"x^2+{b}\" --b-to 2 --k-to 2 --format csv";
    CHECK(run(tbl).out == run(tbl).out);
}
