#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_EXE) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("transform") {
    auto r = run("transform --vars 3 --poly \"x0*x2 - x1^2\" --point \"[1:2:4]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x0*x2 - x1^2\n");

    CHECK(run("transform --vars 2 --poly \"x0 - x1\" --point \"[1:3]\"").output ==
          "x0 - 1/3*x1\n");

    // Point vanishing on the support is a domain error.
    CHECK(run("transform --poly \"x0*x2 - x1^2\" --point \"[1:1:0]\"").exit_code == 1);
}

TEST_CASE("star-points") {
    auto r = run("star-points --point \"[1:2:3]\" --with \"[3:2:1]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[3:4:3]\n");
    CHECK(run("star-points --point \"[1:0]\" --with \"[0:1]\"").exit_code == 1);
}

TEST_CASE("star by elimination") {
    auto r = run("star --poly \"x0 - 2*x1\" --poly \"x0 - 3*x1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x0 - 6*x1\n");
}

TEST_CASE("product and power") {
    auto r = run("product --poly \"x0*x2 - 2*x1^2\" --poly \"x0*x2 + x1^2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x0*x2 + 2*x1^2\n");
    CHECK(run("product --poly \"x0*x2 - 2*x1^2\" --poly \"x0 - x1\"").exit_code == 1);

    CHECK(run("power --poly \"x0*x2 - z4*x1^2\" --exp 2").output == "x0*x2 + x1^2\n");
    CHECK(run("power --poly \"x0*x2 - z4*x1^2\" --exp 5").output == "x0*x2 - z4*x1^2\n");
}

TEST_CASE("classify, type, idempotent, min-exponent") {
    auto c = run("classify --poly \"x0*x2 - 2*x1^2\" --format records");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("\"I1\":[1,0,1]") != std::string::npos);
    CHECK(c.output.find("\"I2\":[0,2,0]") != std::string::npos);
    CHECK(c.output.find("\"alpha2\":\"2\"") != std::string::npos);
    CHECK(run("classify --poly \"x0 + x1 + x2\"").exit_code == 1);

    CHECK(run("type --poly \"x0*x2 - z4*x1^2\"").output == "(5, 1)\n");
    CHECK(run("type --poly \"x0*x2 - 2*x1^2\"").output == "none\n");

    CHECK(run("idempotent --poly \"x0*x2 - x1^2\" --exp 2").output == "true\n");
    CHECK(run("idempotent --poly \"x0*x2 - z4*x1^2\" --exp 3").output == "false\n");

    CHECK(run("min-exponent --poly \"x0*x2 - z4*x1^2\"").output == "5\n");
    CHECK(run("min-exponent --poly \"x0*x2 - 2*x1^2\"").output == "none\n");
    auto v = run("min-exponent --poly \"x0 + x1\" --poly \"x0*x2 - z3*x1^2\" --format records");
    CHECK(v.output.find("\"result\":7") != std::string::npos);
    CHECK(v.output.find("printed_formula") != std::string::npos);
}

TEST_CASE("union-power") {
    auto r = run("union-power --vars 2 --poly x0 --poly x1 --exp 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x0\nx1\nZ(x0, x1)\n");
}

TEST_CASE("table") {
    auto r = run("table --order 6");
    CHECK(r.exit_code == 0);
    // Header + rule + six rows; identity row C6 repeats C1..C6.
    CHECK(r.output.find("C6 | C1 C2 C3 C4 C5 C6") != std::string::npos);
    CHECK(r.output.find("C1 | C2 C3 C4 C5 C6 C1") != std::string::npos);

    CHECK(run("table --order 1 --format records").output.find("\"table\":[[1]]") !=
          std::string::npos);
}

TEST_CASE("verify") {
    auto pass = run("verify --vars 3 --poly \"x0*x2 - 2*x1^2\" --poly \"x0*x2 + x1^2\""
                    " --claim \"x0*x2 + 2*x1^2\" --samples 100 --seed 7 --tol 1e-8");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.substr(0, 4) == "pass");

    auto fail = run("verify --vars 3 --poly \"x0*x2 - 2*x1^2\" --poly \"x0*x2 + x1^2\""
                    " --claim \"x0*x2 - x1^2\" --samples 100 --seed 7 --tol 1e-8");
    CHECK(fail.exit_code == 0);
    CHECK(fail.output.substr(0, 4) == "fail");

    auto power = run("verify --vars 3 --poly \"x0*x2 - z4*x1^2\" --exp 5"
                     " --claim \"x0*x2 - z4*x1^2\" --samples 50 --seed 3");
    CHECK(power.output.substr(0, 4) == "pass");
}

TEST_CASE("parse-check and error codes") {
    CHECK(run("parse-check --poly \"x0   * x2- x1^2\"").output == "x0*x2 - x1^2\n");

    auto bad = run("parse-check --poly \"x0 +\"");
    CHECK(bad.exit_code == 2);

    auto rec = run("parse-check --poly \"x0 +\" --format records");
    CHECK(rec.exit_code == 2);
    CHECK(rec.output.find("\"position\":4") != std::string::npos);
    CHECK(rec.output.find("expected") != std::string::npos);

    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("every operation is reachable through exactly one subcommand") {
    std::string help = run("--help").output;
    for (const char* sub :
         {"transform", "star-points", "star", "product", "power", "classify", "type",
          "idempotent", "min-exponent", "union-power", "table", "verify", "parse-check"}) {
        CAPTURE(sub);
        CHECK(help.find(sub) != std::string::npos);
        // Listed once in the subcommand index.
        auto first = help.find(std::string("\n  ") + sub + " ");
        CHECK(first != std::string::npos);
        CHECK(help.find(std::string("\n  ") + sub + " ", first + 1) == std::string::npos);
    }
}

TEST_CASE("identical invocation gives byte-identical machine output") {
    const std::string cmd = "verify --vars 3 --poly \"x0*x2 - 2*x1^2\" --poly \"x0*x2 + x1^2\""
                            " --claim \"x0*x2 + 2*x1^2\" --samples 50 --seed 11 --format records";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"command\":\"verify\"") == 1);  // after '{'
}

