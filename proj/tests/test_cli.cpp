// Drives the beadweave binary end to end through temp files.

#include "beadweave/contraction.hpp"
#include "beadweave/diagram.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    fs::path out_path = fs::temp_directory_path() / "beadweave_test_out.txt";
    std::string cmd = std::string(BEADWEAVE_BIN) + " " + args + " > " +
                      out_path.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    int code = -1;
    if (status != -1) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

} // namespace

TEST_CASE("cli weight") {
    fs::path theta = write_temp("bw_theta.txt", beadweave::print_diagram(
                                                    beadweave::Diagram::theta()));
    RunResult r = run("weight " + theta.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6\n");

    fs::path circle = write_temp("bw_circle.txt", "vertices: T 0 U 0\ncircle: 1\n");
    CHECK(run("weight " + circle.string()).output == "3\n");
    CHECK(run("weight --loop-value 5 " + circle.string()).output == "5\n");
    CHECK(run("weight --loop-value 5 " + theta.string()).output == "20\n");

    fs::path beaded = write_temp("bw_beaded.txt", "vertices: T 0 U 0\ncircle: t-1\n");
    CHECK(run("weight " + beaded.string()).exit_code == 2);
}

TEST_CASE("cli realize feeds contract") {
    fs::path prefix = fs::temp_directory_path() / "bw_g2";
    RunResult emitted = run("realize --n 2 --emit-clasper " + prefix.string());
    REQUIRE(emitted.exit_code == 0);

    RunResult contracted =
        run("contract " + prefix.string() + ".clasper.txt " + prefix.string() + ".lk.txt");
    REQUIRE(contracted.exit_code == 0);
    RunResult direct = run("realize --n 2");
    CHECK(contracted.output == direct.output);

    // the printed sum parses back to the contraction itself
    auto [c, lk] = beadweave::build_grope_clasper(beadweave::GropeSpec{2});
    beadweave::DiagramSum expected = beadweave::complete_contraction(c, lk);
    CHECK(beadweave::parse_sum(contracted.output) == expected);
}

TEST_CASE("cli hair") {
    auto [c, lk] = beadweave::build_grope_clasper(beadweave::GropeSpec{1});
    std::string sum_text = beadweave::print_sum(beadweave::complete_contraction(c, lk));
    fs::path sum = write_temp("bw_sum1.txt", sum_text);
    RunResult r = run("hair " + sum.string() + " --max-degree 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("term: 1/2") != std::string::npos);
    CHECK(beadweave::parse_sum(r.output).size() == 1);
}

TEST_CASE("cli verify") {
    RunResult good = run("verify --n 1");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("PASS") != std::string::npos);

    RunResult json = run("verify --n 2 --json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"pass\": true") != std::string::npos);

    RunResult bad = run("verify --n 0");
    CHECK(bad.exit_code == 2);
}
