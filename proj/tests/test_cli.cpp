#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + WB_CLI + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

// drops the inputs digest, which differs when the seed comes from the environment
std::string without_inputs(const std::string& s) {
    std::string out, line;
    for (char ch : s) {
        line += ch;
        if (ch != '\n') continue;
        if (line.find("\"inputs\"") == std::string::npos) out += line;
        line.clear();
    }
    return out + line;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("eq --discipline planar '(\\x.x) (\\y.y)' '\\z.z'").code == 0);
    CHECK(run("eq --discipline planar '\\x.x' '\\x y. x y'").code == 1);
    CHECK(run("eq --discipline ordinary --fuel 10 '(\\x. x x) (\\x. x x)' '\\z.z'").code == 2);
    CHECK(run("frobnicate").code == 3);
    CHECK(run("eq --discipline planar '\\x y. y x' '\\z.z'").code == 3);
    CHECK(run("eq --discipline nonsense 'x' 'x'").code == 3);
    CHECK(run("axioms --model LB --basis bibdi").code == 0);
    CHECK(run("separation-suite").code == 0);
    CHECK(run("assembly-suite --model Ltensor").code == 0);
}

TEST_CASE("json reports") {
    Run r = run("eq --json --discipline planar '(\\x.x) (\\y.y)' '\\z.z'");
    CHECK(r.code == 0);
    for (const char* f : {"\"command\"", "\"inputs\"", "\"seed\"", "\"bound\"", "\"verdict\"", "\"witness\""})
        CHECK_MESSAGE(r.out.find(f) != std::string::npos, f);
}

TEST_CASE("reports are deterministic") {
    std::string c = "classify --model LP --sampled 20";
    CHECK(run(c).out == run(c).out);
    Run a = run(c + " --json", "WORKBENCH_SEED=9");
    Run b = run(c + " --json --seed 9");
    CHECK(without_inputs(a.out) == without_inputs(b.out));
    CHECK(a.out.find("\"seed\": 9") != std::string::npos);
}

TEST_CASE("report wording") {
    CHECK(run("classify --model LP").out.find("whether L_P is a BIILP-algebra is still open") != std::string::npos);
    CHECK(run("assembly-suite --model LP").out.find("verified on given instances") != std::string::npos);
    CHECK(run("separation-suite").out.find("not proofs") != std::string::npos);
}
