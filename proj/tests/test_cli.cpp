#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "support/fixtures.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ALRE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "alre_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kJumpInstance = "graph: 3\nedge: 1 2\nedge: 2 3\nvariant: def\nrule: tj\n"
                            "start: 1\ntarget: 3\n";
const char* kSlideInstance = "graph: 3\nedge: 1 2\nedge: 2 3\nvariant: def\nrule: ts\n"
                             "start: 1\ntarget: 3\n";

} // namespace

TEST_CASE("solve reports and exit codes") {
    auto inst = temp_file("jump.inst", kJumpInstance);
    RunResult ok = run_cli("solve --input " + inst.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("verdict: reachable") != std::string::npos);
    CHECK(ok.out.find("moves: 1") != std::string::npos);

    auto blocked = temp_file("slide.inst", kSlideInstance);
    RunResult no = run_cli("solve --input " + blocked.string());
    CHECK(no.exit_code == 1);
    CHECK(no.out.find("verdict: unreachable") != std::string::npos);

    RunResult bad = run_cli("solve --input /nonexistent.inst");
    CHECK(bad.exit_code == 2);

    auto malformed = temp_file("bad.inst", "graph: 2\nedge: 1 1\n");
    CHECK(run_cli("solve --input " + malformed.string()).exit_code == 2);
}

TEST_CASE("golden json report") {
    auto inst = temp_file("jump.inst", kJumpInstance);
    RunResult r = run_cli("solve --input " + inst.string() + " --solver oracle --json");
    CHECK(r.exit_code == 0);
    std::ifstream golden(std::string(ALRE_GOLDEN_DIR) + "/solve_jump.json");
    REQUIRE(golden.good());
    std::string expect((std::istreambuf_iterator<char>(golden)), std::istreambuf_iterator<char>());
    CHECK(r.out == expect);
}

TEST_CASE("solver selection agrees across backends") {
    auto inst = temp_file("tar.inst", "graph: 3\nedge: 1 2\nedge: 2 3\nvariant: def\nrule: tar\n"
                                      "cap: 2\nstart: 1\ntarget: 3\n");
    RunResult oracle = run_cli("solve --input " + inst.string() + " --solver oracle --json");
    RunResult fpt = run_cli("solve --input " + inst.string() +
                            " --solver fpt --max-moves 4 --json");
    CHECK(oracle.exit_code == 0);
    CHECK(fpt.exit_code == 0);
    auto moves_of = [](const std::string& s) {
        auto p = s.find("\"moves\"");
        REQUIRE(p != std::string::npos);
        return s.substr(p, s.find(',', p) - p);
    };
    CHECK(moves_of(oracle.out) == moves_of(fpt.out));
}

TEST_CASE("emit and verify a witness") {
    auto inst = temp_file("jump.inst", kJumpInstance);
    auto seq = std::filesystem::temp_directory_path() / "alre_cli_tests" / "wit.seq";
    RunResult solved =
        run_cli("solve --input " + inst.string() + " --emit-sequence " + seq.string());
    CHECK(solved.exit_code == 0);
    RunResult verified = run_cli("verify --input " + inst.string() + " --sequence " + seq.string());
    CHECK(verified.exit_code == 0);
    CHECK(verified.out.find("valid") == 0);

    auto bad_seq = temp_file("bad.seq", "1\n2\n3\n");
    RunResult rejected =
        run_cli("verify --input " + inst.string() + " --sequence " + bad_seq.string());
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.out.find("variant-fail") != std::string::npos);
    CHECK(rejected.out.find("configuration 2") != std::string::npos);
}

TEST_CASE("reduce then solve the produced instance") {
    auto seed = temp_file("seed.ds", "graph: 4\nedge: 1 2\nedge: 2 3\nedge: 3 4\n"
                                     "start: 2 4\ntarget: 2 3\n");
    auto outp = std::filesystem::temp_directory_path() / "alre_cli_tests" / "reduced.inst";
    RunResult red = run_cli("reduce --target da-tj --input " + seed.string() + " --output " +
                            outp.string());
    CHECK(red.exit_code == 0);
    RunResult solved = run_cli("solve --input " + outp.string() + " --solver oracle");
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("moves: 1") != std::string::npos);
}

TEST_CASE("nd partition and ilp export") {
    auto inst = temp_file("jump.inst", kJumpInstance);
    RunResult part = run_cli("nd --input " + inst.string() + " --partition");
    CHECK(part.exit_code == 0);
    CHECK(part.out.find("nd: 2") != std::string::npos);

    auto lp = std::filesystem::temp_directory_path() / "alre_cli_tests" / "model.lp";
    RunResult ilp = run_cli("nd --input " + inst.string() + " --ilp-out " + lp.string() +
                            " --steps 3 --mode validated");
    CHECK(ilp.exit_code == 0);
    std::ifstream lpf(lp);
    std::string first;
    std::getline(lpf, first);
    CHECK(first == "Minimize");
}

TEST_CASE("transform jumps to additions and back") {
    auto inst = temp_file("jump.inst", kJumpInstance);
    auto seq = temp_file("tj.seq", "1\n3\n");
    auto tar = std::filesystem::temp_directory_path() / "alre_cli_tests" / "tar.seq";
    RunResult to_tar = run_cli("transform --input " + inst.string() + " --sequence " +
                               seq.string() + " --tj-to-tar --out " + tar.string());
    CHECK(to_tar.exit_code == 0);
    std::ifstream tf(tar);
    std::string all((std::istreambuf_iterator<char>(tf)), std::istreambuf_iterator<char>());
    CHECK(all == "1\n1 3\n3\n");

    RunResult back = run_cli("transform --input " + inst.string() + " --sequence " + tar.string() +
                             " --tar-to-tj");
    CHECK(back.exit_code == 0);
    CHECK(back.out == "1\n3\n");
}

TEST_CASE("fpt refuses unsupported families") {
    auto inst = temp_file("oa_tj.inst", "graph: 2\nedge: 1 2\nvariant: off\nrule: tj\n"
                                        "start: 1\ntarget: 2\n");
    RunResult r = run_cli("solve --input " + inst.string() + " --solver fpt");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("no parameterized algorithm") != std::string::npos);
}

TEST_CASE("exhausting the state budget is a resource error") {
    auto inst = temp_file("big.inst",
                          "graph: 6\nedge: 1 2\nedge: 2 3\nedge: 3 4\nedge: 4 5\nedge: 5 6\n"
                          "edge: 6 1\nvariant: def\nrule: tar\ncap: 3\nstart: 1 2\ntarget: 4 5\n");
    RunResult r = run_cli("solve --input " + inst.string() + " --solver oracle --state-budget 3");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("max-moves narrows the verdict") {
    auto inst = temp_file("twostep.inst",
                          "graph: 4\nedge: 1 2\nedge: 2 3\nedge: 3 4\nvariant: def\nrule: tj\n"
                          "start: 1 2\ntarget: 3 4\n");
    CHECK(run_cli("solve --input " + inst.string() + " --max-moves 2").exit_code == 0);
    CHECK(run_cli("solve --input " + inst.string() + " --max-moves 1").exit_code == 1);
}

TEST_CASE("easy solver handles the independent families") {
    auto inst = temp_file("idp.inst", "graph: 4\nedge: 1 2\nedge: 3 4\n"
                                      "variant: off independent\nrule: ts\n"
                                      "start: 1 3\ntarget: 2 4\n");
    RunResult r = run_cli("solve --input " + inst.string() + " --solver easy --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"solver\": \"easy-idp-oa-ts\"") != std::string::npos);
    CHECK(r.out.find("\"moves\": 2") != std::string::npos);
    // auto picks the same backend
    RunResult a = run_cli("solve --input " + inst.string() + " --json");
    CHECK(a.out.find("\"solver\": \"easy-idp-oa-ts\"") != std::string::npos);

    auto bad = temp_file("idp_tj.inst", "graph: 4\nedge: 1 2\nedge: 3 4\n"
                                        "variant: off independent\nrule: tj\n"
                                        "start: 1 3\ntarget: 2 4\n");
    CHECK(run_cli("solve --input " + bad.string() + " --solver easy").exit_code == 2);
}

TEST_CASE("auto dispatch settles offensive jumping by Y-set comparison") {
    auto inst = temp_file("ysets.inst",
                          "graph: 7\nedge: 1 2\nedge: 1 3\nedge: 1 4\nedge: 2 3\nedge: 2 4\n"
                          "edge: 3 4\nedge: 6 7\nvariant: off\nrule: tar\ncap: 3\n"
                          "start: 1 2 3\ntarget: 6 7\n");
    RunResult r = run_cli("solve --input " + inst.string() + " --json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"solver\": \"oracle-y-exit\"") != std::string::npos);
}

TEST_CASE("timed bounds below one configuration admit nothing") {
    auto inst = temp_file("timed.inst", "graph: 2\nedge: 1 2\nvariant: def\nrule: tj\n"
                                        "start: 1\ntarget: 1\nbound: 1\n");
    CHECK(run_cli("solve --input " + inst.string()).exit_code == 1);
    auto ok = temp_file("timed2.inst", "graph: 2\nedge: 1 2\nvariant: def\nrule: tj\n"
                                       "start: 1\ntarget: 1\nbound: 2\n");
    CHECK(run_cli("solve --input " + ok.string()).exit_code == 0);
}
