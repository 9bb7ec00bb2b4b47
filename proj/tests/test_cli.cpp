#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "chibound/canonical.hpp"
#include "chibound/graph.hpp"

#ifndef CHIBOUND_CLI_PATH
#error "CHIBOUND_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args, const std::string& stdout_file = "") {
    std::string file = stdout_file.empty() ? std::string("/tmp/chibound_cli_out.txt") : stdout_file;
    std::string cmd = std::string(CHIBOUND_CLI_PATH) + " " + args + " >" + file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(file)};
}

// captures stderr (where the one-line summaries go)
RunResult run_summary(const std::string& args) {
    std::string file = "/tmp/chibound_cli_err.txt";
    std::string cmd =
        std::string(CHIBOUND_CLI_PATH) + " " + args + " >/dev/null 2>" + file;
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(file)};
}

std::size_t count_lines(const std::string& s) {
    std::size_t lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("gen emits one graph6 line per class") {
    RunResult r = run("gen 6");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 156);
}

TEST_CASE("verify exit codes and summary contract") {
    CHECK(run("verify --class chair_p4k1 --max-n 6").exit_code == 0);
    CHECK(run("verify --class bogus --max-n 5").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verify counts class members") {
    RunResult r = run("verify --class chair_p4k1 --max-n 7");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 570);
}

TEST_CASE("verify reads graph6 input files") {
    const char* g6 = "/tmp/chibound_cli_c5.g6";
    {
        std::ofstream f(g6);
        f << "Dhc\n";
    }
    RunResult r = run(std::string("verify --class hvn_p3k1 --input ") + g6);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"tight\":true") != std::string::npos);
}

TEST_CASE("verify reads graph6 from stdin") {
    std::string cmd = std::string("echo Dhc | ") + CHIBOUND_CLI_PATH +
                      " verify --class hvn_p3k1 --input - >/tmp/chibound_stdin.txt 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(slurp("/tmp/chibound_stdin.txt").find("\"tight\":true") != std::string::npos);
}

TEST_CASE("tsv format has a header") {
    RunResult r = run("verify --class hvn_p3k1 --max-n 4 --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("graph6\tn\tomega\tchi\tbound_value\tok\ttight\n", 0) == 0);
}

TEST_CASE("lemma subcommand") {
    CHECK(run("lemma --max-n 7").exit_code == 0);
    CHECK(run("lemma --max-n 6 --lemma-order all").exit_code == 0);
    CHECK(run("lemma --max-n 12").exit_code == 2);
}

TEST_CASE("witness subcommand") {
    RunResult r = run("witness grotzsch");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"claims_ok\":true") != std::string::npos);
    CHECK(run("witness bogus").exit_code == 2);

    RunResult s = run_summary("witness grotzsch");
    CHECK(s.out.find("ω=2 χ=4 claims_ok=true") != std::string::npos);
}

TEST_CASE("verify summary line format") {
    RunResult s = run_summary("verify --class hvn_p3k1 --max-n 5");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("class=hvn_p3k1 checked=") != std::string::npos);
    CHECK(s.out.find("violations=0 tight=1") != std::string::npos);
}

TEST_CASE("tight subcommand lists the five-cycle") {
    RunResult r = run("tight --class k5e_k2u2k1 --max-n 5");
    CHECK(r.exit_code == 0);
    // the generator emits canonical representatives
    CHECK(r.out.find(chibound::canonical_form(chibound::cycle(5))) != std::string::npos);
}

TEST_CASE("reports are byte-identical across thread counts") {
    RunResult a = run("verify --class chair_hvn --max-n 6 --threads 1", "/tmp/chibound_t1.txt");
    RunResult b = run("verify --class chair_hvn --max-n 6 --threads 8", "/tmp/chibound_t8.txt");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("CHI_THREADS is honored but the flag wins") {
    std::string cmd1 = std::string("CHI_THREADS=4 ") + CHIBOUND_CLI_PATH +
                       " verify --class chair_hvn --max-n 5 >/tmp/chibound_env.txt 2>/dev/null";
    int status = std::system(cmd1.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    std::string cmd2 = std::string("CHI_THREADS=4 ") + CHIBOUND_CLI_PATH +
                       " verify --class chair_hvn --max-n 5 --threads 1 >/tmp/chibound_envflag.txt 2>/dev/null";
    status = std::system(cmd2.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(slurp("/tmp/chibound_env.txt") == slurp("/tmp/chibound_envflag.txt"));
}
