#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmpfile_with(const std::string& content, const std::string& name) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("centrality: seeley on a star") {
    auto g = tmpfile_with("0 1\n0 2\n0 3\n", "star.edges");
    auto r = run("centrality --graph " + g + " --measure seeley");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\t1/2\n1\t1/6\n2\t1/6\n3\t1/6\n");
}

TEST_CASE("centrality: katz closed form on K2") {
    auto g = tmpfile_with("0 1\n", "k2.edges");
    auto r = run("centrality --graph " + g + " --measure katz --alpha 1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\t2\n1\t2\n");
}

TEST_CASE("centrality: eigenvector uses the normalization flag") {
    auto g = tmpfile_with("0 1\n1 2\n", "p3.edges");
    auto r = run("centrality --graph " + g + " --measure eigenvector --normalization l1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0\t") == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("centrality --graph no_such_file.edges").exit_code == 2);
    CHECK(run("nonsense-subcommand").exit_code == 2);
    auto g = tmpfile_with("0 1\n", "k2b.edges");
    CHECK(run("centrality --graph " + g + " --measure nope").exit_code == 2);
    CHECK(run("centrality --graph " + g + " --measure katz --alpha 0.5").exit_code == 2);
}

TEST_CASE("audit: non-adjacent pair, exit codes honor --fail-on-violation") {
    auto g = tmpfile_with("0 1\n1 2\n2 3\n", "p4.edges");
    auto ok = run("audit --graph " + g + " --edge 0,3 --measure harmonic --fail-on-violation");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("none") != std::string::npos);
    CHECK(run("audit --graph " + g + " --edge 0,1 --measure harmonic").exit_code == 2);
}

TEST_CASE("audit: violation found means exit 1 under --fail-on-violation") {
    auto fam = run("family geometric --params j=10,k=36,r=2");
    REQUIRE(fam.exit_code == 0);
    auto g = tmpfile_with(fam.out, "geo.edges");
    auto r = run("audit --graph " + g + " --edge 0,1 --measure closeness --fail-on-violation");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("bottom") != std::string::npos);
    auto j = run("audit --graph " + g + " --edge 0,1 --measure closeness --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"class\":\"bottom\"") != std::string::npos);
}

TEST_CASE("scan is deterministic given a seed") {
    auto g = tmpfile_with("0 1\n1 2\n2 3\n3 4\n4 5\n", "p6.edges");
    std::string args = "scan --graph " + g + " --measure harmonic --source random "
                       "--samples 5 --seed 9";
    auto a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("family emits edge list, coloring and base files") {
    auto r = run("family eigen --params k=7 --out cli_test_fam");
    CHECK(r.exit_code == 0);
    std::ifstream edges("cli_test_fam.edges"), col("cli_test_fam.coloring.tsv"),
        base("cli_test_fam.base.tsv");
    CHECK(edges.good());
    CHECK(col.good());
    CHECK(base.good());
    CHECK(run("family no-such-family").exit_code == 2);
}

TEST_CASE("sturm counts and isolates roots") {
    auto r = run("sturm --poly -2,0,1 --lo 0 --hi 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "roots\t1\n");
    auto iso = run("sturm --poly -2,0,1 --lo 0 --hi 2 --isolate 1/64");
    CHECK(iso.exit_code == 0);
    CHECK(iso.out.find("interval\t(") != std::string::npos);
    CHECK(run("sturm --poly -2,0,1 --lo 2 --hi 0").exit_code == 2);
}

TEST_CASE("fibration verifies an emitted family against its base") {
    REQUIRE(run("family eigen --params k=7 --out cli_test_fib").exit_code == 0);
    auto r = run("fibration --graph cli_test_fib.edges --coloring cli_test_fib.coloring.tsv "
                 "--base cli_test_fib.base.tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("valid\tyes") != std::string::npos);
}

TEST_CASE("reproduce rejects unknown claims, runs known ones") {
    CHECK(run("reproduce definitely-not-a-claim").exit_code == 2);
    auto r = run("reproduce eigen-small");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("eigen-small\tPASS") != std::string::npos);
}
