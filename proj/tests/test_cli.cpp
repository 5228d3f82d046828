#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "eltlab/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "eltlab");
    std::ostringstream out, err;
    int code = eltlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(ELTLAB_SOURCE_DIR) + "/fixtures/" + name; }

}  // namespace

TEST_CASE("scalar commands") {
    CHECK(run({"det", fixture("ata.mat")}).out == "10^[0]\n");
    CHECK(run({"det", fixture("aat.mat")}).out == "8^[1]\n");
    CHECK(run({"det", fixture("ata.json")}).out == "10^[0]\n");
    CHECK(run({"etr", fixture("apb.mat")}).out == "0^[0]\n");
    CHECK(run({"trace", fixture("nilpotent.mat")}).out == "0^[2]\n");
    CHECK(run({"charpoly", fixture("charpoly.mat")}).out == "0^[1]*L^2 + 3^[-1]*L^1 + 4^[0]\n");
    CHECK(run({"eltrop", fixture("eltrop.series")}).out == "-1/2^[3]\n");
    CHECK(run({"eltrop", "--inline", "0"}).out == "-inf\n");
    CHECK(run({"det", "--inline", "1^[1], 1^[1]\n2^[1], 3^[1]"}).out == "4^[1]\n");
}

TEST_CASE("machine mode prefixes every value") {
    auto r = run({"--machine", "etr", fixture("apb.mat")});
    CHECK(r.code == 0);
    CHECK(r.out == "trace=0^[4]\ntrace-monomial=QuasiEssential\nmu=1\ndominant-coefficient=0^[-4]\netr=0^[0]\n");
    CHECK(run({"det", fixture("ata.mat"), "--machine"}).out == "det=10^[0]\n");
    CHECK(run({"--machine", "adj", fixture("a.mat")}).out ==
          "adj(1,1)=3^[1]\nadj(1,2)=1^[-1]\nadj(2,1)=2^[-1]\nadj(2,2)=1^[1]\n");
    CHECK(run({"--machine", "nilpotent", fixture("nilpotent.mat")}).out == "nilpotent=true\nindex=2\n");
}

TEST_CASE("matrix and analysis commands") {
    CHECK(run({"adj", fixture("a.mat")}).out == "3^[1], 1^[-1]\n2^[-1], 1^[1]\n");
    auto q = run({"qinv", "--inline", "0^[1], 2^[1]\n-inf, 0^[1]"});
    CHECK(q.code == 0);
    CHECK(q.out == "0^[1], 2^[-1]\n-inf, 0^[1]\nleft: quasi-identity\nright: quasi-identity\n");
    auto roots = run({"roots", fixture("charpoly.poly")});
    CHECK(roots.out.find("corner 3: 0 1\n") != std::string::npos);
    CHECK(roots.out.find("corner 1: 0\n") != std::string::npos);
    CHECK(roots.out.find("interval (-inf, 1): any-layer\n") != std::string::npos);
    CHECK(run({"eig-verify", fixture("charpoly.mat"), "--value", "3^[1]", "--vector", "0^[1], 1^[1]"}).out ==
          "Strict\n");
    auto cyc = run({"cycles", fixture("charpoly.mat")});
    CHECK(cyc.out.find("max-mean: 3\nkarp: 3\n") != std::string::npos);
    auto h = run({"hungarian", fixture("assign.trop")});
    CHECK(h.code == 0);
    CHECK(h.out.find("duals-feasible: true\ncritical: true\n") != std::string::npos);
    auto he = run({"hungarian", fixture("a.mat")});
    CHECK(he.out.find("D:\n") != std::string::npos);
    CHECK(run({"--layer-ring", "Z", "det", fixture("ata.mat")}).out == "10^[0]\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"det", "/no/such/file.mat"}).code == 1);
    CHECK(run({"det", "--inline", "1^[2/4]"}).code == 1);
    CHECK(run({"--layer-ring", "R", "det", fixture("ata.mat")}).code == 1);
    CHECK(run({"--layer-ring", "Z", "det", "--inline", "1^[1/2]"}).code == 1);
    auto singular = run({"qinv", fixture("singular.mat")});
    CHECK(singular.code == 2);
    CHECK(singular.err.find("SingularDeterminant") != std::string::npos);
    CHECK(run({"det", "--inline", "1^[1], 2^[1]"}).code == 2);
    CHECK(run({"hungarian", "--inline", "--", "-inf, 0\n-inf, 0"}).code == 2);
    CHECK(run({"verify", "no-such-identity"}).code == 2);
    CHECK(run({"verify", "all", "--trials", "0"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verification records") {
    auto r = run({"verify", "cayley-hamilton", "--trials", "100", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS cayley-hamilton-n2 7\nPASS cayley-hamilton-n3 7\n");
    auto m = run({"verify", "mutation-control", "--trials", "10"});
    CHECK(m.code == 3);
    CHECK(m.out.rfind("FAIL det-mult-mutant-n2 42\n", 0) == 0);
}

TEST_CASE("identical input and seed give identical output") {
    auto a = run({"verify", "all", "--trials", "30", "--seed", "123"});
    auto b = run({"verify", "all", "--trials", "30", "--seed", "123"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"cycles", fixture("upper.mat")}).out == run({"cycles", fixture("upper.mat")}).out);
}

TEST_CASE("ELTLAB_SEED is the fallback seed") {
    ::setenv("ELTLAB_SEED", "99", 1);
    CHECK(run({"verify", "det-mult", "--trials", "5"}).out == "PASS det-mult-n2 99\nPASS det-mult-n3 99\n");
    CHECK(run({"verify", "det-mult", "--trials", "5", "--seed", "8"}).out == "PASS det-mult-n2 8\nPASS det-mult-n3 8\n");
    ::unsetenv("ELTLAB_SEED");
    CHECK(run({"verify", "det-mult", "--trials", "5"}).out == "PASS det-mult-n2 42\nPASS det-mult-n3 42\n");
}
