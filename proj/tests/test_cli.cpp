#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "subword/cli.hpp"

using namespace subword;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen prints a header and the prefix") {
    const auto r = run({"gen", "--seq", "carlitz:q=2", "--n", "10"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "q=2 n0=0\n1 1 0 1 1 0 0 1 1 0\n");
    CHECK(run({"gen", "--seq", "cantor", "--n", "4"}).out == "q=2 n0=0\n1 0 1 0\n");
    CHECK(run({"gen", "--seq", "champernowne:b=10", "--n", "3"}).out.rfind("q=11 n0=0\n", 0) == 0);
}

TEST_CASE("gen writes to a file") {
    const std::string path = "test_cli_gen.txt";
    REQUIRE(run({"gen", "--seq", "periodic:|01", "--n", "4", "--out", path}).code == exit_ok);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "q=2 n0=0\n0 1 0 1\n");
    std::remove(path.c_str());
}

TEST_CASE("complexity CSV") {
    const auto r = run({"complexity", "--seq", "rotation:alpha=(-1+1*sqrt(2))/1", "--n", "1000", "--max-m", "3",
                        "--engine", "naive"});
    CHECK(r.code == exit_ok);
    CHECK(r.out ==
          "source,engine,N,m,p_m\n"
          "\"rotation:alpha=(-1+1*sqrt(2))/1\",naive,1000,1,2\n"
          "\"rotation:alpha=(-1+1*sqrt(2))/1\",naive,1000,2,3\n"
          "\"rotation:alpha=(-1+1*sqrt(2))/1\",naive,1000,3,4\n");
}

TEST_CASE("series, entropy, collisions and r2") {
    CHECK(run({"series", "cantor", "--n", "4"}).out == "n,a_n\n0,1\n1,0\n2,1\n3,0\n");
    const auto lifted = run({"series", "mulpoly(T,cantor)", "--n", "2"});
    CHECK(lifted.out == "n,a_n\n-1,1\n0,0\n1,1\n");
    CHECK(run({"collisions", "--d", "2", "--e", "3", "--N", "40"}).out ==
          "n,count,reps\n5,2,1:1 2:0\n11,2,1:2 3:1\n17,2,3:2 4:0\n35,2,3:3 5:1\n");
    CHECK(run({"r2", "--n", "25"}).out == "n,mode,r2\n25,formula,12\n");
    CHECK(run({"r2", "--n", "25", "--mode", "bruteforce"}).out == "n,mode,r2\n25,bruteforce,12\n");
    const auto entropy = run({"entropy", "--seq", "periodic:|0", "--n", "100", "--m", "3", "--base", "2"});
    CHECK(entropy.out == "source,N,m,base,p_m,entropy\n\"periodic:|0\",100,3,2,1,0\n");
}

TEST_CASE("verify exit codes and reproducibility") {
    const auto first = run({"verify", "carlitz-q2-bounds", "--max-m", "10"});
    CHECK(first.code == exit_ok);
    CHECK(first.out.rfind("check,status,N,M,q,item,measured,bound,ok\n", 0) == 0);
    CHECK(first.out.find(",fail,") == std::string::npos);
    CHECK(run({"verify", "carlitz-q2-bounds", "--max-m", "10"}).out == first.out);

    const auto growth = run({"verify", "growth-orders"});
    CHECK(growth.code == exit_check_failed);
    CHECK(growth.out.find("growth-orders,fail,") != std::string::npos);

    CHECK(run({"verify", "unit-convolution", "--q", "3", "--n", "100000"}).code == exit_ok);
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({"verify", "nonexistent"}).code == exit_usage);
    CHECK(run({"verify", "sturmian-saturation", "--n", "3"}).code == exit_usage);
    CHECK(run({"gen", "--n", "3"}).code == exit_usage);
    const auto bad = run({"gen", "--seq", "bogus", "--n", "3"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("position 0") != std::string::npos);
    CHECK(run({"complexity", "--seq", "cantor", "--n", "10", "--max-m", "11"}).code == exit_usage);
    CHECK(run({"series", "frobenius(cantor)", "--n", "3"}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}
