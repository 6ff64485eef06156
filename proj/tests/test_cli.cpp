#include <sstream>

#include "catch_amalgamated.hpp"

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tau::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute") {
    Result r = run({"compute", "--partition", "2", "--normalized"});
    CHECK(r.code == 0);
    CHECK(r.out == "(f_0*f_1 - a_1) / ((a_0+a_1)*a_1)\n");
    CHECK(run({"compute", "--partition", ""}).out == "1\n");
    CHECK(run({"compute", "--frobenius", "I=2,1;J=1,0"}).out == run({"compute", "--partition", "2,2"}).out);
    CHECK(run({"compute", "--word", "s0 s-1 s1 s0"}).out == run({"compute", "--partition", "2,2"}).out);
    CHECK(run({"compute", "--word", "s2 s1", "-j", "1"}).out == "f_1*f_2 - a_2\n");
    CHECK(run({"compute", "--partition", "1", "--format", "latex"}).out == "f_{0}\n");
    CHECK(run({"compute", "--partition", "1", "--format", "json"}).out.find("\"tau_monomial\"") != std::string::npos);
}

TEST_CASE("compute errors") {
    Result r = run({"compute", "--word", "s0 s0"});
    CHECK(r.code == 3);
    CHECK(r.err.find("inadmissible at step 2") != std::string::npos);
    CHECK(run({"compute", "--partition", "1,2"}).code == 2);
    CHECK(run({"compute", "--partition", "x"}).code == 2);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"compute", "--partition", "1", "--word", "s0"}).code == 2);
    CHECK(run({"compute", "--partition", "1", "--format", "xml"}).code == 2);
    CHECK(run({"compute", "--partition", "1", "--modulus", "1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("verify") {
    Result r = run({"verify", "plucker"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("plucker: pass", 0) == 0);
    Result t = run({"verify", "theorem1", "--max-cells", "6"});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("theorem1: pass, 30 checks, 0 failed", 0) == 0);
    Result l = run({"verify", "lemma5", "--seed", "42"});
    CHECK(l.code == 0);
    CHECK(l.out.rfind("lemma5: pass, 100 checks", 0) == 0);
    CHECK(run({"verify", "lemma5", "--seed", "42", "-v"}).out == run({"verify", "lemma5", "--seed", "42", "-v"}).out);
    CHECK(run({"verify", "theorem1", "--max-cells", "13"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"verify", "relations", "--window", "2"}).code == 0);
    CHECK(run({"verify", "reduction", "--modulus", "3"}).code == 0);
    CHECK(run({"verify", "cocycle-equivalence", "--max-cells", "5", "--jobs", "2"}).code == 0);
}

TEST_CASE("every suite runs at small size") {
    for (const std::string& suite : tau::cli::suite_names()) {
        INFO(suite);
        CHECK(run({"verify", suite, "--max-cells", "3"}).code == 0);
    }
}

TEST_CASE("frame") {
    Result r = run({"frame", "--partition", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("equals normalized phi: yes") != std::string::npos);
    CHECK(run({"frame", "--partition", "3", "--window", "2"}).code == 4);
    CHECK(run({"frame", "--partition", "2,2", "--window", "4"}).code == 0);
}
