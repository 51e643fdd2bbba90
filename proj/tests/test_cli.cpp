#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = eulinv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly prints coefficients lowest degree first", "[cli]") {
    CHECK(invoke({"poly", "--kind", "invB", "--n", "4"}).out == "1 17 40 17 1\n");
    CHECK(invoke({"poly", "--kind", "invA", "--n", "6"}).out == "1 9 28 28 9 1\n");
    CHECK(invoke({"poly", "--kind", "recB", "--n", "6"}).out == "1 43 331 634 331 43 1\n");
    CHECK(invoke({"poly", "--kind", "sybB", "--n", "3"}).out == "1 9 9 1\n");
    CHECK(invoke({"poly", "--kind", "invB", "--n", "3", "--stat", "desCoxeter"}).out == "1 9 9 1\n");
    CHECK(invoke({"poly", "--kind", "fullB", "--n", "2"}).code == 0);
}

TEST_CASE("gamma subcommand", "[cli]") {
    CHECK(invoke({"gamma", "--kind", "invB", "--n", "6"}).out == "1 37 168 56\n");
    CHECK(invoke({"gamma", "--n-max", "12"}).code == 0);
    CHECK(invoke({"gamma", "--kind", "invA", "--n", "0"}).code == 2);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"poly"}).code == 2);
    CHECK(invoke({"poly", "--kind", "nope", "--n", "3"}).code == 2);
    CHECK(invoke({"verify", "nope"}).code == 2);
    CHECK(invoke({"--format", "xml", "table"}).code == 2);
    CHECK(invoke({"--budget", "0", "table"}).code == 2);
}

TEST_CASE("budget exhaustion names n", "[cli]") {
    const auto r = invoke({"--budget", "1000", "poly", "--kind", "fullB", "--n", "7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("n=7") != std::string::npos);
    CHECK(invoke({"--budget", "3840", "poly", "--kind", "fullB", "--n", "5"}).code == 0);
}

TEST_CASE("structured output is deterministic", "[cli]") {
    const std::vector<std::string> args{"--format", "structured", "verify", "prefix-lemma", "--trials", "300", "--seed", "5"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("check=prefix-lemma\tparams=trials=300;length-max=8;seed=5\tstatus=pass") != std::string::npos);
    const auto t1 = invoke({"--format", "structured", "table"});
    CHECK(t1.out == invoke({"--format", "structured", "table"}).out);
    CHECK(t1.out.find("status=flag") != std::string::npos);
}

TEST_CASE("counterexample r89", "[cli]") {
    const auto r = invoke({"counterexample", "r89"});
    CHECK(r.code == 0);
    CHECK(r.out.find("113789153706560010000") != std::string::npos);
    CHECK(r.out.find("114890217312335629500") != std::string::npos);
    CHECK(r.out.find("NOT log-concave") != std::string::npos);
}

TEST_CASE("every verify subcommand passes at its defaults", "[cli]") {
    for (const auto& name : eulinv::cli::verify_names()) {
        const auto r = invoke({"verify", name});
        INFO(name << "\n" << r.out << r.err);
        CHECK(r.code == 0);
    }
}

TEST_CASE("a failing check exits with 1", "[cli]") {
    eulinv::Report report("forced");
    report.expect("always-false", {}, false);
    std::ostringstream out;
    eulinv::cli::CommandConfig cfg;
    CHECK(eulinv::cli::detail::emit(report, cfg, out) == 1);
    CHECK(out.str().find("[fail] always-false") != std::string::npos);
}
