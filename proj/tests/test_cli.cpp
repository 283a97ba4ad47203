#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "actkit/cli.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const std::string kSample = std::string(ACTKIT_TEST_DATA_DIR) + "/two_idempotent_theta.act";

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(RunConfig config) {
    std::ostringstream out, err;
    Outcome result;
    result.code = run(config, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream stream(path);
    stream << text;
    return path.string();
}

}  // namespace

TEST_CASE("validate reports the inventory of a parsed file") {
    RunConfig config;
    config.command = "validate";
    config.inputs = {kSample};
    config.output_format = "machine";
    const Outcome got = invoke(config);
    CHECK(got.code == 0);
    CHECK(got.out == "VALID " + kSample + " monoid=2 acts=2 homs=0\n");
}

TEST_CASE("classify prints the full verdict block for the sample") {
    RunConfig config;
    config.command = "classify";
    config.inputs = {kSample};
    config.output_format = "machine";
    config.bound = 2;
    const Outcome got = invoke(config);
    CHECK(got.code == 0);
    CHECK(got.out ==
          "VERDICT indecomposable certified-yes 0\n"
          "VERDICT weak-self-projective certified-yes 2 reason=projective-base\n"
          "VERDICT pullback-flat certified-yes 2 reason=left-act-projective\n"
          "VERDICT delta-reflexive certified-no 0 witness=counit-not-iso{maps=[1]}{sizes=2}\n"
          "VERDICT generated certified-no 0 witness=counit-not-epi{maps=[1]}{sizes=2}\n"
          "VERDICT colocal certified-no 2 "
          "witness=postcompose-not-bijective(catalog-reps-2-->-1){maps=[0,0]}{sizes=2}\n");
}

TEST_CASE("a refuted queried property exits one") {
    RunConfig config;
    config.command = "classify";
    config.inputs = {kSample};
    config.output_format = "machine";
    config.bound = 2;
    config.property = "colocal";
    const Outcome got = invoke(config);
    CHECK(got.code == 1);
    CHECK(got.out.find("VERDICT colocal certified-no") == 0);

    // The same verdict without a queried property is exit zero.
    config.property = "delta-reflexive";
    CHECK(invoke(config).code == 1);
    config.property = "indecomposable";
    CHECK(invoke(config).code == 0);
}

TEST_CASE("star prints the certification report") {
    RunConfig config;
    config.command = "star";
    config.inputs = {kSample};
    config.output_format = "machine";
    config.bound = 3;
    const Outcome got = invoke(config);
    CHECK(got.code == 0);
    CHECK(got.out ==
          "VERDICT indecomposable certified-yes 0\n"
          "VERDICT weakSelfProjective certified-yes 3 reason=projective-base\n"
          "VERDICT pullbackFlat certified-yes 3 reason=left-act-projective\n"
          "VERDICT cEqualsG unknown-at-bound 3 reason=no-certificate-at-bound\n"
          "VERDICT weakStar certified-yes 3 reason=indecomposable-weak-self-projective\n"
          "VERDICT star unknown-at-bound 3 reason=no-certificate-at-bound\n");

    // Unknown verdicts do not fail a property query.
    config.property = "cEqualsG";
    const Outcome queried = invoke(config);
    CHECK(queried.code == 0);
    CHECK(queried.out == "VERDICT cEqualsG unknown-at-bound 3 reason=no-certificate-at-bound\n");
}

TEST_CASE("morita enumerates and certifies candidates for a bare monoid") {
    const std::string path = write_temp("actkit-cli-monoid.act", "monoid 2 0\n0 1\n1 1\n");
    RunConfig config;
    config.command = "morita";
    config.inputs = {path};
    config.output_format = "machine";
    config.bound = 2;
    const Outcome got = invoke(config);
    CHECK(got.code == 0);
    CHECK(got.out == "CERT morita monoid=2 base-size=2 endo-size=2 bound=2 m-checked=4 e-checked=4\n");
}

TEST_CASE("cellular reports the approximation and its initiality") {
    RunConfig config;
    config.command = "cellular";
    config.inputs = {kSample};
    config.output_format = "machine";
    config.bound = 2;
    const Outcome got = invoke(config);
    CHECK(got.code == 0);
    CHECK(got.out ==
          "APPROX kind=coreflection equivalence=true colocal=certified-yes object-size=1\n");

    config.property = "initiality";
    const Outcome init = invoke(config);
    CHECK(init.code == 0);
    CHECK(init.out ==
          "APPROX kind=coreflection equivalence=true colocal=certified-yes object-size=1\n"
          "VERDICT initiality certified-yes 2 reason=colocal-equivalence\n");
}

TEST_CASE("universe lists the representatives up to the bound") {
    const std::string path = write_temp("actkit-cli-monoid.act", "monoid 2 0\n0 1\n1 1\n");
    RunConfig config;
    config.command = "universe";
    config.inputs = {path};
    config.output_format = "machine";
    config.bound = 2;
    const Outcome got = invoke(config);
    CHECK(got.code == 0);
    CHECK(got.out ==
          "UNIVERSE monoid-size=2 bound=2 count=4\n"
          "REP 0 size=0 action=\n"
          "REP 1 size=1 action=0,0\n"
          "REP 2 size=2 action=0,0;1,0\n"
          "REP 3 size=2 action=0,0;1,1\n");
}

TEST_CASE("selftest passes at bound two and is byte-deterministic") {
    RunConfig config;
    config.command = "selftest";
    config.output_format = "machine";
    config.bound = 2;
    const Outcome first = invoke(config);
    const Outcome second = invoke(config);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("SELFTEST PASS") != std::string::npos);
}

TEST_CASE("bad inputs exit two without throwing") {
    RunConfig config;
    config.command = "validate";
    config.inputs = {write_temp("actkit-cli-bad.act", "monoid 2 5\n0 1\n1 1\n")};
    config.output_format = "machine";
    const Outcome parse_error = invoke(config);
    CHECK(parse_error.code == 2);
    CHECK(parse_error.err.find("error:") == 0);
    CHECK(parse_error.err.find(":1:") != std::string::npos);

    RunConfig missing;
    missing.command = "classify";
    missing.output_format = "machine";
    CHECK(invoke(missing).code == 2);

    RunConfig unknown;
    unknown.command = "classify";
    unknown.inputs = {kSample};
    unknown.property = "nonsense";
    CHECK(invoke(unknown).code == 2);

    RunConfig format;
    format.command = "validate";
    format.inputs = {kSample};
    format.output_format = "yaml";
    CHECK(invoke(format).code == 2);

    RunConfig bound;
    bound.command = "classify";
    bound.inputs = {kSample};
    bound.bound = -1;
    CHECK(invoke(bound).code == 2);
}

TEST_CASE("text format renders witnesses in long form") {
    RunConfig config;
    config.command = "classify";
    config.inputs = {kSample};
    config.output_format = "text";
    config.bound = 2;
    config.property = "colocal";
    const Outcome got = invoke(config);
    CHECK(got.code == 1);
    CHECK(got.out.find("colocal: certified-no at bound 2") != std::string::npos);
    CHECK(got.out.find("postcompose-not-bijective") != std::string::npos);
}
