#include <doctest.h>

#include <fstream>
#include <string>

#include "actkit/errors.hpp"
#include "actkit/io.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const std::string kSample = std::string(ACTKIT_TEST_DATA_DIR) + "/two_idempotent_theta.act";

}  // namespace

TEST_CASE("the shipped sample parses into a monoid with two acts") {
    const ParsedFile file = parse_act_file(kSample);
    CHECK(file.monoid->size() == 2);
    CHECK(file.monoid->identity() == 0);
    REQUIRE(file.acts.size() == 2);
    CHECK(file.acts[0]->size() == 1);
    CHECK(file.acts[1]->size() == 2);
    CHECK(file.homs.empty());
}

TEST_CASE("text emission is canonical and round-trips") {
    const ParsedFile file = parse_act_file(kSample);
    const std::string canonical = emit_act_text(file);
    const ParsedFile reparsed = parse_act_string(canonical, "canonical");
    CHECK(emit_act_text(reparsed) == canonical);
    CHECK(reparsed.monoid->table() == file.monoid->table());
    REQUIRE(reparsed.acts.size() == file.acts.size());
    for (std::size_t i = 0; i < file.acts.size(); ++i)
        CHECK(reparsed.acts[i]->action() == file.acts[i]->action());
}

TEST_CASE("the JSON mirror round-trips through the same structures") {
    const ParsedFile file = parse_act_file(kSample);
    const std::string json = emit_act_json(file);
    CHECK(json.front() == '{');
    // Dispatch selects the JSON parser on the leading brace.
    const ParsedFile reparsed = parse_act_string(json, "mirror");
    CHECK(emit_act_text(reparsed) == emit_act_text(file));
}

TEST_CASE("homs bind to the act pair preceding them") {
    const std::string text =
        "monoid 2 0\n0 1\n1 1\n"
        "act 1\n0 0\n"
        "act 2\n0 1\n1 1\n"
        "hom\n1\n";
    const ParsedFile file = parse_act_string(text, "inline");
    REQUIRE(file.homs.size() == 1);
    CHECK(file.homs[0].source().size() == 1);
    CHECK(file.homs[0].target().size() == 2);
    CHECK(file.homs[0].map() == Row{1});

    // A single act binds an endomorphism.
    const std::string endo =
        "monoid 2 0\n0 1\n1 1\n"
        "act 2\n0 1\n1 1\n"
        "hom\n1 1\n";
    const ParsedFile efile = parse_act_string(endo, "inline");
    REQUIRE(efile.homs.size() == 1);
    CHECK(efile.homs[0].source().size() == 2);
    CHECK(efile.homs[0].target().size() == 2);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text =
        "# heading\n"
        "monoid 2 0  # inline trailer\n"
        "0 1\n\n1 1\n"
        "# a one-point act\n"
        "act 1\n0 0\n";
    const ParsedFile file = parse_act_string(text, "inline");
    CHECK(file.monoid->size() == 2);
    REQUIRE(file.acts.size() == 1);
}

TEST_CASE("parse errors carry file and line") {
    const auto line_of = [](const std::string& text) {
        try {
            parse_act_string(text, "bad.act");
        } catch (const ParseError& e) {
            CHECK(e.file == "bad.act");
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("monoid 2 5\n0 1\n1 1\n") >= 1);
    CHECK(line_of("frobnicate 2\n") == 1);
    CHECK(line_of("monoid 2 0\n0 1\n") >= 1);             // truncated table
    CHECK(line_of("monoid 2 0\n0 1\n1 9\n") >= 1);        // entry out of range
    CHECK(line_of("monoid 1 0\n0\nact 1\n7 7\n") >= 3);   // act entry out of range
    CHECK(line_of("monoid 1 0\n0\nhom\n0\n") >= 1);       // hom with no act
    // Non-equivariant hom maps are rejected with a location.
    CHECK(line_of("monoid 2 0\n0 1\n1 1\nact 2\n0 1\n1 1\nhom\n1 0\n") >= 1);
    CHECK_THROWS_AS(parse_act_file("/nonexistent/actkit-test.act"), ParseError);
}

TEST_CASE("json parse errors carry the filename") {
    CHECK_THROWS_AS(parse_act_string("{\"acts\": []}", "m.json"), ParseError);
    CHECK_THROWS_AS(parse_act_string("{not json", "m.json"), ParseError);
    try {
        parse_act_string("{\"monoid\": {\"size\": 2, \"identity\": 0, \"table\": [[0,1],[1,0]]},"
                         " \"acts\": [{\"size\": 1, \"action\": [[9,9]]}]}",
                         "m.json");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.file == "m.json");
    }
}

TEST_CASE("map acts and balanced products emit annotated act blocks") {
    const Context ctx = testkit::point_context(testkit::two_idempotent());
    const ActPtr x = share(RightAct::validate(ctx.monoid(), {{0, 0}, {1, 1}}));
    const std::string hom_text = emit_hom_act(hom_act(ctx, x));
    CHECK(hom_text.find("act 2") != std::string::npos);
    CHECK(hom_text.find("# homIndex 0") != std::string::npos);
    CHECK(hom_text.find("# homIndex 1") != std::string::npos);

    const ActPtr y = share(RightAct::regular(ctx.endo_monoid()));
    const std::string tensor_text = emit_tensor_act(tensor_act(ctx, y));
    CHECK(tensor_text.find("# tensorRep 0") != std::string::npos);
}

TEST_CASE("witness rendering is machine-safe in the short form") {
    const MonoidPtr m = testkit::two_idempotent();
    const ActPtr reg = share(RightAct::regular(m));
    const ActPtr pt = share(RightAct::point(m));
    const Witness witness{"counit-not-epi",
                          {ActHom::validate(reg, pt, {0, 0})},
                          {reg, pt},
                          "sample note with spaces"};
    const std::string ref = format_witness_ref(witness);
    CHECK(ref.find(' ') == std::string::npos);
    CHECK(ref.find("counit-not-epi") == 0);
    const std::string full = format_witness(witness);
    CHECK(full.find("counit-not-epi") != std::string::npos);
    CHECK(full.find('\n') != std::string::npos);
}
