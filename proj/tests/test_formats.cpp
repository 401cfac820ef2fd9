#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "arq/homology.hpp"
#include "arq/io.hpp"
#include "arq/kt.hpp"
#include "arq/models.hpp"
#include "json.hpp"

using namespace arq;

namespace {

std::string fixture_dir = ARQ_FIXTURE_DIR;

std::string slurp(const std::string& name) {
    std::ifstream in(fixture_dir + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int line_of(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.find(needle) != std::string::npos) return no;
    }
    return -1;
}

std::string replaced(std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("bundled fixtures parse to the expected models") {
    Field q = Field::rationals();
    for (int d = 2; d <= 6; ++d) {
        InputDocument doc = load_input(fixture_dir + "/sphere_d" + std::to_string(d) + ".dga");
        REQUIRE(doc.kind == "dga");
        CHECK(doc.dga->space().dims() == std::map<int, int>{{0, 1}, {d, 1}});
        CHECK(serialize(*doc.dga) == serialize(*sphere_dga(q, d)));
    }

    InputDocument wedge = load_input(fixture_dir + "/wedge_s2_s4.dga");
    CHECK(serialize(*wedge.dga) == serialize(*wedge_s2_s4_dga(q)));

    InputDocument trunc = load_input(fixture_dir + "/truncated_poly.dga");
    CHECK(serialize(*trunc.dga) == serialize(*truncated_poly_dga(q)));

    InputDocument twisted = load_input(fixture_dir + "/twisted_sphere5.dga");
    CHECK(serialize(*twisted.dga) == serialize(*twisted_sphere5_dga(q)));
    CHECK(!twisted.dga->differential(2).is_zero());

    InputDocument modular = load_input(fixture_dir + "/sphere_d3_f5.dga");
    CHECK(modular.dga->field().characteristic() == 5);

    InputDocument res = load_input(fixture_dir + "/residue_sphere_d3.dgm");
    REQUIRE(res.kind == "dg_module");
    CHECK(res.module->side() == Side::left);
    CHECK(same_presentation(*res.module, *augmentation_module(sphere_dga(q, 3), Side::left)));

    InputDocument free2 = load_input(fixture_dir + "/free_sphere_d2.dgm");
    CHECK(same_presentation(*free2.module, *regular_module(sphere_dga(q, 2), Side::left)));
}

TEST_CASE("fixture files are canonical serializer output") {
    std::vector<std::string> names = {
        "sphere_d2.dga",         "sphere_d3.dga",   "sphere_d4.dga",     "sphere_d5.dga",
        "sphere_d6.dga",         "wedge_s2_s4.dga", "truncated_poly.dga", "twisted_sphere5.dga",
        "sphere_d3_f5.dga",      "residue_sphere_d3.dgm", "free_sphere_d2.dgm",
        "kt_scrambled_0.ktm",    "kt_scrambled_3.ktm"};
    for (const auto& name : names) {
        CAPTURE(name);
        std::string text = slurp(name);
        InputDocument doc = parse_input(text);
        CHECK(serialize(doc) == text);
    }
}

TEST_CASE("parsing tolerates comments and loose whitespace") {
    std::string text =
        "# cochain model of the circle-free 2-sphere\n"
        "format 1\n"
        "\n"
        "kind   dga   # trailing comment\n"
        "field Q\n"
        "degree 0 e\n"
        "degree 2 s\n"
        "\tunit e\n"
        "product e e e 1\n"
        "product e s s 3/3\n"
        "product s e s 2/2\n";
    InputDocument doc = parse_input(text);
    CHECK(serialize(doc) != text);
    CHECK(serialize(doc) == serialize(*sphere_dga(Field::rationals(), 2)));
    CHECK(serialize(parse_input(serialize(doc))) == serialize(doc));
}

TEST_CASE("a typo'd basis name is reported with its line") {
    std::string good = slurp("sphere_d3.dga");
    std::string bad = replaced(good, "product e s s 1", "product e z s 1");
    int expected_line = line_of(bad, "product e z s 1");
    try {
        parse_input(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == expected_line);
        CHECK(std::string(e.what()).find("unknown basis name 'z'") != std::string::npos);
    }
}

TEST_CASE("malformed documents name the first offending line") {
    std::string sphere = slurp("sphere_d3.dga");

    auto expect = [](const std::string& text, const std::string& fragment) {
        try {
            parse_input(text);
            FAIL_CHECK("expected a parse error containing: " << fragment);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };

    expect("kind dga\nformat 1\n", "must start with 'format 1'");
    expect("format 2\nkind dga\n", "unknown format version '2'");
    expect("format 1\nfield Q\n", "missing kind statement");
    expect("format 1\nkind dga\n", "missing field statement");
    expect("format 1\nkind widget\n", "unknown kind 'widget'");
    expect("format 1\nkind dga\nfield F4\n", "field must be 'Q' or 'p=PRIME'");
    expect("format 1\nkind dga\nfield p=6\n", "bad field 'p=6'");
    expect(replaced(sphere, "degree 3 s", "degree 3 s s"), "duplicate basis name 's'");
    expect(replaced(sphere, "degree 3 s", "degree 0 s"), "degree 0 declared twice");
    expect(replaced(sphere, "product s e s 1", "orbit s e s 1"), "unknown statement 'orbit'");
    expect(replaced(sphere, "product s e s 1", "product s e s"), "takes 4 arguments");
    expect(replaced(sphere, "product e s s 1", "product e s s 7/0"), "bad coefficient '7/0'");
    expect(replaced(sphere, "product e s s 1", "product e s e 1"),
           "product record degrees do not add up");
    std::string twisted = slurp("twisted_sphere5.dga");
    expect(replaced(twisted, "differential a b 1", "differential a p 1"),
           "record target sits in the wrong degree");
    expect(replaced(sphere, "unit e\n", ""), "missing unit statement");
    expect(replaced(sphere, "unit e", "unit s"), "the unit must sit in degree 0");
    expect(sphere + "action e s s 1\n", "action records need kind dg_module");
    expect(sphere + "t s e 1\n", "t records need kind kt_module");

    std::string residue = slurp("residue_sphere_d3.dgm");
    expect(replaced(residue, "side left\n", ""), "missing side statement");
    expect(replaced(residue, "side left", "side up"), "side must be 'left' or 'right'");

    std::string kt = slurp("kt_scrambled_0.ktm");
    expect(replaced(kt, "d 2\n", ""), "missing d statement");
    expect(replaced(kt, "field Q", "field p=5"), "kt modules require characteristic zero");
    expect(replaced(kt, "d 2", "d 1"), "d must be at least 2");
    expect(kt + "product e e e 1\n", "product records need kind dga or dg_module");
}

TEST_CASE("field mismatch between declaration and coefficients") {
    std::string f5 = slurp("sphere_d3_f5.dga");
    std::string bad = replaced(f5, "product e s s 1", "product e s s 1/3");
    CHECK_NOTHROW(parse_input(bad));
    std::string worse = replaced(f5, "product e s s 1", "product e s s 1/5");
    try {
        parse_input(worse);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad coefficient '1/5'") != std::string::npos);
    }
}

TEST_CASE("kt corpus matches its recorded block multisets") {
    std::ifstream in(fixture_dir + "/kt_manifest.json");
    REQUIRE(in.good());
    nlohmann::json manifest = nlohmann::json::parse(in);
    REQUIRE(manifest.size() == 6);
    for (const auto& [name, entry] : manifest.items()) {
        CAPTURE(name);
        InputDocument doc = load_input(fixture_dir + "/" + name);
        REQUIRE(doc.kind == "kt_module");
        CHECK(doc.kt->d() == entry["d"].get<int>());
        BlockMultiset want;
        for (const auto& block : entry["blocks"])
            want.entries[{block["j"].get<int>(), block["m"].get<int>()}] =
                block["count"].get<int>();
        CHECK(decompose(*doc.kt) == want);
    }
}

TEST_CASE("reports render into a parseable two-part form") {
    Report rep;
    rep.command = "poincare sphere_d3.dga";
    rep.note("AR triangles exist (both sides), d = 3");
    rep.note("pairing witness in degree 3");
    rep.record("verdict", "true");
    rep.record("d", 3);
    rep.record("unit_ok", "true");

    std::string text = rep.render();
    CHECK(text.find("command: poincare sphere_d3.dga\n") == 0);
    CHECK(text.find("--- machine ---\n") != std::string::npos);
    CHECK(text.find("--- end ---\n") != std::string::npos);

    Report back = parse_report(text);
    CHECK(back.command == rep.command);
    CHECK(back.human == rep.human);
    CHECK(back.machine == rep.machine);
    CHECK(back.render() == text);

    Report bare;
    bare.command = "validate x.dga";
    Report bare_back = parse_report(bare.render());
    CHECK(bare_back.command == bare.command);
    CHECK(bare_back.human.empty());
    CHECK(bare_back.machine.empty());
}

TEST_CASE("mangled reports are rejected") {
    Report rep;
    rep.command = "cohomology residue_sphere_d3.dgm";
    rep.record("h 0", "1");
    std::string text = rep.render();

    auto expect = [](const std::string& text, const std::string& fragment) {
        try {
            parse_report(text);
            FAIL_CHECK("expected a parse error containing: " << fragment);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };

    expect("hello\n", "must start with a command echo");
    expect("command: x\nstray prose\n", "missing machine section");
    expect(replaced(text, "report 1", "report 9"), "unknown report version");
    expect(replaced(text, "command cohomology residue_sphere_d3.dgm\n", ""),
           "machine section must echo the command");
    expect(replaced(text, "command cohomology residue_sphere_d3.dgm",
                    "command cohomology other.dgm"),
           "echoes a different command");
    expect(replaced(text, "--- end ---\n", ""), "unterminated machine section");
}
