#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ccc/catalog.hpp"
#include "ccc/io.hpp"
#include "support.hpp"

using namespace ccc;
namespace fs = std::filesystem;

namespace {

const Composition kT{2, 1};
const Composition kQ{1, 1, 1};

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("ccc-test-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string line_with(const std::string& text, const std::string& prefix, int skip = 0) {
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);)
        if (l.rfind(prefix, 0) == 0 && skip-- == 0) return l;
    return {};
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("the shipped catalog loads without rejects") {
    const auto& c = Catalog::shipped();
    for (const auto& r : c.rejected()) FAIL_CHECK(r.id << ": " << r.detail);
    CHECK(c.entries().size() >= 30);
}

TEST_CASE("lookups") {
    const auto& c = Catalog::shipped();
    const auto* t = c.lookup_code(35, 4, kT);
    REQUIRE(t);
    CHECK(t->code->size() == 291);
    CHECK(c.lookup_code(13, 4, kQ) == nullptr);

    const auto* b = c.lookup_code(65, 4, kQ);
    REQUIRE(b);
    REQUIRE(b->bases);
    CHECK(b->bases->bases.size() == 32);
    CHECK(b->code->size() == 2080);

    CHECK(c.lookup_gdc(GddType::parse("4^4"), 4, kQ) != nullptr);
    CHECK(c.lookup_prestructure(GddType::parse("5^3 6^1")) != nullptr);
    CHECK(c.lookup_design(GddType::parse("2^12"), {3}, true) != nullptr);
    CHECK(c.lookup_design(GddType::parse("2^12"), {4}) == nullptr);
    CHECK(c.generator(47) == 5);
    CHECK(c.generator(43) == 26);
    CHECK_FALSE(c.generator(13).has_value());
}

TEST_CASE("catalog sizes") {
    std::map<std::string, long long> want = {
        {"ternary-d4-n35", 291},          {"quaternary-d4-n5", 6},          {"quaternary-d4-n6", 11},
        {"quaternary-d4-n7", 16},         {"quaternary-d4-n8", 23},         {"quaternary-d4-n21", 210},
        {"quaternary-d4-n35", 595},       {"quaternary-d4-n39", 741},       {"quaternary-d4-n45", 990},
        {"quaternary-d4-n49", 1176},      {"quaternary-d4-n51", 1275},      {"quaternary-d4-n65", 2080},
        {"quaternary-d4-gdc-4x4", 96},    {"quaternary-d4-gdc-6x4", 216},   {"quaternary-d4-gdc-10x4", 600},
        {"quaternary-d3-gdc-2x4", 48},    {"quaternary-d3-gdc-2x5", 80},    {"quaternary-d3-gdc-2x6", 120},
        {"ternary-gdc-2x3", 6},           {"ternary-gdc-3x5", 45},
    };
    for (const auto& [id, size] : want) {
        CAPTURE(id);
        CHECK(static_cast<long long>(testing::entry(id).code->size()) == size);
    }
}

TEST_CASE("verify_all passes on the shipped catalog") {
    for (const auto& c : Catalog::shipped().verify_all()) {
        CAPTURE(c.id);
        CHECK_MESSAGE(c.ok, c.detail);
    }
}

TEST_CASE("a corrupted fixture is rejected with a witness") {
    auto dir = scratch("corrupt");
    fs::create_directories(dir / "code");
    auto text = testing::entry("ternary-d4-n35").text;
    // replace the last codeword by a copy of the first
    auto first = line_with(text, "0:");
    auto lines = text.substr(0, text.rfind('\n', text.size() - 2) + 1) + first + "\n";
    std::ofstream(dir / "code" / "ternary-d4-n35") << lines;
    auto cat = Catalog::load(dir.string());
    CHECK(cat.entries().empty());
    REQUIRE(cat.rejected().size() == 1);
    CHECK(cat.rejected()[0].detail.find(first) != std::string::npos);
    auto checks = cat.verify_all();
    REQUIRE(checks.size() == 1);
    CHECK_FALSE(checks[0].ok);
    fs::remove_all(dir);
}

TEST_CASE("seeding the design library is idempotent") {
    auto dir = scratch("library");
    auto first = seed_design_library((dir / "lib").string());
    CHECK(first == 3);
    std::map<std::string, fs::file_time_type> stamps;
    for (const auto& f : fs::directory_iterator(dir / "lib")) stamps[f.path().string()] = f.last_write_time();
    CHECK(stamps.size() == 3);
    auto second = seed_design_library((dir / "lib").string());
    CHECK(second == first);
    for (const auto& f : fs::directory_iterator(dir / "lib")) CHECK(stamps[f.path().string()] == f.last_write_time());
    for (const auto& f : fs::directory_iterator(dir / "lib")) CHECK(verify_design(load_design_file(f.path().string()).design).passed);
    fs::remove_all(dir);
}

}

TEST_SUITE("io") {

TEST_CASE("code files round-trip") {
    const auto& e = testing::entry("ternary-d4-n35");
    auto f = read_code(e.text);
    CHECK(f.gdc.size() == 291);
    auto again = parse_code(emit_code(f.gdc, f.comments));
    CHECK(again.gdc.code.words == f.gdc.code.words);
    CHECK(emit_code(again.gdc, again.comments) == emit_code(f.gdc, f.comments));
    CHECK(file_magic(e.text) == "CCC");
}

TEST_CASE("emitting sorts codewords canonically") {
    auto c = testing::catalog_code("quaternary-d4-n6");
    auto reversed = c;
    std::reverse(reversed.words.begin(), reversed.words.end());
    CHECK(emit_code(reversed) == emit_code(c));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_code("CCC 1 3 5 4 2 1\n0:1 1:1 2:2\n0:1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_code("CCX 1 3 5 4 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_code("CCC 1 3 5 4 2 1\n0:1 1:1 7:2\n"), Error);
}

TEST_CASE("a design covering a pair twice fails to load with the pair as witness") {
    std::string text = "GDD 1\npoints 6\nK 3\ngroup 0 1\ngroup 2 3\ngroup 4 5\nblock 0 2 4\nblock 0 2 5\n";
    CHECK_NOTHROW(parse_design(text));
    try {
        read_design(text);
        FAIL("expected a verification failure");
    } catch (const Error& e) {
        std::string what = e.what();
        CHECK(what.find("0") != std::string::npos);
        CHECK(what.find("2") != std::string::npos);
    }
}

TEST_CASE("a hill-climbed design survives a file round trip") {
    const auto& p = *testing::entry("gdd34-5x3-6x1").prestructure;
    auto d = hill_climb_gdd(p.groups, {3, 4}, p.pre, SearchBudget{});
    auto dir = scratch("design");
    auto path = (dir / "gdd34-5x3-6x1.gdd").string();
    write_text_file_atomic(path, emit_design(d, {"cite: gdd34-5x3-6x1"}));
    auto back = load_design_file(path);
    CHECK(verify_design(back.design).passed);
    CHECK(back.design.blocks.size() == d.blocks.size());
    CHECK(comment_value(back.comments, "cite") == "gdd34-5x3-6x1");
    CHECK(emit_design(back.design, back.comments) == read_text_file(path));
    fs::remove_all(dir);
}

TEST_CASE("resolutions and base sets round-trip") {
    const auto& r = testing::entry("rgdd3-2x12");
    auto f = read_design(r.text);
    REQUIRE(f.design.resolution);
    CHECK(emit_design(f.design, f.comments) == r.text);

    const auto& b = testing::entry("quaternary-d4-n49");
    auto bf = read_bases(b.text);
    CHECK(emit_bases(bf.bases, bf.comments) == b.text);
}

TEST_CASE("atomic writes leave no temporary behind") {
    auto dir = scratch("atomic");
    auto path = (dir / "x.ccc").string();
    write_text_file_atomic(path, "one\n");
    write_text_file_atomic(path, "two\n");
    CHECK(read_text_file(path) == "two\n");
    CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
    fs::remove_all(dir);
}

}
