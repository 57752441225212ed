#include <doctest.h>

#include <numeric>

#include "ccc/core.hpp"
#include "ccc/io.hpp"
#include "support.hpp"

using namespace ccc;
using testing::catalog_code;
using testing::shift;
using testing::ternary_six;

TEST_SUITE("core") {

TEST_CASE("hamming distance of equal words is zero") {
    auto u = ternary_six();
    CHECK(hamming_distance(u, u) == 0);
}

TEST_CASE("hamming distance agrees with a direct count") {
    Composition c{1, 1, 1};
    auto u = Codeword::from_tuple(7, c, {0, 1, 5});
    auto v = Codeword::from_tuple(7, c, {0, 2, 6});
    CHECK(hamming_distance(u, v) == 4);
}

TEST_CASE("cyclic shifts of 210001 are pairwise at distance four or more") {
    auto u = ternary_six();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) CHECK(hamming_distance(shift(u, a), shift(u, b)) >= 4);
}

TEST_CASE("composition of words") {
    CHECK(composition_of(ternary_six(), 3) == std::vector<int>{2, 1});
    CHECK(composition_of(Codeword(6, {}), 3) == std::vector<int>{0, 0});
    // <3,2,0> over a 5-point support with q = 4
    auto u = Codeword::from_tuple(5, Composition{1, 1, 1}, {3, 2, 0});
    CHECK(composition_of(u, 4) == std::vector<int>{1, 1, 1});
    CHECK(u.at(3) == 1);
    CHECK(u.at(2) == 2);
    CHECK(u.at(0) == 3);
}

TEST_CASE("tuple form round-trips") {
    Composition t{2, 1};
    auto u = Codeword::from_tuple(10, t, {7, 2, 4});
    CHECK(u.at(2) == 1);
    CHECK(u.at(7) == 1);
    CHECK(u.at(4) == 2);
    auto back = u.to_tuple(t);
    CHECK(Codeword::from_tuple(10, t, back) == u);
}

TEST_CASE("composition parsing and canonical form") {
    CHECK(parse_composition("[2,1]") == Composition{2, 1});
    CHECK(parse_composition("2 1") == Composition{2, 1});
    CHECK_THROWS(parse_composition("1 2"));
    CHECK(canonicalize({0, 1, 2}) == Composition{2, 1});
    CHECK(Composition{2, 1}.str() == "[2,1]");
    CHECK(Composition{1, 1, 1}.q() == 4);
    CHECK(Composition{1, 1, 1}.w() == 3);
}

TEST_CASE("restriction") {
    auto u = ternary_six();
    CHECK(restrict(u, {0, 1, 2, 3, 4, 5}) == u);
    CHECK(restrict(u, {}).weight() == 0);
    auto r = restrict(u, {0, 3});
    CHECK(r.weight() == 1);
    CHECK(r.at(0) == 2);
}

TEST_CASE("malformed codewords are rejected") {
    CHECK_THROWS(Codeword(4, {{4, 1}}));
    CHECK_THROWS(Codeword(4, {{1, 1}, {1, 2}}));
    CHECK_THROWS(Codeword(4, {{1, 0}}));
}

TEST_CASE("relabelling") {
    auto c = catalog_code("ternary-d4-n35");
    std::vector<int> id(35);
    std::iota(id.begin(), id.end(), 0);
    auto same = relabel_points(c, id, 35);
    same.sort_words();
    auto sorted = c;
    sorted.sort_words();
    CHECK(same.words == sorted.words);

    std::vector<int> plus1(35);
    for (int i = 0; i < 35; ++i) plus1[i] = (i + 1) % 35;
    auto moved = relabel_points(c, plus1, 35);
    CHECK(moved.size() == 291);
    CHECK(verify_code(moved).passed);
    auto back = relabel_points(moved, inverse_map(plus1, 35), 35);
    back.sort_words();
    CHECK(back.words == sorted.words);
}

TEST_CASE("verify_code accepts the 35-point ternary code and rejects a duplicate") {
    auto c = catalog_code("ternary-d4-n35");
    CHECK(c.size() == 291);
    CHECK(verify_code(c).passed);
    c.words.push_back(c.words.front());
    auto r = verify_code(c);
    CHECK_FALSE(r.passed);
    CHECK(r.summary().find("FAIL") != std::string::npos);
}

TEST_CASE("verify_code accepts the optimal 5-point quaternary code") {
    auto c = catalog_code("quaternary-d4-n5");
    CHECK(c.size() == 6);
    CHECK(verify_code(c).passed);
}

TEST_CASE("verify_code rejects a wrong composition") {
    ConstantCompositionCode c{5, Composition{2, 1}, 4, {Codeword(5, {{0, 1}, {1, 1}, {2, 1}})}};
    CHECK_FALSE(verify_code(c).passed);
}

TEST_CASE("verify_gdc on the 2^3 and 3^5 ternary GDCs") {
    auto small = *testing::entry("ternary-gdc-2x3").code;
    CHECK(verify_gdc(small).passed);
    CHECK(small.type() == GddType::parse("2^3"));
    CHECK(small.size() == 6);
    auto big = *testing::entry("ternary-gdc-3x5").code;
    CHECK(verify_gdc(big).passed);
    CHECK(big.type() == GddType::parse("3^5"));
    CHECK(big.size() == 45);
}

TEST_CASE("verify_gdc rejects a word with two points in one group") {
    auto g = *testing::entry("ternary-gdc-2x3").code;
    auto groups = g.partition.groups;
    int a = groups[0][0], b = groups[0][1];
    int c = groups[1][0];
    g.code.words.push_back(Codeword(g.code.n, {{a, 1}, {b, 1}, {c, 2}}));
    auto r = verify_gdc(g);
    CHECK_FALSE(r.passed);
}

TEST_CASE("verify_design on a Latin-square TD, a bare prestructure and its completion") {
    auto td = [] {
        BlockDesign d;
        d.partition = GroupPartition::uniform(12, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) d.blocks.push_back({r, 4 + c, 8 + (r + c) % 4});
        d.K = {3};
        return d;
    }();
    CHECK(verify_design(td).passed);

    const auto& pre = *testing::entry("gdd34-5x3-6x1").prestructure;
    BlockDesign bare;
    bare.partition = pre.groups;
    bare.blocks = pre.pre.blocks;
    bare.K = {3, 4};
    auto r = verify_design(bare);
    CHECK_FALSE(r.passed);
    CHECK(r.summary().find("pair") != std::string::npos);

    auto full = hill_climb_gdd(pre.groups, {3, 4}, pre.pre, SearchBudget{});
    CHECK(verify_design(full).passed);
    CHECK(full.census()[3] == 43);
    CHECK(full.census()[4] == 6);
}

TEST_CASE("verify_design rejects a pair covered twice") {
    BlockDesign d;
    d.partition = GroupPartition::uniform(6, 2);
    d.blocks = {{0, 2, 4}, {0, 2, 5}};
    d.K = {3};
    CHECK_FALSE(verify_design(d).passed);
}

TEST_CASE("GDD types") {
    auto t = GddType::parse("5^3 6^1");
    CHECK(t.points() == 21);
    CHECK(t.groups() == 4);
    CHECK(t.str() == "6^1 5^3");
    CHECK(t.sizes() == std::vector<int>{6, 5, 5, 5});
    CHECK_THROWS(GddType::parse("0^2"));
    CHECK_THROWS(GddType::parse(""));
}

}
