#include <doctest.h>

#include <random>

#include "ccc/algebra.hpp"
#include "ccc/bounds.hpp"
#include "ccc/catalog.hpp"
#include "ccc/gdcbuild.hpp"
#include "ccc/io.hpp"
#include "ccc/pipeline.hpp"
#include "support.hpp"

using namespace ccc;

namespace {

const Composition kT{2, 1};
const Composition kQ{1, 1, 1};

Codeword random_word(std::mt19937& rng, int n, const Composition& comp) {
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(comp.w());
    return Codeword::from_tuple(n, comp, pos);
}

// a general word of length n over Z_q, not necessarily of constant composition
Codeword random_vector(std::mt19937& rng, int n, int q) {
    std::vector<Entry> e;
    for (int i = 0; i < n; ++i)
        if (int s = static_cast<int>(rng() % q)) e.push_back({i, s});
    return Codeword(n, e);
}

}  // namespace

TEST_SUITE("property") {

TEST_CASE("hamming distance is a metric") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 3 + static_cast<int>(rng() % 12);
        int q = 2 + static_cast<int>(rng() % 3);
        auto u = random_vector(rng, n, q), v = random_vector(rng, n, q), w = random_vector(rng, n, q);
        CHECK(hamming_distance(u, u) == 0);
        CHECK((hamming_distance(u, v) == 0) == (u == v));
        CHECK(hamming_distance(u, v) == hamming_distance(v, u));
        CHECK(hamming_distance(u, w) <= hamming_distance(u, v) + hamming_distance(v, w));
        CHECK(hamming_distance(u, v) <= n);
    }
}

TEST_CASE("restriction never increases distance") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        auto u = random_word(rng, 12, kQ), v = random_word(rng, 12, kQ);
        std::vector<int> Y;
        for (int i = 0; i < 12; ++i)
            if (rng() & 1) Y.push_back(i);
        CHECK(hamming_distance(restrict(u, Y), restrict(v, Y)) <= hamming_distance(u, v));
    }
}

TEST_CASE("a GDC of type 1^n is the same thing as a code") {
    for (const auto& e : Catalog::shipped().entries()) {
        if (!e.is_plain_code()) continue;
        CAPTURE(e.id);
        auto c = as_code(*e.code);
        auto g = as_gdc(c);
        CHECK(g.type() == GddType::from_sizes(std::vector<int>(c.n, 1)));
        CHECK(verify_code(c).passed == verify_gdc(g).passed);
        CHECK(as_code(g).words == c.words);
    }
    // a non-trivial group type is not a code
    CHECK_THROWS(as_code(*testing::entry("ternary-gdc-3x5").code));
    // and a broken code fails both ways
    auto c = testing::catalog_code("quaternary-d4-n7");
    c.words.push_back(c.words[0]);
    CHECK_FALSE(verify_code(c).passed);
    CHECK_FALSE(verify_gdc(as_gdc(c)).passed);
}

TEST_CASE("weighting is additive over blocks") {
    const auto& g23 = *testing::entry("ternary-gdc-2x3").code;
    for (auto type : {"6^3", "6^4", "6^5", "6^4 2^1", "6^5 4^1"}) {
        CAPTURE(type);
        auto master = hill_climb_gdd(GddType::parse(type), {3}, {}, SearchBudget{});
        auto g = inflate(master, 2, {{3, g23}});
        CHECK(verify_gdc(g).passed);
        CHECK(g.size() == master.blocks.size() * g23.size());
    }
    // mixed block sizes: the census decides the total
    auto trunc = truncate_groups(td_from_field(4, 5), 3, {3});
    auto L6 = latin_gdc(6);
    const auto& g64 = *testing::entry("quaternary-d4-gdc-6x4").code;
    auto g = inflate(trunc, 6, {{3, L6}, {4, g64}});
    auto census = trunc.census();
    CHECK(g.size() == census[3] * L6.size() + census[4] * g64.size());

    // general weights: every block contributes its own ingredient
    auto master = td_from_field(3, 5);
    std::vector<int> w(master.n(), 2);
    std::size_t expected = 0;
    auto ing = [&](const std::vector<int>& blk, const std::vector<int>& ws) -> std::optional<GroupDivisibleCode> {
        CHECK(blk.size() == ws.size());
        expected += g23.size();
        return g23;
    };
    auto h = wfc_gdc(master, w, ing);
    CHECK(h.size() == expected);
}

TEST_CASE("fill and adjoin sizes add up") {
    auto c11 = prime_power_code(11, 2);
    for (int g : {10, 18}) {
        auto L = latin_gdc(g);
        auto capcode = build_optimal(4, g + 1, 4, kQ).code;
        REQUIRE(capcode);
        auto out = adjoin_points(L, 1, {AdjoinRole::cap(*capcode), AdjoinRole::arm(*capcode), AdjoinRole::arm(*capcode)});
        CHECK(out.size() == L.size() + 3 * capcode->size());
    }
    auto L = latin_gdc(11);
    auto filled = fill_groups(L, {c11, std::nullopt, c11});
    CHECK(filled.size() == L.size() + 2 * c11.size());
}

TEST_CASE("constructors only return verified objects") {
    for (int g = 3; g <= 9; ++g) CHECK(verify_gdc(latin_gdc(g)).passed);
    for (int n : {11, 19, 23, 27, 31}) CHECK(verify_code(prime_power_code(n, *find_generator(n))).passed);
    for (int n : {7, 8, 9, 11}) CHECK(verify_code(latin_distance3_code(n)).passed);
    for (int n : {7, 10, 13}) CHECK(verify_code(distance5_code(n)).passed);
    auto c19 = prime_power_code(19, *find_generator(19));
    CHECK(verify_code(shorten(c19)).passed);
    auto t = triple(c19);
    CHECK(verify_code(t.times3).passed);
    CHECK(verify_code(t.times3minus2).passed);
    for (const auto& e : Catalog::shipped().entries()) {
        CAPTURE(e.id);
        if (e.code) CHECK(verify_gdc(*e.code).passed);
        if (e.design) CHECK(verify_design(*e.design).passed);
    }
    for (int n = 3; n <= 31; n += 4) {
        auto c = build_optimal(3, n, 4, kT);
        CAPTURE(n);
        REQUIRE(c.code);
        CHECK(verify_code(*c.code).passed);
        CHECK(c.report.passed);
    }
    for (int n = 18; n <= 30; ++n) {
        auto c = build_optimal(4, n, 4, kQ);
        CAPTURE(n);
        REQUIRE(c.code);
        CHECK(verify_code(*c.code).passed);
    }
}

TEST_CASE("every catalog file re-emits byte-identically") {
    for (const auto& e : Catalog::shipped().entries()) {
        CAPTURE(e.id);
        std::string again;
        switch (e.kind) {
            case CatalogKind::Code: {
                auto f = read_code(e.text);
                again = emit_code(f.gdc, f.comments);
                auto twice = read_code(again);
                CHECK(twice.gdc.code.words == f.gdc.code.words);
                CHECK(verify_gdc(twice.gdc).passed);
                break;
            }
            case CatalogKind::BaseCodewordSet: {
                auto f = read_bases(e.text);
                again = emit_bases(f.bases, f.comments);
                CHECK(verify_gdc(develop(read_bases(again).bases)).passed);
                break;
            }
            case CatalogKind::Design: {
                auto f = read_design(e.text);
                again = emit_design(f.design, f.comments);
                CHECK(verify_design(read_design(again).design).passed);
                break;
            }
            case CatalogKind::Prestructure: {
                auto f = parse_prestructure(e.text);
                again = emit_prestructure(f.groups, f.pre, f.comments);
                break;
            }
            case CatalogKind::Generators: again = e.text; break;
        }
        CHECK(again == e.text);
    }
}

TEST_CASE("built codes re-emit byte-identically") {
    for (auto [q, n, d] : {std::tuple{3, 39, 4}, {4, 31, 4}, {4, 12, 3}}) {
        auto c = build_optimal(q, n, d, q == 3 ? kT : kQ);
        REQUIRE(c.code);
        auto text = emit_code(*c.code, {"status: Optimal"});
        auto f = read_code(text);
        CHECK(emit_code(f.gdc, f.comments) == text);
    }
}

}
