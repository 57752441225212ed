#include <doctest.h>

#include "ccc/algebra.hpp"
#include "ccc/bounds.hpp"
#include "ccc/gdcbuild.hpp"
#include "ccc/pipeline.hpp"
#include "support.hpp"

using namespace ccc;
using testing::catalog_code;
using testing::entry;

namespace {

const Composition kT{2, 1};
const Composition kQ{1, 1, 1};

ConstantCompositionCode one_word(int n, const Composition& comp) {
    std::vector<int> t(comp.w());
    for (int i = 0; i < comp.w(); ++i) t[i] = i;
    return {n, comp, 4, {Codeword::from_tuple(n, comp, t)}};
}

// words alpha^(2i) * B + x over GF(n)
BaseCodewordSet multiplier_bases(int n, int alpha, std::vector<std::vector<int>> tuples) {
    BaseCodewordSet b;
    b.development = BaseCodewordSet::Development::Multiplicative;
    b.alpha = alpha;
    b.step = 2;
    b.count = (n - 1) / (2 * static_cast<int>(tuples.size()));
    b.n = n;
    b.d = 4;
    b.comp = kQ;
    for (const auto& t : tuples) b.bases.push_back(Codeword::from_tuple(n, kQ, t));
    return b;
}

ConstantCompositionCode code11() { return prime_power_code(11, 2); }

}  // namespace

TEST_SUITE("gdcbuild") {

TEST_CASE("developing 210001 with stride 3 gives the 2^3 GDC of size 6") {
    BaseCodewordSet b;
    b.n = 6;
    b.d = 4;
    b.comp = kT;
    b.bases = {testing::ternary_six()};
    b.group_stride = 3;
    auto g = develop(b);
    CHECK(verify_gdc(g).passed);
    CHECK(g.size() == 6);
    CHECK(g.type() == GddType::parse("2^3"));
}

TEST_CASE("developed catalog base sets") {
    CHECK(entry("quaternary-d4-n35").code->size() == 595);
    CHECK(entry("quaternary-d4-n21").code->size() == 210);
    CHECK(entry("quaternary-d4-n21").bases->shift == 3);
}

TEST_CASE("multiplier bases written out by hand") {
    auto a = develop(multiplier_bases(37, 3, {{0, 1, 2}, {0, 5, 3}}));
    CHECK(verify_gdc(a).passed);
    CHECK(a.size() == 666);
    CHECK(static_cast<long long>(a.size()) == *upper_bound(37, 4, kQ).value);
    auto b = develop(multiplier_bases(53, 4, {{0, 1, 2}, {0, 5, 17}}));
    CHECK(verify_gdc(b).passed);
    CHECK(b.size() == 1378);
}

TEST_CASE("base codeword search") {
    auto found = search_base_codewords(37, 2);
    REQUIRE(found);
    auto g = develop(*found);
    CHECK(verify_gdc(g).passed);
    CHECK(g.size() == 666);
    CHECK_THROWS(search_base_codewords(19, 1));
    SearchBudget small;
    small.max_iterations = 20000;
    small.wall = std::chrono::milliseconds(2000);
    CHECK_FALSE(search_base_codewords(13, 1, small).has_value());
}

TEST_CASE("cyclic search for odd and even lengths") {
    auto odd = search_cyclic_base_codewords(25);
    REQUIRE(odd);
    auto go = develop(*odd);
    CHECK(verify_gdc(go).passed);
    CHECK(go.size() == 25 * 12);
    auto even = search_cyclic_base_codewords(14);
    REQUIRE(even);
    CHECK(develop(*even).size() == 14 * 6);
}

TEST_CASE("Latin GDCs") {
    CHECK(latin_gdc(3).size() == 27);
    CHECK(latin_gdc(10).size() == 300);
    auto g = latin_gdc(11);
    CHECK(g.size() == 363);
    CHECK(g.type() == GddType::parse("11^3"));
    CHECK(verify_gdc(g).passed);
    CHECK_THROWS(latin_gdc(2));
}

TEST_CASE("prime power codes") {
    auto c47 = prime_power_code(47, 5);
    CHECK(c47.size() == 1081);
    CHECK(verify_code(c47).passed);
    CHECK(prime_power_code(43, 26).size() == 903);
    auto c11 = code11();
    CHECK(c11.size() == 55);
    CHECK(static_cast<long long>(c11.size()) == *optimal_size(4, 11, 4, kQ).value);
    CHECK_THROWS(prime_power_code(47, 1));
}

TEST_CASE("generator search") {
    CHECK(find_generator(59) == 2);
    auto a = find_generator(47);
    REQUIRE(a);
    CHECK(prime_power_condition(47, *a).empty());
    CHECK(prime_power_condition(47, 5).empty());
    CHECK_THROWS(find_generator(7));
}

TEST_CASE("weighting a {3}-GDD 6^5 by two") {
    auto master = hill_climb_gdd(GddType::parse("6^5"), {3}, {}, SearchBudget{});
    auto g = inflate(master, 2, {{3, *entry("ternary-gdc-2x3").code}});
    CHECK(verify_gdc(g).passed);
    CHECK(g.type() == GddType::parse("12^5"));
    CHECK(g.size() == 720);

    // the same through the general form with weight 1 and the one-word GDC 1^3
    std::vector<int> ones(master.n(), 1);
    auto copy = wfc_gdc(master, ones, [](const std::vector<int>&, const std::vector<int>&) {
        return std::optional<GroupDivisibleCode>(as_gdc(one_word(3, kT)));
    });
    CHECK(verify_gdc(copy).passed);
    CHECK(copy.size() == master.blocks.size());
}

TEST_CASE("weighting the truncated TD(4,5) by six gives 4320") {
    auto trunc = truncate_groups(td_from_field(4, 5), 3, {3});
    CHECK(trunc.type() == GddType::parse("5^3 3^1"));
    CHECK(trunc.census()[3] == 10);
    CHECK(trunc.census()[4] == 15);
    auto g = inflate(trunc, 6, {{3, latin_gdc(6)}, {4, *entry("quaternary-d4-gdc-6x4").code}});
    CHECK(verify_gdc(g).passed);
    CHECK(g.type() == GddType::parse("30^3 18^1"));
    CHECK(g.size() == 10 * 108 + 15 * 216);
    CHECK(g.size() == 4320);
}

TEST_CASE("filling groups") {
    const auto& g = *entry("ternary-gdc-3x5").code;
    auto c3 = one_word(3, kT);
    auto full = fill_groups(g, std::vector<std::optional<ConstantCompositionCode>>(5, c3));
    CHECK(full.size() == 50);
    CHECK(full.type() == GddType::parse("1^15"));
    auto c = as_code(full);
    CHECK(certify(c, 3, 15, 4, kT).status == Status::Optimal);

    std::vector<std::optional<ConstantCompositionCode>> four(5, c3);
    four.back().reset();
    auto arm = fill_groups(g, four);
    CHECK(verify_gdc(arm).passed);
    CHECK(arm.size() == 49);
    CHECK(arm.type() == GddType::parse("3^1 1^12"));

    auto none = fill_groups(g, std::vector<std::optional<ConstantCompositionCode>>(5));
    CHECK(none.size() == 45);
    CHECK(none.type() == g.type());

    auto short49 = c;
    short49.words.pop_back();
    CHECK(certify(short49, 3, 15, 4, kT).status == Status::Suboptimal);
}

TEST_CASE("adjoining one point to the Latin GDC 10^3 gives a 31-code of size 465") {
    auto c11 = code11();
    auto g = adjoin_points(latin_gdc(10), 1, {AdjoinRole::cap(c11), AdjoinRole::arm(c11), AdjoinRole::arm(c11)});
    auto c = as_code(g);
    CHECK(verify_code(c).passed);
    CHECK(c.n == 31);
    CHECK(c.size() == 465);

    // excising the capped group with the new point leaves the GDC 1^20 11^1
    auto S = latin_gdc(10).partition.groups[0];
    S.push_back(30);
    auto ex = excise_subcode(c, S);
    CHECK(verify_gdc(ex).passed);
    CHECK(ex.type() == GddType::parse("11^1 1^20"));
    CHECK(ex.size() == 410);
}

TEST_CASE("adjoining nothing with open groups only fills the capped group") {
    auto c10 = build_optimal(4, 10, 4, kQ).code;
    REQUIRE(c10);
    auto g = adjoin_points(latin_gdc(10), 0, {AdjoinRole::cap(*c10), AdjoinRole::open(), AdjoinRole::open()});
    CHECK(verify_gdc(g).passed);
    CHECK(g.size() == 300 + c10->size());
}

TEST_CASE("adjoining three points to the ternary GDC 12^t") {
    for (int t : {3, 4}) {
        auto master = t == 3 ? td_from_latin(LatinSquare::cyclic(6))
                             : hill_climb_gdd(GddType::parse("6^4"), {3}, {}, SearchBudget{});
        auto big = inflate(master, 2, {{3, *entry("ternary-gdc-2x3").code}});
        const auto& g35 = *entry("ternary-gdc-3x5").code;
        std::vector<std::optional<ConstantCompositionCode>> four(5, one_word(3, kT));
        auto cap = as_code(fill_groups(g35, four));
        four.back().reset();
        auto arm = fill_groups(g35, four);
        std::vector<AdjoinRole> roles(t, AdjoinRole::arm(arm));
        roles[0] = AdjoinRole::cap(cap);
        auto c = as_code(adjoin_points(big, 3, roles));
        CHECK(verify_code(c).passed);
        CHECK(c.n == 12 * t + 3);
        CHECK(c.size() == static_cast<std::size_t>(36 * t * t + 13 * t + 1));
    }
}

TEST_CASE("tripling the 11-code") {
    auto c11 = code11();
    auto t = triple(c11);
    CHECK(t.times3.n == 33);
    CHECK(t.times3.size() == 528);
    CHECK(t.times3minus2.n == 31);
    CHECK(t.times3minus2.size() == 465);
    CHECK(verify_code(t.times3).passed);
    CHECK(verify_code(t.times3minus2).passed);
}

TEST_CASE("tripling the exceptional 5-code falls short of the bound") {
    auto c15 = triple_3n(catalog_code("quaternary-d4-n5"));
    CHECK(verify_code(c15).passed);
    CHECK(c15.size() == 3 * 25 + 3 * 6);
    CHECK(*upper_bound(15, 4, kQ).value == 105);
    CHECK(certify(c15, 4, 15, 4, kQ).status == Status::Suboptimal);
}

TEST_CASE("shortening") {
    auto c11 = code11();
    auto s = shorten(c11);
    CHECK(s.n == 10);
    CHECK(s.size() >= 40);
    CHECK_THROWS(shorten(catalog_code("quaternary-d4-n7")));
    auto s35 = shorten(as_code(*entry("quaternary-d4-n35").code));
    CHECK(s35.size() >= 544);
    CHECK(verify_code(s35).passed);
}

TEST_CASE("excising the 19-point subcode of the tripled 19-code") {
    auto c19 = prime_power_code(19, *find_generator(19));
    auto c55 = triple_3n_minus_2(c19);
    CHECK(c55.size() == 55 * 27);
    auto S = latin_gdc(18).partition.groups[0];
    S.push_back(54);
    CHECK(subcode_on(c55, S).size() == 171);
    auto g = excise_subcode(c55, S);
    CHECK(verify_gdc(g).passed);
    CHECK(g.type() == GddType::parse("19^1 1^36"));
    CHECK(g.size() == 1314);
    CHECK(g.size() == 36 * (36 + 37) / 2);

    auto none = excise_subcode(c55, {});
    CHECK(none.size() == c55.size());
    CHECK(none.type() == GddType::parse("1^55"));
}

TEST_CASE("hill climbing small codes") {
    auto c = hill_climb_code(7, 4, kQ, 16);
    CHECK(c.size() == 16);
    CHECK(verify_code(c).passed);
    SearchBudget b;
    b.max_iterations = 5000;
    b.max_restarts = 1;
    CHECK_THROWS_AS(hill_climb_code(5, 4, kQ, 7, b), SearchFailure);
}

TEST_CASE("distance three and five constructions") {
    auto d3 = latin_distance3_code(7);
    CHECK(d3.size() == 42);
    CHECK(verify_code(d3).passed);
    auto d5 = distance5_code(9);
    CHECK(d5.size() == 9);
    CHECK(verify_code(d5).passed);
}

}
