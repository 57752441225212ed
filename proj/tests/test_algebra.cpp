#include <doctest.h>

#include <algorithm>

#include "ccc/algebra.hpp"

using namespace ccc;

namespace {

bool is_td(const BlockDesign& d, int k, int m) {
    if (!verify_design(d).passed) return false;
    if (d.type() != GddType::from_sizes(std::vector<int>(k, m))) return false;
    return d.blocks.size() == static_cast<std::size_t>(m) * m &&
           std::all_of(d.blocks.begin(), d.blocks.end(), [&](const auto& b) { return static_cast<int>(b.size()) == k; });
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("prime powers") {
    CHECK(is_prime(47));
    CHECK_FALSE(is_prime(49));
    CHECK(prime_power(49) == std::pair{7, 2});
    CHECK(prime_power(16) == std::pair{2, 4});
    CHECK(prime_power(6) == std::pair{0, 0});
}

TEST_CASE("finite fields") {
    auto f = make_field(47);
    CHECK(f.q == 47);
    CHECK(f.order(f.generator()) == 46);
    CHECK(f.is_generator(5));

    auto g = make_field(16);
    CHECK(g.p == 2);
    CHECK(g.k == 4);
    CHECK(g.modulus.size() == 5);
    CHECK(g.order(g.generator()) == 15);
    for (int a = 1; a < 16; ++a) {
        CHECK(g.mul(a, g.inv(a)) == 1);
        CHECK(g.add(a, g.neg(a)) == 0);
    }
    CHECK_THROWS(make_field(6));
}

TEST_CASE("field axioms hold in GF(9)") {
    auto f = make_field(9);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
}

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(make_field(11)) == std::vector<int>{1, 3, 4, 5, 9});
    CHECK(quadratic_residues(make_field(7)) == std::vector<int>{1, 2, 4});
    for (int q : {5, 9, 13, 25}) {
        auto r = quadratic_residues(make_field(q));
        CHECK(std::find(r.begin(), r.end(), 1) != r.end());
        CHECK(r.size() == static_cast<std::size_t>((q - 1) / 2));
    }
}

TEST_CASE("Latin squares give TD(3,m)") {
    auto L = LatinSquare::cyclic(4);
    CHECK(L.valid());
    CHECK(is_td(td_from_latin(L), 3, 4));
    L.cells[0] = L.cells[1];
    CHECK_FALSE(L.valid());
}

TEST_CASE("field transversal designs") {
    CHECK(is_td(td_from_field(4, 8), 4, 8));
    CHECK(is_td(td_from_field(5, 5), 5, 5));
    CHECK(is_td(td_from_field(3, 2), 3, 2));
    CHECK_THROWS(td_from_field(7, 5));
}

TEST_CASE("product of transversal designs") {
    CHECK(is_td(td_product(td_from_field(3, 2), td_from_field(3, 3)), 3, 6));
    CHECK(is_td(td_product(td_from_field(4, 3), td_from_field(4, 5)), 4, 15));
    BlockDesign single;
    single.partition = GroupPartition::singletons(4);
    single.blocks = {{0, 1, 2, 3}};
    single.K = {4};
    auto one = td_product(td_from_field(4, 5), single);
    CHECK(is_td(one, 4, 5));
}

TEST_CASE("truncating groups of TD(5,5)") {
    auto a = truncate_groups(td_from_field(5, 5), 4, {2});
    CHECK(verify_design(a).passed);
    CHECK(a.type() == GddType::parse("5^4 2^1"));
    CHECK(a.census()[4] == 15);
    CHECK(a.census()[5] == 10);

    auto b = truncate_groups(td_from_field(5, 5), 4, {3});
    CHECK(b.type() == GddType::parse("5^4 3^1"));
    CHECK(b.census()[4] == 10);
    CHECK(b.census()[5] == 15);
}

TEST_CASE("truncating a block") {
    auto a = truncate_block(td_from_field(4, 3), 3);
    CHECK(verify_design(a).passed);
    CHECK(a.type() == GddType::parse("3^1 2^3"));

    auto same = truncate_block(td_from_field(4, 5), 0);
    CHECK(same.blocks.size() == 25);
    CHECK(same.type() == GddType::parse("5^4"));

    // two deleted points: four further blocks through each shrink to triples, the chosen block to a pair
    auto c = truncate_block(td_from_field(4, 5), 2);
    CHECK(verify_design(c).passed);
    CHECK(c.type() == GddType::parse("5^2 4^2"));
    CHECK(c.census()[3] == 8);
    CHECK(c.census()[4] == 16);
}

TEST_CASE("removing a block and three of its points") {
    auto td = td_from_field(4, 8);
    const auto& blk = td.blocks[0];
    auto gof = td.partition.group_of();
    std::vector<int> drop;
    for (int x : blk)
        if (gof[x] != 3) drop.push_back(x);
    auto d = remove_block_and_points(td, 0, drop);
    CHECK(verify_design(d).passed);
    CHECK(d.type() == GddType::parse("7^3 8^1"));
    // every other block meets the three dropped points at most once
    CHECK(d.census()[3] == 21);
    CHECK(d.census()[4] == 64 - 1 - 21);

    int other = -1;
    for (std::size_t i = 1; i < td.blocks.size() && other < 0; ++i)
        if (std::find(td.blocks[i].begin(), td.blocks[i].end(), blk[0]) == td.blocks[i].end())
            other = td.blocks[i][0];
    CHECK_THROWS(remove_block_and_points(td, 0, {blk[0], blk[1], other}));
}

}
