#include <doctest.h>

#include "ccc/bounds.hpp"

using namespace ccc;

namespace {
const Composition kT{2, 1};
const Composition kQ{1, 1, 1};
}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("trivial sizes") {
    CHECK(trivial_size(4, 2, kT) == 12);
    CHECK(trivial_size(9, 6, kQ) == 3);
    CHECK(trivial_size(9, 7, kQ) == 1);
    CHECK_FALSE(trivial_size(9, 4, kQ).has_value());
}

TEST_CASE("binary weight-three packing numbers") {
    CHECK(binary_weight3(7, 4) == 7);
    CHECK(binary_weight3(5, 4) == 2);
    CHECK(binary_weight3(6, 6) == 2);
}

TEST_CASE("upper bounds") {
    CHECK(upper_bound(35, 4, kT).value == 291);
    CHECK(upper_bound(19, 4, kQ).value == 171);
    CHECK(upper_bound(44, 3, kQ).value == 1892);
    CHECK(upper_bound(39, 4, kT).value == 364);
}

TEST_CASE("optimal sizes") {
    auto six = optimal_size(4, 6, 4, kQ);
    CHECK(six.exact());
    CHECK(six.value == 11);
    auto thirteen = optimal_size(4, 13, 4, kQ);
    CHECK(thirteen.kind == BoundValue::Kind::Open);
    auto d5 = optimal_size(4, 7, 5, kQ);
    CHECK(d5.exact());
    CHECK(d5.value == 7);
    CHECK(optimal_size(4, 5, 4, kQ).value == 6);
    CHECK(optimal_size(4, 7, 4, kQ).value == 16);
    CHECK(optimal_size(4, 8, 4, kQ).value == 23);
    CHECK(optimal_size(3, 43, 4, kT).value == 444);
    for (int n : {9, 13, 15, 17}) CHECK(optimal_size(4, n, 4, kQ).kind == BoundValue::Kind::Open);
}

TEST_CASE("design existence") {
    CHECK(design_exists(DesignKind::GDD3_gtu, {6, 5, 0}).verdict == ExistenceVerdict::Kind::Exists);
    CHECK(design_exists(DesignKind::GDD4_gt, {2, 4}).verdict == ExistenceVerdict::Kind::NotExists);
    CHECK(design_exists(DesignKind::GDD4_gt, {6, 4}).verdict == ExistenceVerdict::Kind::NotExists);
    CHECK(design_exists(DesignKind::TDk, {5, 10}).verdict == ExistenceVerdict::Kind::NotExists);
    CHECK(design_exists(DesignKind::TDk, {5, 7}).verdict == ExistenceVerdict::Kind::Exists);
    CHECK(parse_design_kind("TDk") == DesignKind::TDk);
}

TEST_CASE("all words of a composition") {
    CHECK(all_words(4, kT).size() == 12);
    CHECK(all_words(5, kQ).size() == 60);
}

TEST_CASE("exact oracle on small lengths") {
    auto r = brute_force_optimum(5, 4, kQ, OracleMode::Exact);
    CHECK(r.complete);
    CHECK(r.size == 6);
    CHECK(r.witness.size() == 6);
    CHECK(verify_code(r.witness).passed);

    auto t = brute_force_optimum(3, 4, kT, OracleMode::Exact);
    CHECK(t.complete);
    CHECK(t.size == 1);
}

TEST_CASE("exact oracle is reproducible") {
    auto a = brute_force_optimum(6, 4, kT, OracleMode::Exact);
    auto b = brute_force_optimum(6, 4, kT, OracleMode::Exact);
    CHECK(a.size == b.size);
    CHECK(a.witness.words == b.witness.words);
    CHECK(a.size == optimal_size(3, 6, 4, kT).value);
}

}
