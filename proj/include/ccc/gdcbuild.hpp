#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccc/core.hpp"
#include "ccc/designs.hpp"

namespace ccc {

// base codewords developed either additively mod n or by field multipliers
struct BaseCodewordSet {
    enum class Development { Cyclic, Multiplicative };

    int n = 0;
    int d = 0;
    Composition comp;
    std::vector<Codeword> bases;
    Development development = Development::Cyclic;
    int shift = 1;  // cyclic: x -> x + shift
    int orbit = 0;  // cyclic: shifts per base, 0 means n / gcd(n, shift)
    // multiplicative over GF(n): words alpha^(step*i) * B + x for 0 <= i < count
    int alpha = 0, step = 2, count = 0;
    std::optional<int> group_stride;  // groups {i, i+t, i+2t, ...}

    std::size_t expected_size() const;
};

GroupDivisibleCode develop(const BaseCodewordSet& b);

GroupDivisibleCode latin_gdc(int g);

// prime-power construction; throws naming the failed condition
ConstantCompositionCode prime_power_code(int n, int alpha);
std::optional<int> find_generator(int n);
// empty when alpha passes, otherwise the failed condition
std::string prime_power_condition(int n, int alpha);

std::optional<BaseCodewordSet> search_base_codewords(int n, int t, const SearchBudget& budget = {});
// (n-1)/2 bases <0,b,c> (rounded down) developed mod n; for each symbol the differences to the other two
// cover Z_n* once for odd n, and all but one element for even n
std::optional<BaseCodewordSet> search_cyclic_base_codewords(int n, const SearchBudget& budget = {});

// point x of the master is weighted; an ingredient GDC must have type [w(a) : a in block]
using CodeIngredient = std::function<std::optional<GroupDivisibleCode>(const std::vector<int>& block,
                                                                       const std::vector<int>& weights)>;
GroupDivisibleCode wfc_gdc(const BlockDesign& master, const std::vector<int>& weight, const CodeIngredient& ingredient);
// all weights equal; ingredients looked up by block size
GroupDivisibleCode inflate(const BlockDesign& master, int weight, const std::map<int, GroupDivisibleCode>& by_block_size);

// fillers[i] fills group i when present; unfilled groups persist
GroupDivisibleCode fill_groups(const GroupDivisibleCode& g, const std::vector<std::optional<ConstantCompositionCode>>& fillers);

// role of each master group when y new points are adjoined
struct AdjoinRole {
    enum class Kind { Cap, Arm, Open, OpenWithY };
    Kind kind = Kind::Open;
    // Cap: code of length |G|+y, points |G|..|G|+y-1 are the new ones
    // Arm: GDC of type 1^|G| y^1 (for y = 1 a plain code whose last point is the new one)
    std::optional<GroupDivisibleCode> ingredient;

    static AdjoinRole cap(const ConstantCompositionCode& c) { return {Kind::Cap, as_gdc(c)}; }
    static AdjoinRole arm(const GroupDivisibleCode& g) { return {Kind::Arm, g}; }
    static AdjoinRole arm(const ConstantCompositionCode& c) { return {Kind::Arm, as_gdc(c)}; }
    static AdjoinRole open() { return {Kind::Open, std::nullopt}; }
    static AdjoinRole open_with_y() { return {Kind::OpenWithY, std::nullopt}; }
};

// new points are n..n+y-1; result is a code (type 1^n) unless groups stay open
GroupDivisibleCode adjoin_points(const GroupDivisibleCode& g, int y, const std::vector<AdjoinRole>& roles);

struct TripledCodes {
    ConstantCompositionCode times3;       // length 3n
    ConstantCompositionCode times3minus2; // length 3(n-1)+1
};
TripledCodes triple(const ConstantCompositionCode& c);
ConstantCompositionCode triple_3n(const ConstantCompositionCode& c);
ConstantCompositionCode triple_3n_minus_2(const ConstantCompositionCode& c);

ConstantCompositionCode shorten(const ConstantCompositionCode& c);

GroupDivisibleCode excise_subcode(const ConstantCompositionCode& c, const std::vector<int>& S);

// words of c whose support lies inside S, relabelled onto 0..|S|-1 in the order of S
ConstantCompositionCode subcode_on(const ConstantCompositionCode& c, const std::vector<int>& S);

// generic seeded hill-climber for codes and GDCs with weight-3 words
ConstantCompositionCode hill_climb_code(int n, int d, const Composition& comp, std::size_t target,
                                        const SearchBudget& budget = {},
                                        const std::optional<GroupPartition>& groups = std::nullopt);
GroupDivisibleCode hill_climb_gdc(const GroupPartition& groups, int d, const Composition& comp, std::size_t target,
                                  const SearchBudget& budget = {});

// n(n-1) words of [1,1,1] at distance 3 from an idempotent Latin square with the orientation rule
ConstantCompositionCode latin_distance3_code(int n, const SearchBudget& budget = {});

// n words of [1,1,1] with pairwise distance at least 5
ConstantCompositionCode distance5_code(int n);

}  // namespace ccc
