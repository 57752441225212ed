#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

struct SearchBudget {
    std::uint64_t max_iterations = 2'000'000;
    int max_restarts = 10;
    std::uint64_t seed = 0;
    std::chrono::milliseconds wall{60'000};
};

// a search ran out of budget; best is the fraction of the target reached
struct SearchFailure : Error {
    double best = 0;
    SearchFailure(const std::string& what, double b) : Error(what), best(b) {}
};

struct Prestructure {
    std::vector<std::vector<int>> blocks;
};

// completes pre with triples to a GDD on the given groups
BlockDesign hill_climb_gdd(const GroupPartition& groups, const std::vector<int>& K, const Prestructure& pre,
                           const SearchBudget& budget);
BlockDesign hill_climb_gdd(const GddType& type, const std::vector<int>& K, const Prestructure& pre,
                           const SearchBudget& budget);

enum class ResolutionMode { Parallel, Holey };

// returns the design with resolution attached, or nullopt
std::optional<BlockDesign> extract_resolution(const BlockDesign& d, ResolutionMode mode,
                                              std::uint64_t max_nodes = 5'000'000);

// for a TD(k+1,m): drop the last group, its points index the parallel classes of the TD(k,m)
BlockDesign resolvable_td(const BlockDesign& td);

BlockDesign add_points_to_frame(const BlockDesign& frame, int y, int group = -1);

enum class CompletionVariant { Append, GroupClass };
BlockDesign complete_rgdd(const BlockDesign& rgdd, int u, CompletionVariant variant = CompletionVariant::Append);

// ingredient(block points in master order, their weights) -> GDD whose group sizes match the weights
using DesignIngredient = std::function<std::optional<BlockDesign>(const std::vector<int>& block,
                                                                  const std::vector<int>& weights)>;
BlockDesign wfc_gdd(const BlockDesign& master, const std::vector<int>& weight, const DesignIngredient& ingredient);

// point x copy j of a weighted point set: offsets[x] + j
std::vector<int> weight_offsets(const std::vector<int>& weight);

BlockDesign kirkman_frame_cyclic(int g, const SearchBudget& budget = {});
BlockDesign rgdd_type2_rotational(int k, const SearchBudget& budget = {});

// one-line provenance of how an artifact was obtained
struct Provenance {
    std::string op;
    std::string params;
    std::string source;  // catalog | algebra | search | library | construction
    std::vector<Provenance> children;

    std::string str(int indent = 0) const;
};

struct IngredientSpec {
    enum class Kind { GDD, TD, RGDD, Frame, GDC, Code };
    Kind kind = Kind::GDD;
    std::vector<int> K;
    GddType type;
    int n = 0, d = 0;
    Composition comp;

    std::string str() const;
    static IngredientSpec gdd(const std::string& type, std::vector<int> K);
    static IngredientSpec td(int k, int m);
    static IngredientSpec rgdd(const std::string& type, std::vector<int> K);
    static IngredientSpec frame(const std::string& type, std::vector<int> K);
    static IngredientSpec code(int n, int d, const Composition& comp);
    static IngredientSpec gdc(const std::string& type, int d, const Composition& comp);
};

struct Unresolved : Error {
    IngredientSpec spec;
    std::vector<std::string> attempts;
    Unresolved(const IngredientSpec& s, std::vector<std::string> a);
};

using Artifact = std::variant<BlockDesign, GroupDivisibleCode, ConstantCompositionCode>;

struct Resolved {
    Artifact artifact;
    Provenance provenance;
};

// catalog -> algebra -> search -> design library on CCC_LIBRARY_PATH
Resolved resolve_ingredient(const IngredientSpec& spec, const SearchBudget& budget = {});

}  // namespace ccc
