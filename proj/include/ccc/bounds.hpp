#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

struct BoundValue {
    enum class Kind { Exact, UpperBound, Open };
    Kind kind = Kind::Open;
    std::optional<long long> value;
    std::string source;

    bool exact() const { return kind == Kind::Exact; }
    std::string str() const;
};

struct ExistenceVerdict {
    enum class Kind { Exists, NotExists, PossibleException, OutOfRange };
    Kind verdict = Kind::OutOfRange;
    std::string theorem;

    bool possible() const { return verdict == Kind::Exists || verdict == Kind::PossibleException; }
    std::string str() const;
};

std::optional<long long> trivial_size(int n, int d, const Composition& comp);
long long binary_weight3(int n, int d);
BoundValue upper_bound(int n, int d, const Composition& comp);
BoundValue optimal_size(int q, int n, int d, const Composition& comp);

enum class DesignKind { RGDD3, KirkmanFrame, TDk, ITD4, GDD3_gtu, GDD4_gt, GDD4_3tu, GDD4_6tu };

DesignKind parse_design_kind(const std::string& s);

// params by kind: RGDD3 {g,t}; KirkmanFrame {g,t}; TDk {k,m}; ITD4 {n,h};
// GDD3_gtu {g,t,u}; GDD4_gt {g,t}; GDD4_3tu {t,u}; GDD4_6tu {t,u}
ExistenceVerdict design_exists(DesignKind kind, const std::vector<int>& params);

struct OracleBudget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    std::chrono::milliseconds wall{0};
    long long target = 0;  // WitnessOnly: stop once a code this large is found
};

struct OracleResult {
    long long size = 0;
    bool complete = false;  // proven maximum
    std::uint64_t nodes = 0;
    ConstantCompositionCode witness;
};

enum class OracleMode { Exact, WitnessOnly };

// maximum clique over the compatibility graph of all words of composition comp
OracleResult brute_force_optimum(int n, int d, const Composition& comp, OracleMode mode,
                                 OracleBudget budget = {});

std::vector<Codeword> all_words(int n, const Composition& comp);

}  // namespace ccc
