#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccc/bounds.hpp"
#include "ccc/core.hpp"
#include "ccc/designs.hpp"

namespace ccc {

struct Recipe {
    enum class Kind { Build, Open, OutOfScope };
    Kind kind = Kind::OutOfScope;
    std::string route;  // dispatch key
    std::string cite;   // descriptive tag of the construction
    std::vector<std::string> steps;
    std::optional<long long> expected;
    std::vector<int> args;

    std::string str() const;
};

enum class Status { Optimal, Suboptimal, Open, Unresolved, OutOfScope, VerificationFailed };
std::string status_name(Status s);

struct CertifiedCode {
    int q = 0, n = 0, d = 0;
    Composition comp;
    std::optional<ConstantCompositionCode> code;
    Provenance provenance;
    VerificationReport report;
    BoundValue bound;
    Status status = Status::Unresolved;
    std::string detail;
    // sizes of named intermediate objects, in construction order
    std::vector<std::pair<std::string, long long>> intermediates;
    // missing ingredient followed by the sources tried
    std::vector<std::string> unresolved;
    double seconds = 0;

    std::optional<long long> intermediate(const std::string& name) const;
};

Recipe recipe_for(int q, int n, int d, const Composition& comp);
CertifiedCode build_optimal(int q, int n, int d, const Composition& comp, const SearchBudget& budget = {});
// never mutates c
CertifiedCode certify(const ConstantCompositionCode& c, int q, int n, int d, const Composition& comp);

struct SweepRow {
    int n = 0;
    CertifiedCode result;
};

struct SweepSummary {
    std::vector<SweepRow> rows;
    int optimal = 0, suboptimal = 0, open = 0, unresolved = 0, out_of_scope = 0, failed = 0;
};

// n = from, from+step, ... <= to; ingredients are shared between lengths
SweepSummary sweep(int q, int d, const Composition& comp, int from, int to, const SearchBudget& budget = {},
                   int step = 1);

}  // namespace ccc
