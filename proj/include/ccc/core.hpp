#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// counts of symbols 1..q-1; canonical means nonincreasing with no zeros
struct Composition {
    std::vector<int> weights;

    Composition() = default;
    Composition(std::initializer_list<int> w) : weights(w) {}
    explicit Composition(std::vector<int> w) : weights(std::move(w)) {}

    int q() const { return static_cast<int>(weights.size()) + 1; }
    int w() const;
    bool canonical() const;
    std::string str() const;  // "[2,1]"
    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

Composition canonicalize(std::vector<int> counts);
Composition parse_composition(const std::string& s);  // "2,1", "[2,1]" or "2 1"

struct Entry {
    int pos;
    int sym;
    bool operator==(const Entry&) const = default;
    auto operator<=>(const Entry&) const = default;
};

struct Codeword {
    int n = 0;
    std::vector<Entry> support;  // sorted by pos

    Codeword() = default;
    Codeword(int n_, std::vector<Entry> s);

    // the <a1,...,aw> form: the first w1 entries carry symbol 1, the next w2 symbol 2, ...
    static Codeword from_tuple(int n, const Composition& comp, const std::vector<int>& tuple);
    std::vector<int> to_tuple(const Composition& comp) const;

    int weight() const { return static_cast<int>(support.size()); }
    int at(int pos) const;
    std::string str() const;  // "0:1 3:2 5:1"
    bool operator==(const Codeword&) const = default;
    auto operator<=>(const Codeword&) const = default;
};

int hamming_distance(const Codeword& u, const Codeword& v);
std::vector<int> composition_of(const Codeword& u, int q);
Codeword restrict(const Codeword& u, const std::vector<int>& Y);

struct ConstantCompositionCode {
    int n = 0;
    Composition comp;
    int d = 0;
    std::vector<Codeword> words;

    int q() const { return comp.q(); }
    std::size_t size() const { return words.size(); }
    void sort_words();
};

struct GroupPartition {
    int n = 0;
    std::vector<std::vector<int>> groups;

    static GroupPartition singletons(int n);
    static GroupPartition uniform(int n, int g);  // consecutive blocks of size g
    static GroupPartition from_sizes(const std::vector<int>& sizes);
    std::vector<int> group_of() const;  // point -> group index, -1 if uncovered
};

struct GddType {
    std::vector<std::pair<int, int>> entries;  // (size, multiplicity), descending size

    static GddType of(const GroupPartition& p);
    static GddType from_sizes(const std::vector<int>& sizes);
    static GddType parse(const std::string& s);
    std::string str() const;
    int points() const;
    int groups() const;
    std::vector<int> sizes() const;  // descending, expanded
    bool operator==(const GddType&) const = default;
};

struct GroupDivisibleCode {
    GroupPartition partition;
    ConstantCompositionCode code;

    int d() const { return code.d; }
    std::size_t size() const { return code.size(); }
    GddType type() const { return GddType::of(partition); }
};

GroupDivisibleCode as_gdc(const ConstantCompositionCode& c);
ConstantCompositionCode as_code(const GroupDivisibleCode& g);  // requires type 1^n

struct BlockDesign {
    GroupPartition partition;
    std::vector<std::vector<int>> blocks;
    std::vector<int> K;
    std::optional<std::vector<std::vector<int>>> resolution;
    std::optional<std::vector<int>> hole;

    int n() const { return partition.n; }
    GddType type() const { return GddType::of(partition); }
    std::map<int, int> census() const;  // block size -> count
    void normalize();                   // sort blocks and groups, K from census
};

struct Check {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct VerificationReport {
    bool passed = true;
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string witness = {});
    void merge(const VerificationReport& o, const std::string& prefix = {});
    std::string summary() const;
};

VerificationReport verify_code(const ConstantCompositionCode& c);
VerificationReport verify_gdc(const GroupDivisibleCode& g);
VerificationReport verify_design(const BlockDesign& b);

// throw Error with the first failing witness
void require(const VerificationReport& r, const std::string& what);

// map[old] = new; must be injective, images within [0, new_n)
Codeword relabel_points(const Codeword& u, const std::vector<int>& map, int new_n);
ConstantCompositionCode relabel_points(const ConstantCompositionCode& c, const std::vector<int>& map, int new_n);
GroupDivisibleCode relabel_points(const GroupDivisibleCode& g, const std::vector<int>& map, int new_n);
BlockDesign relabel_points(const BlockDesign& b, const std::vector<int>& map, int new_n);
GroupPartition relabel_points(const GroupPartition& p, const std::vector<int>& map, int new_n);

std::vector<int> inverse_map(const std::vector<int>& map, int new_n);

}  // namespace ccc
