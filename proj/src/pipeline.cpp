#include "ccc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <tuple>

#include "ccc/algebra.hpp"
#include "ccc/catalog.hpp"
#include "ccc/gdcbuild.hpp"

namespace ccc {

std::string status_name(Status s) {
    switch (s) {
        case Status::Optimal: return "Optimal";
        case Status::Suboptimal: return "Suboptimal";
        case Status::Open: return "Open";
        case Status::Unresolved: return "Unresolved";
        case Status::OutOfScope: return "OutOfScope";
        case Status::VerificationFailed: return "VerificationFailed";
    }
    return "?";
}

std::optional<long long> CertifiedCode::intermediate(const std::string& name) const {
    for (const auto& [k, v] : intermediates)
        if (k == name) return v;
    return std::nullopt;
}

std::string Recipe::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Open: os << "Open"; break;
        case Kind::OutOfScope: os << "OutOfScope"; break;
        case Kind::Build: os << route; break;
    }
    if (!cite.empty()) os << " [" << cite << "]";
    if (expected) os << " expected " << *expected;
    for (const auto& s : steps) os << "\n  " << s;
    return os.str();
}

namespace {

const Composition kTernary{2, 1};
const Composition kQuaternary{1, 1, 1};

std::string code_label(int n, int d, const Composition& comp) {
    return "(" + std::to_string(n) + "," + std::to_string(d) + "," + comp.str() + ")";
}

std::string pw(int g, int e) { return std::to_string(g) + "^" + std::to_string(e); }

bool prime_power_3mod4(int n) { return n % 4 == 3 && n >= 11 && prime_power(n).first != 0; }

// d=3 lengths handled by inflating a {4,5,6}-GDD by two:
// {n, TD k, TD m, kept groups, truncated sizes, truncate-block s, adjoined points}
struct D3Row {
    int n, k, m, keep;
    std::vector<int> sizes;
    int block_s;
    int y;
};
const std::vector<D3Row>& d3_rows() {
    static const std::vector<D3Row> rows = {
        {44, 5, 5, 4, {2}, 0, 0},  {47, 5, 5, 4, {3}, 0, 1},  {51, 5, 5, 5, {}, 0, 1},
        {54, 6, 5, 5, {2}, 0, 0},  {59, 6, 5, 5, {4}, 0, 1},  {62, 5, 7, 0, {}, 4, 0},
        {158, 5, 16, 4, {15}, 0, 0}, {167, 5, 17, 4, {15}, 0, 1}, {173, 5, 18, 4, {14}, 0, 1},
    };
    return rows;
}

const D3Row* d3_row(int n) {
    for (const auto& r : d3_rows())
        if (r.n == n) return &r;
    return nullptr;
}

// odd d=4 lengths built from a {3,4}-GDD inflated by four, plus one point
const std::map<int, std::pair<std::string, std::vector<int>>>& gdd_plus_one() {
    static const std::map<int, std::pair<std::string, std::vector<int>>> m = {
        {101, {"7^1 6^3", {3, 4}}},
        {113, {"10^1 6^3", {3}}},
        {125, {"7^1 6^4", {3, 4}}},
    };
    return m;
}

Recipe build(std::string route, std::string cite, std::vector<std::string> steps, long long expected,
             std::vector<int> args = {}) {
    Recipe r;
    r.kind = Recipe::Kind::Build;
    r.route = std::move(route);
    r.cite = std::move(cite);
    r.steps = std::move(steps);
    r.expected = expected;
    r.args = std::move(args);
    return r;
}

Recipe ternary_recipe(int n, long long u) {
    if (n == 3) return build("trivial", "single-word", {"one word on three points"}, u);
    if (n == 15)
        return build("ternary-fill-3x5", "ternary-gdc-3x5",
                     {"GDC 3^5 of size 45 (cyclic bases)", "fill the five groups with the one-word 3-code"}, u);
    if (n == 35) return build("catalog", "ternary-35-table", {"catalog code ternary-d4-n35"}, u);
    if (n % 4 == 3 && n >= 39) {
        int r = n % 12;
        int w = r == 3 ? 0 : r == 7 ? 2 : 4;
        int t = (n - 3 - 2 * w) / 12;
        std::string type = pw(6, t) + (w ? " " + pw(w, 1) : "");
        int cap = w ? 2 * w + 3 : 15;
        return build("ternary-adjoin-3", "ternary-gdd6-inflate-2",
                     {"{3}-GDD " + type + " by hill climbing",
                      "inflate by 2 with the [2,1]-GDC(4) 2^3 of size 6",
                      "GDC 1^12 3^1 of size 49 from GDC 3^5 with four groups filled",
                      "adjoin 3 points: cap with an optimal " + std::to_string(cap) + "-code, arms 1^12 3^1"},
                     u, {t, w});
    }
    if (n <= 31)
        return build("search", "ternary-hill-climb", {"seeded hill climbing to the optimum " + std::to_string(u)}, u);
    return {};
}

Recipe d3_recipe(int n, long long u) {
    if (const auto* row = d3_row(n)) {
        std::string master;
        if (row->block_s)
            master = "TD(" + std::to_string(row->k) + "," + std::to_string(row->m) + ") with " +
                     std::to_string(row->block_s) + " points of one block deleted";
        else if (row->sizes.empty())
            master = "TD(" + std::to_string(row->k) + "," + std::to_string(row->m) + ")";
        else
            master = "TD(" + std::to_string(row->k) + "," + std::to_string(row->m) + ") truncated to groups " +
                     std::to_string(row->m) + "^" + std::to_string(row->keep) + " " + std::to_string(row->sizes[0]) +
                     "^1";
        std::vector<int> inflated;
        if (row->block_s) {
            inflated.assign(row->block_s, 2 * (row->m - 1));
            inflated.resize(row->k, 2 * row->m);
        } else {
            inflated.assign(row->keep ? row->keep : row->k, 2 * row->m);
            for (int x : row->sizes) inflated.push_back(2 * x);
        }
        return build("d3-gdd456-inflate-2", "gdd456-inflate-2",
                     {"master {4,5,6}-GDD: " + master,
                      "inflate by 2 with the [1,1,1]-GDC(3) 2^4, 2^5, 2^6 to the GDC " + GddType::from_sizes(inflated).str(),
                      row->y ? "adjoin one point with optimal distance-3 codes" : "fill the groups with optimal distance-3 codes"},
                     u);
    }
    if (n == 4 || (n >= 7 && prime_power(n).first))
        return build("resolve", "latin-field-d3", {"idempotent quasigroup lambda*a + (1-lambda)*b over GF(n)"}, u);
    if (n >= 7) return build("resolve", "latin-climber-d3", {"min-conflict search for an oriented idempotent quasigroup"}, u);
    return build("search", "small-hill-climb", {"seeded hill climbing to the optimum " + std::to_string(u)}, u);
}

Recipe d4_recipe(int n, long long u) {
    using S = std::vector<std::string>;
    if (n == 3) return build("trivial", "single-word", {"one word on three points"}, u);
    if (n >= 5 && n <= 8) return build("catalog", "quaternary-d4-small", {"catalog code quaternary-d4-n" + std::to_string(n)}, u);
    if (n == 12)
        return build("latin-fill-4", "latin-square-gdc",
                     S{"Latin-square GDC 4^3 of size 48", "fill with optimal 4-codes"}, u);
    if (n % 2 == 0) {
        if (n == 4) return build("search", "small-hill-climb", S{"seeded hill climbing to the optimum " + std::to_string(u)}, u);
        if (n == 14) return build("resolve", "cyclic-d4-search", S{"seeded search for (n-2)/2 cyclic base words"}, u);
        if (n == 16)
            return build("gdc4x4-fill-4", "quaternary-d4-gdc-4x4",
                         S{"GDC 4^4 of size 96 (cyclic bases)", "fill with optimal 4-codes"}, u);
        return build("shorten", "shortening", S{"optimal code of length " + std::to_string(n + 1),
                                                "drop a least-used coordinate with the words through it"},
                     u, {n + 1});
    }
    if (const auto* e = Catalog::shipped().lookup_code(n, 4, kQuaternary); e)
        return build("catalog", e->cite, S{"catalog " + std::string(e->kind == CatalogKind::Code ? "code " : "bases ") + e->id}, u);
    if (prime_power_3mod4(n))
        return build("resolve", "prime-power-d4", S{"words alpha^(2i) <0,1,alpha> + x over GF(" + std::to_string(n) + ")"}, u);
    if (n == 25 || n == 29 || n == 33)
        return build("resolve", "cyclic-d4-search", S{"seeded search for (n-1)/2 cyclic base words"}, u);
    if (n == 77)
        return build("inflate-fano-11", "latin-square-gdc",
                     S{"{3}-GDD 1^7 by hill climbing", "inflate by 11 with the Latin-square GDC 11^3 (363)",
                       "fill the seven groups with optimal 11-codes"},
                     u);
    if (n == 95)
        return build("gdd5-adjoin-11", "gdd34-inflate-4-adjoin-11",
                     S{"{3,4}-GDD 5^3 6^1 from its prestructure", "inflate by 4 with GDCs 4^3 (48) and 4^4 (96)",
                       "GDC 1^20 11^1 (410): adjoin one point to the Latin GDC 10^3, excise an 11-subcode",
                       "adjoin 11 points: cap the 24-group with an optimal 35-code, arms 1^20 11^1"},
                     u);
    if (n == 119)
        return build("gdd5x3-3-adjoin-11", "td-truncate-inflate-6",
                     S{"TD(4,5) truncated to a {3,4}-GDD 5^3 3^1",
                       "inflate by 6 with the Latin GDC 6^3 (108) and the GDC 6^4 (216), size 4320",
                       "GDC 1^30 11^1 (765): GDC 10^4 plus one point, three groups filled with 11-codes",
                       "adjoin 11 points: arms 1^30 11^1, cap the 18-group with an optimal 29-code"},
                     u);
    if (auto it = gdd_plus_one().find(n); it != gdd_plus_one().end())
        return build("gdd34-inflate-4-plus-1", "gdd34-inflate-4-adjoin-1",
                     S{"GDD of type " + it->second.first, "inflate by 4 with GDCs 4^3 (48) and 4^4 (96)",
                       "adjoin one point with optimal (4g+1)-codes"},
                     u);
    if (n % 3 == 0 && (n / 3) % 2 == 1 && n / 3 >= 19)
        return build("triple-3n", "tripling", S{"optimal code of length " + std::to_string(n / 3),
                                                "fill the Latin-square GDC (n/3)^3 with three copies"},
                     u, {n / 3});
    if ((n - 1) % 3 == 0 && ((n - 1) / 3 + 1) % 2 == 1 && (n - 1) / 3 + 1 >= 19)
        return build("triple-3n-2", "tripling", S{"optimal code of length " + std::to_string((n - 1) / 3 + 1),
                                                  "adjoin a point to the Latin-square GDC ((n-1)/3)^3 with three copies"},
                     u, {(n - 1) / 3 + 1});
    if (n == 11) return build("resolve", "prime-power-d4", S{"words alpha^(2i) <0,1,alpha> + x over GF(11)"}, u);
    return {};
}

}  // namespace

Recipe recipe_for(int q, int n, int d, const Composition& comp) {
    Recipe out;
    BoundValue b;
    try {
        b = optimal_size(q, n, d, comp);
    } catch (const Error& e) {
        out.steps = {e.what()};
        return out;
    }
    if (b.kind == BoundValue::Kind::Open) {
        out.kind = Recipe::Kind::Open;
        out.cite = b.source;
        out.steps = {"no optimal code known; upper bound " + (b.value ? std::to_string(*b.value) : std::string("?"))};
        return out;
    }
    if (!b.value) return out;
    long long u = *b.value;
    Recipe r;
    if (q == 3 && comp == kTernary && d == 4) r = ternary_recipe(n, u);
    else if (q == 4 && comp == kQuaternary && d == 3) r = d3_recipe(n, u);
    else if (q == 4 && comp == kQuaternary && d == 4) r = d4_recipe(n, u);
    else if (q == 4 && comp == kQuaternary && d == 5 && n >= 7)
        r = build("resolve", "distance5-cyclic", {"n words developed from <0,1,3> mod n"}, u);
    else if ((q == 4 && comp == kQuaternary) || (q == 3 && comp == kTernary))
        if (n <= 12 && d >= 3) r = build("search", "small-hill-climb", {"seeded hill climbing to the optimum " + std::to_string(u)}, u);
    if (r.kind == Recipe::Kind::OutOfScope && r.steps.empty())
        r.steps = {"no construction for " + code_label(n, d, comp) + " in this library"};
    return r;
}

namespace {

struct Built {
    ConstantCompositionCode code;
    Provenance prov;
};

Provenance node(std::string op, std::string params, std::string source, std::vector<Provenance> children = {}) {
    return Provenance{std::move(op), std::move(params), std::move(source), std::move(children)};
}

class Engine {
public:
    explicit Engine(const SearchBudget& b) : budget_(b) {}

    std::vector<std::pair<std::string, long long>>* notes = nullptr;

    Built optimal(int q, int n, int d, const Composition& comp) {
        auto key = std::make_tuple(q, n, d, comp.weights);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        auto r = recipe_for(q, n, d, comp);
        auto spec = IngredientSpec::code(n, d, comp);
        if (r.kind != Recipe::Kind::Build)
            throw Unresolved(spec, {"recipe: " + std::string(r.kind == Recipe::Kind::Open ? "open case" : "out of scope")});
        Built b = run(r, q, n, d, comp);
        b.code.sort_words();
        require(verify_code(b.code), code_label(n, d, comp));
        if (r.expected && static_cast<long long>(b.code.size()) != *r.expected)
            throw Error(code_label(n, d, comp) + " came out with " + std::to_string(b.code.size()) + " words, expected " +
                        std::to_string(*r.expected));
        cache_[key] = b;
        return b;
    }

private:
    SearchBudget budget_;
    std::map<std::tuple<int, int, int, std::vector<int>>, Built> cache_;

    void note(const std::string& name, long long v) {
        if (notes) notes->push_back({name, v});
    }

    Built ingredient(int q, int n, int d, const Composition& comp) {
        try {
            return optimal(q, n, d, comp);
        } catch (const Unresolved& e) {
            auto a = e.attempts;
            a.push_back("needed as an ingredient");
            throw Unresolved(e.spec, a);
        }
    }

    static const GroupDivisibleCode& catalog_gdc(const std::string& id) {
        const auto* e = Catalog::shipped().find(id);
        if (!e || !e->code) throw Unresolved(IngredientSpec{}, {"catalog entry " + id + " missing or rejected"});
        return *e->code;
    }

    static Provenance catalog_node(const std::string& id) {
        const auto* e = Catalog::shipped().find(id);
        return node("catalog", id + (e ? " " + e->cite : std::string()), "catalog");
    }

    Resolved resolve(const IngredientSpec& s) { return resolve_ingredient(s, budget_); }

    BlockDesign resolve_design(const IngredientSpec& s, Provenance& p) {
        auto r = resolve(s);
        p = r.provenance;
        return std::get<BlockDesign>(r.artifact);
    }

    Built run(const Recipe& r, int q, int n, int d, const Composition& comp) {
        const auto& R = r.route;
        if (R == "trivial") {
            ConstantCompositionCode c;
            c.n = n;
            c.d = d;
            c.comp = comp;
            c.words.push_back(Codeword::from_tuple(n, comp, {0, 1, 2}));
            return {c, node("single_word", code_label(n, d, comp), "construction")};
        }
        if (R == "catalog") {
            const auto* e = Catalog::shipped().lookup_code(n, d, comp);
            if (!e) throw Unresolved(IngredientSpec::code(n, d, comp), {"catalog: no entry"});
            return {as_code(*e->code), catalog_node(e->id)};
        }
        if (R == "resolve" || R == "search") {
            auto res = resolve(IngredientSpec::code(n, d, comp));
            return {std::get<ConstantCompositionCode>(res.artifact), res.provenance};
        }
        if (R == "ternary-fill-3x5") {
            const auto& g = catalog_gdc("ternary-gdc-3x5");
            auto c3 = ingredient(3, 3, 4, kTernary);
            auto f = fill_groups(g, std::vector<std::optional<ConstantCompositionCode>>(g.partition.groups.size(), c3.code));
            return {as_code(f), node("fill_groups", "3^5 with 3-codes", "construction", {catalog_node("ternary-gdc-3x5"), c3.prov})};
        }
        if (R == "ternary-adjoin-3") return ternary_adjoin3(r.args[0], r.args[1]);
        if (R == "d3-gdd456-inflate-2") return d3_inflate(*d3_row(n));
        if (R == "latin-fill-4") {
            auto c4 = ingredient(4, 4, 4, kQuaternary);
            auto L = latin_gdc(4);
            auto f = fill_groups(L, {c4.code, c4.code, c4.code});
            return {as_code(f), node("fill_groups", "Latin GDC 4^3 with 4-codes", "construction",
                                     {node("latin_gdc", "g=4", "algebra"), c4.prov})};
        }
        if (R == "gdc4x4-fill-4") {
            auto c4 = ingredient(4, 4, 4, kQuaternary);
            const auto& g = catalog_gdc("quaternary-d4-gdc-4x4");
            auto f = fill_groups(g, {c4.code, c4.code, c4.code, c4.code});
            return {as_code(f), node("fill_groups", "GDC 4^4 with 4-codes", "construction",
                                     {catalog_node("quaternary-d4-gdc-4x4"), c4.prov})};
        }
        if (R == "shorten") {
            auto b = ingredient(q, r.args[0], d, comp);
            return {shorten(b.code), node("shorten", "from length " + std::to_string(r.args[0]), "construction", {b.prov})};
        }
        if (R == "triple-3n" || R == "triple-3n-2") {
            auto b = ingredient(q, r.args[0], d, comp);
            bool full = R == "triple-3n";
            auto c = full ? triple_3n(b.code) : triple_3n_minus_2(b.code);
            return {c, node(full ? "triple_3n" : "triple_3n_minus_2", "m=" + std::to_string(r.args[0]), "construction",
                            {node("latin_gdc", "g=" + std::to_string(full ? r.args[0] : r.args[0] - 1), "algebra"), b.prov})};
        }
        if (R == "inflate-fano-11") return fano_77();
        if (R == "gdd5-adjoin-11") return gdd5_95();
        if (R == "gdd5x3-3-adjoin-11") return td_119();
        if (R == "gdd34-inflate-4-plus-1") {
            const auto& [type, K] = gdd_plus_one().at(n);
            return gdd34_plus_one(IngredientSpec::gdd(type, K));
        }
        throw Error("unknown route " + R);
    }

    static std::map<int, GroupDivisibleCode> gdc4_ingredients(int w) {
        std::map<int, GroupDivisibleCode> m;
        m[3] = latin_gdc(w);
        m[4] = catalog_gdc("quaternary-d4-gdc-" + std::to_string(w) + "x4");
        return m;
    }

    static std::vector<Provenance> gdc4_nodes(int w) {
        return {node("latin_gdc", "g=" + std::to_string(w), "algebra"),
                catalog_node("quaternary-d4-gdc-" + std::to_string(w) + "x4")};
    }

    static std::string type_of(const GroupDivisibleCode& g) { return g.type().str(); }

    Built ternary_adjoin3(int t, int w) {
        std::string type = pw(6, t) + (w ? " " + pw(w, 1) : "");
        Provenance gp;
        auto gdd = resolve_design(IngredientSpec::gdd(type, {3}), gp);
        std::map<int, GroupDivisibleCode> ing{{3, catalog_gdc("ternary-gdc-2x3")}};
        auto big = inflate(gdd, 2, ing);
        note("GDC " + type_of(big), static_cast<long long>(big.size()));

        const auto& g35 = catalog_gdc("ternary-gdc-3x5");
        auto c3 = ingredient(3, 3, 4, kTernary);
        std::vector<std::optional<ConstantCompositionCode>> fill(g35.partition.groups.size(), c3.code);
        fill.back().reset();
        auto arm = fill_groups(g35, fill);
        note("GDC " + type_of(arm), static_cast<long long>(arm.size()));

        int capg = w ? 2 * w : 12;
        auto cap = ingredient(3, capg + 3, 4, kTernary);
        std::vector<AdjoinRole> roles;
        bool capped = false;
        for (const auto& g : big.partition.groups) {
            if (!capped && static_cast<int>(g.size()) == capg) {
                roles.push_back(AdjoinRole::cap(cap.code));
                capped = true;
            } else {
                roles.push_back(AdjoinRole::arm(arm));
            }
        }
        auto out = adjoin_points(big, 3, roles);
        Provenance p = node("adjoin_points", "y=3", "construction",
                            {node("inflate", "weight 2", "construction", {gp, catalog_node("ternary-gdc-2x3")}),
                             node("fill_groups", "four of five groups of 3^5", "construction",
                                  {catalog_node("ternary-gdc-3x5"), c3.prov}),
                             cap.prov});
        return {as_code(out), p};
    }

    Built d3_inflate(const D3Row& row) {
        Provenance tp;
        auto tdr = resolve(IngredientSpec::td(row.k, row.m));
        tp = tdr.provenance;
        auto td = std::get<BlockDesign>(tdr.artifact);
        BlockDesign master;
        Provenance mp;
        if (row.block_s) {
            // the unmodified group truncation, for the tabulated intermediate only
            auto alt = truncate_groups(td, row.k - 1, {row.m - row.block_s});
            auto alt_gdc = inflate(alt, 2, d3_ingredients());
            note("GDC " + type_of(alt_gdc), static_cast<long long>(alt_gdc.size()));
            master = truncate_block(td, row.block_s);
            mp = node("truncate_block", "s=" + std::to_string(row.block_s), "algebra", {tp});
        } else if (row.sizes.empty()) {
            master = td;
            mp = tp;
        } else {
            master = truncate_groups(td, row.keep, row.sizes);
            mp = node("truncate_groups", "keep " + std::to_string(row.keep), "algebra", {tp});
        }
        auto big = inflate(master, 2, d3_ingredients());
        note("GDC " + type_of(big), static_cast<long long>(big.size()));
        Provenance inf = node("inflate", "weight 2", "construction",
                              {mp, catalog_node("quaternary-d3-gdc-2x4"), catalog_node("quaternary-d3-gdc-2x5"),
                               catalog_node("quaternary-d3-gdc-2x6")});
        std::vector<Provenance> kids{inf};
        GroupDivisibleCode out;
        if (row.y == 0) {
            std::vector<std::optional<ConstantCompositionCode>> fill;
            std::map<int, Built> by;
            for (const auto& g : big.partition.groups) {
                int s = static_cast<int>(g.size());
                if (!by.count(s)) {
                    by[s] = ingredient(4, s, 3, kQuaternary);
                    kids.push_back(by[s].prov);
                }
                fill.push_back(by[s].code);
            }
            out = fill_groups(big, fill);
            return {as_code(out), node("fill_groups", "", "construction", kids)};
        }
        // the odd one out takes the cap; with all groups equal the first does
        auto sizes = big.type().sizes();
        int capg = sizes.back();
        std::vector<AdjoinRole> roles;
        std::map<int, Built> by;
        bool capped = false;
        for (const auto& g : big.partition.groups) {
            int s = static_cast<int>(g.size());
            if (!by.count(s + 1)) {
                by[s + 1] = ingredient(4, s + 1, 3, kQuaternary);
                kids.push_back(by[s + 1].prov);
            }
            if (!capped && s == capg) {
                roles.push_back(AdjoinRole::cap(by[s + 1].code));
                capped = true;
            } else {
                roles.push_back(AdjoinRole::arm(by[s + 1].code));
            }
        }
        out = adjoin_points(big, 1, roles);
        return {as_code(out), node("adjoin_points", "y=1", "construction", kids)};
    }

    static std::map<int, GroupDivisibleCode> d3_ingredients() {
        return {{4, catalog_gdc("quaternary-d3-gdc-2x4")},
                {5, catalog_gdc("quaternary-d3-gdc-2x5")},
                {6, catalog_gdc("quaternary-d3-gdc-2x6")}};
    }

    Built fano_77() {
        Provenance gp;
        auto fano = resolve_design(IngredientSpec::gdd("1^7", {3}), gp);
        auto big = inflate(fano, 11, {{3, latin_gdc(11)}});
        note("GDC " + type_of(big), static_cast<long long>(big.size()));
        auto c11 = ingredient(4, 11, 4, kQuaternary);
        auto out = fill_groups(big, std::vector<std::optional<ConstantCompositionCode>>(big.partition.groups.size(), c11.code));
        return {as_code(out), node("fill_groups", "11-codes", "construction",
                                   {node("inflate", "weight 11", "construction", {gp, node("latin_gdc", "g=11", "algebra")}),
                                    c11.prov})};
    }

    // GDC of type 1^20 11^1: one point onto the Latin GDC 10^3, then the 11-subcode on a group and the point is cut out
    std::pair<GroupDivisibleCode, Provenance> arm_20_11() {
        auto c11 = ingredient(4, 11, 4, kQuaternary);
        auto L = latin_gdc(10);
        auto c31 = as_code(adjoin_points(L, 1, {AdjoinRole::arm(c11.code), AdjoinRole::arm(c11.code), AdjoinRole::arm(c11.code)}));
        note("code (31,4,[1,1,1])", static_cast<long long>(c31.size()));
        auto grp = L.partition.groups[0];
        std::sort(grp.begin(), grp.end());
        grp.push_back(30);
        auto g = excise_subcode(c31, grp);
        note("GDC " + type_of(g), static_cast<long long>(g.size()));
        return {g, node("excise_subcode", "11 points", "construction",
                        {node("adjoin_points", "y=1 onto Latin GDC 10^3", "construction",
                              {node("latin_gdc", "g=10", "algebra"), c11.prov})})};
    }

    // GDC of type 1^30 11^1: one point onto the GDC 10^4, three groups closed with 11-codes
    std::pair<GroupDivisibleCode, Provenance> arm_30_11() {
        auto c11 = ingredient(4, 11, 4, kQuaternary);
        const auto& g = catalog_gdc("quaternary-d4-gdc-10x4");
        auto out = adjoin_points(g, 1, {AdjoinRole::arm(c11.code), AdjoinRole::arm(c11.code), AdjoinRole::arm(c11.code),
                                        AdjoinRole::open_with_y()});
        note("GDC " + type_of(out), static_cast<long long>(out.size()));
        return {out, node("adjoin_points", "y=1, one group left open", "construction",
                          {catalog_node("quaternary-d4-gdc-10x4"), c11.prov})};
    }

    Built adjoin_with(const GroupDivisibleCode& big, int y, int capg, const Built& cap, const GroupDivisibleCode& arm,
                      std::vector<Provenance> kids) {
        std::vector<AdjoinRole> roles;
        bool capped = false;
        for (const auto& g : big.partition.groups) {
            if (!capped && static_cast<int>(g.size()) == capg) {
                roles.push_back(AdjoinRole::cap(cap.code));
                capped = true;
            } else {
                roles.push_back(AdjoinRole::arm(arm));
            }
        }
        if (!capped) throw Error("no group of size " + std::to_string(capg) + " to cap");
        auto out = adjoin_points(big, y, roles);
        kids.push_back(cap.prov);
        return {as_code(out), node("adjoin_points", "y=" + std::to_string(y), "construction", kids)};
    }

    Built gdd5_95() {
        Provenance gp;
        auto gdd = resolve_design(IngredientSpec::gdd("6^1 5^3", {3, 4}), gp);
        auto big = inflate(gdd, 4, gdc4_ingredients(4));
        note("GDC " + type_of(big), static_cast<long long>(big.size()));
        auto [arm, ap] = arm_20_11();
        auto cap = ingredient(4, 35, 4, kQuaternary);
        auto kids = gdc4_nodes(4);
        kids.insert(kids.begin(), gp);
        return adjoin_with(big, 11, 24, cap, arm, {node("inflate", "weight 4", "construction", kids), ap});
    }

    Built td_119() {
        auto tdr = resolve(IngredientSpec::td(4, 5));
        auto master = truncate_groups(std::get<BlockDesign>(tdr.artifact), 3, {3});
        auto big = inflate(master, 6, gdc4_ingredients(6));
        note("GDC " + type_of(big), static_cast<long long>(big.size()));
        auto [arm, ap] = arm_30_11();
        auto cap = ingredient(4, 29, 4, kQuaternary);
        auto kids = gdc4_nodes(6);
        kids.insert(kids.begin(), node("truncate_groups", "5^3 3^1", "algebra", {tdr.provenance}));
        return adjoin_with(big, 11, 18, cap, arm, {node("inflate", "weight 6", "construction", kids), ap});
    }

    Built gdd34_plus_one(const IngredientSpec& s) {
        Provenance gp;
        auto gdd = resolve_design(s, gp);
        auto big = inflate(gdd, 4, gdc4_ingredients(4));
        note("GDC " + type_of(big), static_cast<long long>(big.size()));
        std::vector<AdjoinRole> roles;
        std::map<int, Built> by;
        auto kids = gdc4_nodes(4);
        kids.insert(kids.begin(), gp);
        std::vector<Provenance> top{node("inflate", "weight 4", "construction", kids)};
        for (const auto& g : big.partition.groups) {
            int s1 = static_cast<int>(g.size()) + 1;
            if (!by.count(s1)) {
                by[s1] = ingredient(4, s1, 4, kQuaternary);
                top.push_back(by[s1].prov);
            }
            roles.push_back(AdjoinRole::arm(by[s1].code));
        }
        auto out = adjoin_points(big, 1, roles);
        return {as_code(out), node("adjoin_points", "y=1", "construction", top)};
    }
};

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CertifiedCode run_one(Engine& eng, int q, int n, int d, const Composition& comp) {
    auto t0 = std::chrono::steady_clock::now();
    CertifiedCode c;
    c.q = q;
    c.n = n;
    c.d = d;
    c.comp = comp;
    Recipe r = recipe_for(q, n, d, comp);
    try {
        c.bound = optimal_size(q, n, d, comp);
    } catch (const Error& e) {
        c.status = Status::OutOfScope;
        c.detail = e.what();
        return c;
    }
    if (r.kind == Recipe::Kind::Open) {
        c.status = Status::Open;
        c.detail = r.steps.empty() ? "open" : r.steps[0];
        c.seconds = elapsed(t0);
        return c;
    }
    if (r.kind == Recipe::Kind::OutOfScope) {
        c.status = Status::OutOfScope;
        c.detail = r.steps.empty() ? "out of scope" : r.steps[0];
        return c;
    }
    eng.notes = &c.intermediates;
    try {
        Built b = eng.optimal(q, n, d, comp);
        auto cert = certify(b.code, q, n, d, comp);
        cert.provenance = b.prov;
        cert.intermediates = std::move(c.intermediates);
        c = std::move(cert);
    } catch (const Unresolved& e) {
        c.status = Status::Unresolved;
        c.detail = e.what();
        c.unresolved.push_back(e.spec.str());
        c.unresolved.insert(c.unresolved.end(), e.attempts.begin(), e.attempts.end());
    } catch (const std::exception& e) {
        c.status = Status::VerificationFailed;
        c.detail = e.what();
    }
    eng.notes = nullptr;
    c.seconds = elapsed(t0);
    return c;
}

}  // namespace

CertifiedCode certify(const ConstantCompositionCode& code, int q, int n, int d, const Composition& comp) {
    CertifiedCode c;
    c.q = q;
    c.n = n;
    c.d = d;
    c.comp = comp;
    c.code = code;
    c.report = verify_code(code);
    if (code.n != n) c.report.add("length=" + std::to_string(n), false, "code has length " + std::to_string(code.n));
    if (code.d < d) c.report.add("distance claim", false, "code claims distance " + std::to_string(code.d));
    if (!(code.comp == comp)) c.report.add("composition " + comp.str(), false, "code has " + code.comp.str());
    try {
        c.bound = optimal_size(q, n, d, comp);
    } catch (const Error& e) {
        c.status = c.report.passed ? Status::OutOfScope : Status::VerificationFailed;
        c.detail = e.what();
        return c;
    }
    long long size = static_cast<long long>(code.size());
    if (!c.report.passed) {
        c.status = Status::VerificationFailed;
        c.detail = c.report.summary();
    } else if (c.bound.value && size >= *c.bound.value) {
        // meeting an upper bound certifies optimality even where the exact value is open
        c.status = Status::Optimal;
        c.detail = std::to_string(size) + " = U" + code_label(n, d, comp);
    } else {
        c.status = Status::Suboptimal;
        c.detail = std::to_string(size) + " < " + (c.bound.value ? std::to_string(*c.bound.value) : std::string("?"));
    }
    return c;
}

CertifiedCode build_optimal(int q, int n, int d, const Composition& comp, const SearchBudget& budget) {
    Engine eng(budget);
    return run_one(eng, q, n, d, comp);
}

SweepSummary sweep(int q, int d, const Composition& comp, int from, int to, const SearchBudget& budget, int step) {
    SweepSummary s;
    Engine eng(budget);
    for (int n = from; n <= to; n += std::max(1, step)) {
        auto c = run_one(eng, q, n, d, comp);
        switch (c.status) {
            case Status::Optimal: ++s.optimal; break;
            case Status::Suboptimal: ++s.suboptimal; break;
            case Status::Open: ++s.open; break;
            case Status::Unresolved: ++s.unresolved; break;
            case Status::OutOfScope: ++s.out_of_scope; break;
            case Status::VerificationFailed: ++s.failed; break;
        }
        s.rows.push_back({n, std::move(c)});
    }
    return s;
}

}  // namespace ccc
