#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "ccc/algebra.hpp"
#include "ccc/bounds.hpp"
#include "ccc/catalog.hpp"
#include "ccc/designs.hpp"
#include "ccc/gdcbuild.hpp"
#include "ccc/io.hpp"

namespace ccc {

namespace fs = std::filesystem;

std::string Provenance::str(int indent) const {
    std::ostringstream os;
    os << std::string(indent * 2, ' ') << op;
    if (!params.empty()) os << "(" << params << ")";
    if (!source.empty()) os << " [" << source << "]";
    os << "\n";
    for (const auto& c : children) os << c.str(indent + 1);
    return os.str();
}

namespace {

std::string k_str(const std::vector<int>& K) {
    std::string s = "{";
    for (std::size_t i = 0; i < K.size(); ++i) s += (i ? "," : "") + std::to_string(K[i]);
    return s + "}";
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

std::string IngredientSpec::str() const {
    switch (kind) {
        case Kind::TD:
            return "TD(" + std::to_string(type.groups()) + "," + std::to_string(type.sizes().empty() ? 0 : type.sizes()[0]) + ")";
        case Kind::GDD: return k_str(K) + "-GDD of type " + type.str();
        case Kind::RGDD: return k_str(K) + "-RGDD of type " + type.str();
        case Kind::Frame: return k_str(K) + "-frame of type " + type.str();
        case Kind::GDC: return comp.str() + "-GDC(" + std::to_string(d) + ") of type " + type.str();
        case Kind::Code:
            return "(" + std::to_string(n) + "," + std::to_string(d) + "," + comp.str() + ")_" + std::to_string(comp.q()) +
                   " code";
    }
    return "?";
}

IngredientSpec IngredientSpec::gdd(const std::string& type, std::vector<int> K) {
    IngredientSpec s;
    s.kind = Kind::GDD;
    s.type = GddType::parse(type);
    s.K = sorted(std::move(K));
    s.n = s.type.points();
    return s;
}

IngredientSpec IngredientSpec::td(int k, int m) {
    IngredientSpec s;
    s.kind = Kind::TD;
    s.type = GddType::from_sizes(std::vector<int>(k, m));
    s.K = {k};
    s.n = k * m;
    return s;
}

IngredientSpec IngredientSpec::rgdd(const std::string& type, std::vector<int> K) {
    auto s = gdd(type, std::move(K));
    s.kind = Kind::RGDD;
    return s;
}

IngredientSpec IngredientSpec::frame(const std::string& type, std::vector<int> K) {
    auto s = gdd(type, std::move(K));
    s.kind = Kind::Frame;
    return s;
}

IngredientSpec IngredientSpec::code(int n, int d, const Composition& comp) {
    IngredientSpec s;
    s.kind = Kind::Code;
    s.n = n;
    s.d = d;
    s.comp = comp;
    s.type = GddType::from_sizes(std::vector<int>(n, 1));
    return s;
}

IngredientSpec IngredientSpec::gdc(const std::string& type, int d, const Composition& comp) {
    IngredientSpec s;
    s.kind = Kind::GDC;
    s.type = GddType::parse(type);
    s.n = s.type.points();
    s.d = d;
    s.comp = comp;
    return s;
}

namespace {

std::string join_attempts(const IngredientSpec& s, const std::vector<std::string>& a) {
    std::string m = "unresolved " + s.str();
    for (const auto& x : a) m += "; " + x;
    return m;
}

}  // namespace

Unresolved::Unresolved(const IngredientSpec& s, std::vector<std::string> a)
    : Error(join_attempts(s, a)), spec(s), attempts(std::move(a)) {}

namespace {

// a design meets the spec when its type matches and its block sizes lie in K
bool design_matches(const BlockDesign& d, const IngredientSpec& s) {
    if (!(d.type() == s.type)) return false;
    for (auto [k, c] : d.census())
        if (!has(s.K, k)) return false;
    if ((s.kind == IngredientSpec::Kind::RGDD || s.kind == IngredientSpec::Kind::Frame) && !d.resolution) return false;
    return true;
}

bool code_matches(const GroupDivisibleCode& g, const IngredientSpec& s) {
    return g.code.d >= s.d && g.code.comp == s.comp && g.type() == s.type;
}

Resolved make(Artifact a, std::string op, std::string params, std::string source) {
    return {std::move(a), Provenance{std::move(op), std::move(params), std::move(source), {}}};
}

Artifact code_artifact(const GroupDivisibleCode& g, const IngredientSpec& s) {
    if (s.kind == IngredientSpec::Kind::Code) return as_code(g);
    return g;
}

std::optional<Resolved> from_catalog(const IngredientSpec& s) {
    const auto& cat = Catalog::shipped();
    using K = IngredientSpec::Kind;
    const CatalogEntry* e = nullptr;
    switch (s.kind) {
        case K::Code: e = cat.lookup_code(s.n, s.d, s.comp); break;
        case K::GDC: e = cat.lookup_gdc(s.type, s.d, s.comp); break;
        default: e = cat.lookup_design(s.type, s.K, s.kind == K::RGDD || s.kind == K::Frame); break;
    }
    if (!e) return std::nullopt;
    if (e->code) return make(code_artifact(*e->code, s), "catalog", e->id + " " + e->cite, "catalog");
    return make(*e->design, "catalog", e->id + " " + e->cite, "catalog");
}

// TD(k,m) from a field, a Latin square (k = 3) or a product of field TDs
std::optional<BlockDesign> algebraic_td(int k, int m) {
    if (k <= 3) return td_from_latin(LatinSquare::cyclic(m));
    if (m == 1) {
        BlockDesign t;
        t.partition = GroupPartition::singletons(k);
        std::vector<int> b(k);
        for (int i = 0; i < k; ++i) b[i] = i;
        t.blocks = {b};
        t.K = {k};
        return t;
    }
    auto [p, e] = prime_power(m);
    if (p && k <= m + 1) return td_from_field(k, m);
    // split m into prime powers, each must carry k groups
    std::vector<int> parts;
    int r = m;
    for (int f = 2; f <= r; ++f) {
        if (r % f) continue;
        int pe = 1;
        while (r % f == 0) r /= f, pe *= f;
        if (k > pe + 1) return std::nullopt;
        parts.push_back(pe);
    }
    BlockDesign t = td_from_field(k, parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) t = td_product(t, td_from_field(k, parts[i]));
    return t;
}

std::string td_label(int k, int m) {
    if (k <= 3) return "latin square TD(" + std::to_string(k) + "," + std::to_string(m) + ")";
    auto [p, e] = prime_power(m);
    if (p && k <= m + 1) return "field TD(" + std::to_string(k) + "," + std::to_string(m) + ")";
    return "product TD(" + std::to_string(k) + "," + std::to_string(m) + ")";
}

// a verdict that rules the design out before any search
std::optional<std::string> nonexistence(const IngredientSpec& s) {
    auto sizes = s.type.sizes();
    int t = static_cast<int>(sizes.size());
    if (sizes.empty()) return std::nullopt;
    bool uniform = std::all_of(sizes.begin(), sizes.end(), [&](int x) { return x == sizes[0]; });
    std::optional<ExistenceVerdict> v;
    if (s.K.size() == 1 && uniform && s.K[0] == t) v = design_exists(DesignKind::TDk, {t, sizes[0]});
    else if (s.K == std::vector<int>{4} && uniform) v = design_exists(DesignKind::GDD4_gt, {sizes[0], t});
    else if (s.K == std::vector<int>{3} && uniform) v = design_exists(DesignKind::GDD3_gtu, {sizes[0], t, 0});
    else if (s.K == std::vector<int>{3} && t >= 2 &&
             std::all_of(sizes.begin() + 1, sizes.end(), [&](int x) { return x == sizes[1]; }))
        v = design_exists(DesignKind::GDD3_gtu, {sizes[1], t - 1, sizes[0]});
    if (v && v->verdict == ExistenceVerdict::Kind::NotExists) return "NotExists by " + v->theorem;
    return std::nullopt;
}

std::optional<Resolved> design_by_algebra(const IngredientSpec& s) {
    using K = IngredientSpec::Kind;
    auto sizes = s.type.sizes();  // descending
    int t = static_cast<int>(sizes.size());
    if (t < 2) return std::nullopt;
    int m = sizes[0];
    int a = static_cast<int>(std::count(sizes.begin(), sizes.end(), m));

    if (s.kind == K::RGDD) {
        // resolvable TD(k,m) from TD(k+1,m)
        if (a == t && s.K == std::vector<int>{t}) {
            auto td = algebraic_td(t + 1, m);
            if (!td) return std::nullopt;
            return make(resolvable_td(*td), "resolvable_td", td_label(t + 1, m), "algebra");
        }
        return std::nullopt;
    }
    if (s.kind == K::Frame) return std::nullopt;

    if (a == t && has(s.K, t)) {
        auto td = algebraic_td(t, m);
        if (!td) return std::nullopt;
        return make(*td, "td", td_label(t, m), "algebra");
    }
    // m^a x_1..x_s with 0 < x_i < m: truncate the last s groups of a TD(a+s, m)
    int sgroups = t - a;
    bool ok = true;
    for (int k = a; k <= t; ++k) ok = ok && has(s.K, k);
    if (ok) {
        if (auto td = algebraic_td(t, m)) {
            std::vector<int> keep(sizes.begin() + a, sizes.end());
            auto r = truncate_groups(*td, a, keep);
            r.K = s.K;
            std::string p = td_label(t, m) + " keep " + std::to_string(a);
            for (int x : keep) p += " " + std::to_string(x);
            return make(r, "truncate_groups", p, "algebra");
        }
    }
    // (m-1)^s m^(k-s): delete s points of one block of a TD(k,m)
    if (sizes[t - 1] == m - 1 && has(s.K, t) && has(s.K, t - 1)) {
        int sm = static_cast<int>(std::count(sizes.begin(), sizes.end(), m - 1));
        if (sm + a == t) {
            if (auto td = algebraic_td(t, m)) {
                auto r = truncate_block(*td, sm);
                r.K = s.K;
                return make(r, "truncate_block", td_label(t, m) + " s=" + std::to_string(sm), "algebra");
            }
        }
    }
    (void)sgroups;
    return std::nullopt;
}

// groups of sizes given in any order, laid out consecutively
GroupPartition layout(const std::vector<int>& sizes) { return GroupPartition::from_sizes(sizes); }

// the disjoint transversal quadruples {i, g+i, 2g+i, 3g+i} on the first four groups
Prestructure transversal_quads(int g) {
    Prestructure p;
    for (int i = 0; i < g; ++i) p.blocks.push_back({i, g + i, 2 * g + i, 3 * g + i});
    return p;
}

std::optional<Resolved> design_by_search(const IngredientSpec& s, const SearchBudget& budget, std::string& why) {
    using K = IngredientSpec::Kind;
    auto sizes = s.type.sizes();
    int t = static_cast<int>(sizes.size());
    if (s.kind == K::Frame) {
        // Kirkman frame g^4 by cyclic search
        if (s.K == std::vector<int>{3} && t == 4 && sizes[0] == sizes[3]) {
            auto f = kirkman_frame_cyclic(sizes[0], budget);
            return make(f, "kirkman_frame_cyclic", "g=" + std::to_string(sizes[0]), "search");
        }
        why = "no frame search for this type";
        return std::nullopt;
    }
    if (s.kind == K::RGDD) {
        // {3}-RGDD 2^(3k) by the rotational construction
        if (s.K == std::vector<int>{3} && sizes[0] == 2 && sizes[t - 1] == 2 && t % 3 == 0) {
            auto r = rgdd_type2_rotational(t / 3, budget);
            return make(r, "rgdd_type2_rotational", "k=" + std::to_string(t / 3), "search");
        }
        why = "no RGDD search for this type";
        return std::nullopt;
    }
    if (!has(s.K, 3) || !std::all_of(s.K.begin(), s.K.end(), [](int k) { return k == 3 || k == 4; })) {
        why = "hill climbing only completes {3} and {3,4} designs";
        return std::nullopt;
    }
    // g^3 u^1 with g < u <= 3g/2 from a Kirkman frame g^4 with points added to one group
    if (has(s.K, 4) && t == 4) {
        int u = sizes[0], g = sizes[1];
        if (sizes[1] == sizes[3] && u > g && u - g <= g / 2 && g % 2 == 0) {
            IngredientSpec f = IngredientSpec::frame(GddType::from_sizes({g, g, g, g}).str(), {3});
            std::optional<Resolved> fr = from_catalog(f);
            if (!fr) {
                try {
                    fr = make(kirkman_frame_cyclic(g, budget), "kirkman_frame_cyclic", "g=" + std::to_string(g), "search");
                } catch (const Error&) {
                }
            }
            if (fr) {
                auto& frame = std::get<BlockDesign>(fr->artifact);
                auto d = add_points_to_frame(frame, u - g);
                Resolved r = make(d, "add_points_to_frame", "y=" + std::to_string(u - g), "construction");
                r.provenance.children.push_back(fr->provenance);
                return r;
            }
        }
    }
    Prestructure pre;
    GroupPartition groups = layout(sizes);
    std::string pre_src = "no prestructure";
    if (const auto* e = Catalog::shipped().lookup_prestructure(s.type); e && has(s.K, 4)) {
        groups = e->prestructure->groups;
        pre = e->prestructure->pre;
        pre_src = "prestructure " + e->id;
    } else if (has(s.K, 4)) {
        // try the empty prestructure, then transversal quads through four equal groups
        bool parity_ok = true;
        try {
            hill_climb_gdd(groups, {3}, {}, SearchBudget{0, 0, budget.seed, budget.wall});
        } catch (const SearchFailure&) {
        } catch (const Error&) {
            parity_ok = false;
        }
        if (!parity_ok) {
            auto asc = sizes;
            std::sort(asc.begin(), asc.end());
            if (t >= 4 && asc[0] == asc[3]) {
                groups = layout(asc);
                pre = transversal_quads(asc[0]);
                pre_src = "transversal quadruples on four groups of size " + std::to_string(asc[0]);
            }
        }
    }
    try {
        auto d = hill_climb_gdd(groups, s.K, pre, budget);
        return make(d, "hill_climb_gdd", pre_src + " seed " + std::to_string(budget.seed), "search");
    } catch (const SearchFailure& f) {
        why = std::string("hill climbing: ") + f.what();
    } catch (const Error& f) {
        why = std::string("hill climbing: ") + f.what();
    }
    return std::nullopt;
}

long long target_size(const IngredientSpec& s) {
    auto b = optimal_size(s.comp.q(), s.n, s.d, s.comp);
    return b.exact() && b.value ? *b.value : -1;
}

std::optional<Resolved> code_by_algebra(const IngredientSpec& s) {
    if (s.kind != IngredientSpec::Kind::Code) {
        // g^3 GDC of distance 4 and composition [1,1,1] from a Latin square
        auto sizes = s.type.sizes();
        if (s.d <= 4 && s.comp == Composition{1, 1, 1} && sizes.size() == 3 && sizes[0] == sizes[2])
            return make(latin_gdc(sizes[0]), "latin_gdc", "g=" + std::to_string(sizes[0]), "algebra");
        return std::nullopt;
    }
    int n = s.n;
    if (s.comp == Composition{1, 1, 1}) {
        if (s.d == 4 && n % 4 == 3 && n >= 11 && prime_power(n).first) {
            auto a = Catalog::shipped().generator(n);
            std::string src = "tabulated";
            if (!a) a = find_generator(n), src = "searched";
            if (a) return make(prime_power_code(n, *a), "prime_power_code", "n=" + std::to_string(n) + " alpha=" +
                                                                                 std::to_string(*a) + " " + src, "algebra");
        }
        if (s.d == 3 && n >= 7 && prime_power(n).first)
            return make(latin_distance3_code(n), "latin_distance3_code", "field n=" + std::to_string(n), "algebra");
        if (s.d == 3 && n == 4)
            return make(latin_distance3_code(n), "latin_distance3_code", "field n=4", "algebra");
        if (s.d >= 5 && s.d <= 6 && n >= 7) {
            auto c = distance5_code(n);
            if (c.d >= s.d) return make(c, "distance5_code", "n=" + std::to_string(n), "algebra");
        }
    }
    // trivial regimes: fewer points than the weight, or one word
    if (n < s.comp.w()) {
        ConstantCompositionCode c;
        c.n = n;
        c.d = s.d;
        c.comp = s.comp;
        return make(c, "empty_code", "n=" + std::to_string(n), "algebra");
    }
    return std::nullopt;
}

std::optional<Resolved> code_by_search(const IngredientSpec& s, const SearchBudget& budget, std::string& why) {
    if (s.kind != IngredientSpec::Kind::Code) {
        why = "no GDC search for this type";
        return std::nullopt;
    }
    int n = s.n;
    long long target = target_size(s);
    if (target < 0) {
        why = "no exact optimum to aim at";
        return std::nullopt;
    }
    if (s.comp == Composition{1, 1, 1} && s.d == 3 && n >= 7) {
        auto c = latin_distance3_code(n, budget);
        return make(c, "latin_distance3_code", "climber seed " + std::to_string(budget.seed), "search");
    }
    if (s.comp == Composition{1, 1, 1} && s.d == 4 && n >= 10 && target == 1LL * n * ((n - 1) / 2)) {
        if (auto b = search_cyclic_base_codewords(n, budget))
            return make(as_code(develop(*b)), "search_cyclic_base_codewords", "seed " + std::to_string(budget.seed), "search");
        why = "cyclic base search exhausted its budget";
        return std::nullopt;
    }
    if (s.comp == Composition{2, 1} && s.d == 4 && n <= 31) {
        try {
            auto c = hill_climb_code(n, s.d, s.comp, static_cast<std::size_t>(target), budget);
            return make(c, "hill_climb_code", "target " + std::to_string(target) + " seed " + std::to_string(budget.seed),
                        "search");
        } catch (const Error& e) {
            why = e.what();
            return std::nullopt;
        }
    }
    if (n <= 16) {
        try {
            auto c = hill_climb_code(n, s.d, s.comp, static_cast<std::size_t>(target), budget);
            return make(c, "hill_climb_code", "target " + std::to_string(target) + " seed " + std::to_string(budget.seed),
                        "search");
        } catch (const Error& e) {
            why = e.what();
            return std::nullopt;
        }
    }
    why = "no search applies";
    return std::nullopt;
}

std::vector<std::string> library_dirs() {
    std::vector<std::string> out;
    const char* e = std::getenv("CCC_LIBRARY_PATH");
    if (!e) return out;
    std::string s = e, cur;
    for (char c : s) {
        if (c == ':') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::optional<Resolved> from_library(const IngredientSpec& s, std::string& why) {
    auto dirs = library_dirs();
    if (dirs.empty()) {
        why = "CCC_LIBRARY_PATH unset";
        return std::nullopt;
    }
    bool want_code = s.kind == IngredientSpec::Kind::Code || s.kind == IngredientSpec::Kind::GDC;
    int rejected = 0;
    for (const auto& dir : dirs) {
        if (!fs::is_directory(dir)) continue;
        std::vector<std::string> files;
        for (const auto& f : fs::directory_iterator(dir))
            if (f.is_regular_file() && f.path().extension() != ".tmp") files.push_back(f.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            try {
                auto text = read_text_file(path);
                auto magic = file_magic(text);
                if (want_code && magic == "CCC") {
                    auto f = read_code(text);
                    if (code_matches(f.gdc, s)) return make(code_artifact(f.gdc, s), "library", path, "library");
                } else if (want_code && magic == "BASES") {
                    auto g = develop(read_bases(text).bases);
                    require(verify_gdc(g), "library bases");
                    if (code_matches(g, s)) return make(code_artifact(g, s), "library", path, "library");
                } else if (!want_code && magic == "GDD") {
                    auto f = read_design(text);
                    if (design_matches(f.design, s)) return make(f.design, "library", path, "library");
                }
            } catch (const std::exception&) {
                ++rejected;  // unverifiable files are skipped, never served
            }
        }
    }
    why = "no matching file in the library" + (rejected ? " (" + std::to_string(rejected) + " files failed verification)" : std::string());
    return std::nullopt;
}

void check_result(const Resolved& r, const IngredientSpec& s) {
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, BlockDesign>) {
                require(verify_design(a), s.str());
                if (!design_matches(a, s)) throw Error("resolved design does not match " + s.str());
            } else if constexpr (std::is_same_v<T, GroupDivisibleCode>) {
                require(verify_gdc(a), s.str());
                if (!code_matches(a, s)) throw Error("resolved GDC does not match " + s.str());
            } else {
                require(verify_code(a), s.str());
                if (a.n != s.n || a.d < s.d || !(a.comp == s.comp)) throw Error("resolved code does not match " + s.str());
            }
        },
        r.artifact);
}

}  // namespace

Resolved resolve_ingredient(const IngredientSpec& spec, const SearchBudget& budget) {
    using K = IngredientSpec::Kind;
    std::vector<std::string> attempts;
    bool is_code = spec.kind == K::Code || spec.kind == K::GDC;
    auto accept = [&](std::optional<Resolved> r) -> std::optional<Resolved> {
        if (r) check_result(*r, spec);
        return r;
    };

    if (!is_code) {
        if (auto why = nonexistence(spec)) throw Unresolved(spec, {"bounds: " + *why});
    }

    if (auto r = accept(from_catalog(spec))) return *r;
    attempts.push_back("catalog: no entry");

    try {
        if (auto r = accept(is_code ? code_by_algebra(spec) : design_by_algebra(spec))) return *r;
        attempts.push_back("algebra: no construction applies");
    } catch (const Error& e) {
        attempts.push_back(std::string("algebra: ") + e.what());
    }

    std::string why;
    try {
        if (auto r = accept(is_code ? code_by_search(spec, budget, why) : design_by_search(spec, budget, why))) return *r;
        attempts.push_back("search: " + why);
    } catch (const Error& e) {
        attempts.push_back(std::string("search: ") + e.what());
    }

    why.clear();
    if (auto r = accept(from_library(spec, why))) return *r;
    attempts.push_back("library: " + why);
    throw Unresolved(spec, attempts);
}

}  // namespace ccc
