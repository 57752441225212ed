#include "ccc/gdcbuild.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "ccc/algebra.hpp"
#include "ccc/bounds.hpp"

namespace ccc {

namespace {

GroupDivisibleCode checked(GroupDivisibleCode g, const std::string& what) {
    g.code.sort_words();
    require(verify_gdc(g), what);
    return g;
}

ConstantCompositionCode checked(ConstantCompositionCode c, const std::string& what) {
    c.sort_words();
    require(verify_code(c), what);
    return c;
}

void require_fill_distance(const Composition& comp, int d) {
    if (d > 2 * (comp.w() - 1)) throw Error("distance " + std::to_string(d) + " exceeds 2(w-1)");
}

void require_same_kind(const ConstantCompositionCode& a, const ConstantCompositionCode& b) {
    if (a.comp != b.comp) throw Error("ingredient composition " + b.comp.str() + " differs from " + a.comp.str());
    if (b.d < a.d) throw Error("ingredient distance " + std::to_string(b.d) + " below " + std::to_string(a.d));
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Codeword map_word(const Codeword& u, const std::vector<int>& map, int n) {
    std::vector<Entry> s;
    for (const auto& e : u.support) s.push_back({map.at(e.pos), e.sym});
    return Codeword(n, std::move(s));
}

}  // namespace

std::size_t BaseCodewordSet::expected_size() const {
    if (development == Development::Multiplicative) return bases.size() * static_cast<std::size_t>(count) * n;
    int L = orbit ? orbit : n / std::gcd(n, shift);
    return bases.size() * static_cast<std::size_t>(L);
}

GroupDivisibleCode develop(const BaseCodewordSet& b) {
    GroupDivisibleCode g;
    g.code.n = b.n;
    g.code.d = b.d;
    g.code.comp = b.comp;
    std::vector<std::pair<Codeword, std::size_t>> made;  // word, index of base
    if (b.development == BaseCodewordSet::Development::Cyclic) {
        int L = b.orbit ? b.orbit : b.n / std::gcd(b.n, b.shift);
        for (std::size_t i = 0; i < b.bases.size(); ++i)
            for (int k = 0; k < L; ++k) {
                std::vector<Entry> s;
                for (const auto& e : b.bases[i].support) s.push_back({(e.pos + k * b.shift) % b.n, e.sym});
                made.push_back({Codeword(b.n, std::move(s)), i});
            }
    } else {
        auto F = make_field(b.n);
        if (!b.alpha || b.count <= 0) throw Error("multiplicative development needs alpha and count");
        int m0 = F.pow(b.alpha, b.step);
        for (std::size_t i = 0; i < b.bases.size(); ++i) {
            int mult = 1;
            for (int k = 0; k < b.count; ++k, mult = F.mul(mult, m0))
                for (int x = 0; x < b.n; ++x) {
                    std::vector<Entry> s;
                    for (const auto& e : b.bases[i].support) s.push_back({F.add(F.mul(mult, e.pos), x), e.sym});
                    made.push_back({Codeword(b.n, std::move(s)), i});
                }
        }
    }
    std::map<Codeword, std::size_t> seen;
    for (auto& [w, i] : made) {
        auto [it, fresh] = seen.emplace(w, i);
        if (!fresh)
            throw Error("development repeats word " + w.str() + " from bases " + std::to_string(it->second) + " and " +
                        std::to_string(i));
        g.code.words.push_back(w);
    }
    if (b.group_stride) {
        int t = *b.group_stride;
        if (t <= 0 || b.n % t) throw Error("group stride must divide n");
        g.partition.n = b.n;
        for (int i = 0; i < t; ++i) {
            std::vector<int> grp;
            for (int x = i; x < b.n; x += t) grp.push_back(x);
            g.partition.groups.push_back(grp);
        }
    } else {
        g.partition = GroupPartition::singletons(b.n);
    }
    return checked(std::move(g), "develop");
}

GroupDivisibleCode latin_gdc(int g) {
    if (g < 3) throw Error("Latin square GDC needs g >= 3");
    auto L = LatinSquare::cyclic(g);
    Composition comp{1, 1, 1};
    GroupDivisibleCode out;
    out.partition = GroupPartition::uniform(3 * g, g);
    out.code.n = 3 * g;
    out.code.d = 4;
    out.code.comp = comp;
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < g; ++r)
            for (int c = 0; c < g; ++c) {
                int s = (L.at(r, c) + i) % g;
                std::vector<int> t;
                if (i == 0) t = {r, c + g, s + 2 * g};
                if (i == 1) t = {s + 2 * g, r, c + g};
                if (i == 2) t = {c + g, s + 2 * g, r};
                out.code.words.push_back(Codeword::from_tuple(3 * g, comp, t));
            }
    return checked(std::move(out), "latin_gdc");
}

std::string prime_power_condition(int n, int alpha) {
    auto [p, k] = prime_power(n);
    if (!p) return "n is not a prime power";
    if (n % 4 != 3) return "n is not 3 mod 4";
    if (n < 11) return "n is below 11";
    if (alpha <= 0 || alpha >= n) return "alpha is not a nonzero field element";
    auto F = make_field(n);
    if (!F.is_generator(alpha)) return "alpha is not a generator";
    auto qr = quadratic_residues(F);
    if (!std::binary_search(qr.begin(), qr.end(), F.sub(alpha, 1))) return "alpha - 1 is not a quadratic residue";
    if (F.add(F.sub(F.mul(alpha, alpha), alpha), 1) == 0) return "alpha^2 - alpha + 1 is zero";
    return {};
}

ConstantCompositionCode prime_power_code(int n, int alpha) {
    if (auto why = prime_power_condition(n, alpha); !why.empty()) throw Error("prime power construction: " + why);
    BaseCodewordSet b;
    b.n = n;
    b.d = 4;
    b.comp = {1, 1, 1};
    b.bases = {Codeword::from_tuple(n, b.comp, {0, 1, alpha})};
    b.development = BaseCodewordSet::Development::Multiplicative;
    b.alpha = alpha;
    b.step = 2;
    b.count = (n - 1) / 2;
    auto c = as_code(develop(b));
    if (c.size() != static_cast<std::size_t>(n) * (n - 1) / 2) throw Error("prime power code has the wrong size");
    return c;
}

std::optional<int> find_generator(int n) {
    auto [p, k] = prime_power(n);
    if (!p || n % 4 != 3 || n < 11) throw Error("find_generator needs a prime power n = 3 mod 4, n >= 11");
    for (int a = 1; a < n; ++a)
        if (prime_power_condition(n, a).empty()) return a;
    return std::nullopt;
}

namespace {

// pairs (p,p') of positions with the symbols already used at p; weight-3, distance-4 [1,1,1] words
class PairTable {
public:
    explicit PairTable(int n) : n_(n), used_(static_cast<std::size_t>(n) * n, 0) {}

    bool fits(const Codeword& w) const {
        const auto& s = w.support;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && (used_[idx(s[i].pos, s[j].pos)] >> s[i].sym & 1)) return false;
        return !supports_.count(key(w));
    }
    void add(const Codeword& w) {
        const auto& s = w.support;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) used_[idx(s[i].pos, s[j].pos)] |= static_cast<unsigned char>(1u << s[i].sym);
        supports_.insert(key(w));
    }
    void remove(const Codeword& w) {
        const auto& s = w.support;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) used_[idx(s[i].pos, s[j].pos)] &= static_cast<unsigned char>(~(1u << s[i].sym));
        supports_.erase(key(w));
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
    long long key(const Codeword& w) const {
        const auto& s = w.support;
        return (static_cast<long long>(s[0].pos) * n_ + s[1].pos) * n_ + s[2].pos;
    }
    int n_;
    std::vector<unsigned char> used_;
    std::unordered_set<long long> supports_;
};

}  // namespace

std::optional<BaseCodewordSet> search_base_codewords(int n, int t, const SearchBudget& budget) {
    auto [p, k] = prime_power(n);
    if (!p || n % 4 != 1) throw Error("base codeword search needs a prime power n = 1 mod 4");
    if (t <= 0 || (n - 1) % (2 * t)) return std::nullopt;
    auto F = make_field(n);
    Composition comp{1, 1, 1};
    const int count = (n - 1) / (2 * t);
    std::mt19937_64 rng(budget.seed);
    // multipliers need not be generators; the first base is <0,1,c>
    std::vector<int> mults;
    for (int a = 2; a < n; ++a) mults.push_back(a);
    std::shuffle(mults.begin(), mults.end(), rng);
    std::vector<std::pair<int, int>> cands;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            if (a != b) cands.push_back({a, b});
    auto deadline = std::chrono::steady_clock::now() + budget.wall;
    auto out_of_budget = [&](std::uint64_t nodes) {
        return nodes > budget.max_iterations || std::chrono::steady_clock::now() > deadline;
    };
    std::uint64_t nodes = 0;
    for (int alpha : mults) {
        int m0 = F.mul(alpha, alpha);
        if (F.order(m0) < count) continue;
        auto orbit = [&](int a, int b) {
            std::vector<Codeword> ws;
            int mult = 1;
            for (int i = 0; i < count; ++i, mult = F.mul(mult, m0))
                for (int x = 0; x < n; ++x)
                    ws.push_back(Codeword::from_tuple(
                        n, comp, {x, F.add(F.mul(mult, a), x), F.add(F.mul(mult, b), x)}));
            return ws;
        };
        PairTable table(n);
        auto try_add = [&](const std::vector<Codeword>& ws) {
            std::size_t i = 0;
            for (; i < ws.size(); ++i) {
                if (!table.fits(ws[i])) break;
                table.add(ws[i]);
            }
            if (i == ws.size()) return true;
            while (i-- > 0) table.remove(ws[i]);
            return false;
        };
        std::vector<std::pair<int, int>> chosen;
        std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == t) return true;
            if (out_of_budget(++nodes)) return false;
            for (std::size_t c = from; c < cands.size(); ++c) {
                if (chosen.empty() && cands[c].first != 1) continue;
                auto ws = orbit(cands[c].first, cands[c].second);
                if (!try_add(ws)) continue;
                chosen.push_back(cands[c]);
                if (rec(chosen.size() == 1 ? 0 : c + 1)) return true;
                chosen.pop_back();
                for (const auto& w : ws) table.remove(w);
                if (out_of_budget(nodes)) return false;
            }
            return false;
        };
        std::shuffle(cands.begin(), cands.end(), rng);
        if (rec(0)) {
            BaseCodewordSet b;
            b.n = n;
            b.d = 4;
            b.comp = comp;
            for (auto [a, c] : chosen) b.bases.push_back(Codeword::from_tuple(n, comp, {0, a, c}));
            b.development = BaseCodewordSet::Development::Multiplicative;
            b.alpha = alpha;
            b.step = 2;
            b.count = count;
            if (develop(b).size() == static_cast<std::size_t>(n) * (n - 1) / 2) return b;
        }
        if (out_of_budget(nodes)) break;
    }
    return std::nullopt;
}

std::optional<BaseCodewordSet> search_cyclic_base_codewords(int n, const SearchBudget& budget) {
    if (n < 5) throw Error("cyclic base codeword search needs n >= 5");
    // even n: (n-2)/2 bases, so each symbol leaves exactly one difference unused
    const int t = (n - 1) / 2;
    int skipped = n % 2 ? -1 : 0;
    std::vector<char> u1(n), u2(n), u3(n);
    std::set<std::array<int, 3>> shapes;
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> order(n - 1);
    auto deadline = std::chrono::steady_clock::now() + budget.wall;
    std::uint64_t nodes = 0, restart_nodes = 0;
    // support up to translation
    auto shape = [n](int b, int c) {
        std::array<int, 3> s{0, b, c}, best{n, n, n};
        for (int r = 0; r < 3; ++r) {
            std::array<int, 3> t2;
            for (int i = 0; i < 3; ++i) t2[i] = (s[i] - s[r] + n) % n;
            std::sort(t2.begin(), t2.end());
            best = std::min(best, t2);
        }
        return best;
    };
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(chosen.size()) == t) return true;
        ++nodes;
        if (++restart_nodes > budget.max_iterations / std::max(1, budget.max_restarts)) return false;
        if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) return false;
        // the smallest uncovered symbol-1 difference must be b or c of the next base
        int x = 1;
        while (u1[x] || x == skipped) ++x;
        if (skipped == 0) {
            skipped = x;
            if (rec()) return true;
            skipped = 0;
        }
        for (std::size_t k = 0; k < 2 * order.size(); ++k) {
            int y = order[k / 2];
            if (y == x || u1[y] || y == skipped) continue;
            int b = x, c = y;
            if (k % 2) std::swap(b, c);
            if ((3 * b) % n == 0 && (3 * c) % n == 0) continue;  // short orbit
            int e[4] = {(n - b) % n, (c - b + n) % n, (n - c) % n, (b - c + n) % n};
            if (u2[e[0]] || u2[e[1]] || e[0] == e[1] || u3[e[2]] || u3[e[3]] || e[2] == e[3]) continue;
            auto sh = shape(b, c);
            if (shapes.count(sh)) continue;
            u1[b] = u1[c] = u2[e[0]] = u2[e[1]] = u3[e[2]] = u3[e[3]] = 1;
            shapes.insert(sh);
            chosen.push_back({b, c});
            if (rec()) return true;
            chosen.pop_back();
            shapes.erase(sh);
            u1[b] = u1[c] = u2[e[0]] = u2[e[1]] = u3[e[2]] = u3[e[3]] = 0;
        }
        return false;
    };
    for (int r = 0; r < std::max(1, budget.max_restarts); ++r) {
        std::iota(order.begin(), order.end(), 1);
        std::mt19937_64 rng(budget.seed + 0x9e3779b97f4a7c15ull * r);
        std::shuffle(order.begin(), order.end(), rng);
        restart_nodes = 0;
        if (rec()) {
            BaseCodewordSet b;
            b.n = n;
            b.d = 4;
            b.comp = {1, 1, 1};
            for (auto [x, y] : chosen) b.bases.push_back(Codeword::from_tuple(n, b.comp, {0, x, y}));
            require(verify_gdc(develop(b)), "search_cyclic_base_codewords");
            return b;
        }
        if (std::chrono::steady_clock::now() > deadline) break;
    }
    return std::nullopt;
}

namespace {

// ingredient group points go, smallest group first, onto the copies of the block's points by increasing weight
std::vector<int> ingredient_code_map(const GroupPartition& ing, const std::vector<int>& block,
                                     const std::vector<int>& weight, const std::vector<int>& off) {
    std::vector<int> live;
    for (int x : block)
        if (weight[x] > 0) live.push_back(x);
    if (ing.groups.size() != live.size()) throw Error("ingredient GDC has the wrong number of groups");
    std::vector<int> gi(ing.groups.size());
    std::iota(gi.begin(), gi.end(), 0);
    std::stable_sort(gi.begin(), gi.end(), [&](int a, int b) { return ing.groups[a].size() < ing.groups[b].size(); });
    std::stable_sort(live.begin(), live.end(), [&](int a, int b) { return weight[a] < weight[b]; });
    std::vector<int> map(ing.n, -1);
    for (std::size_t i = 0; i < live.size(); ++i) {
        auto g = sorted(ing.groups[gi[i]]);
        if (static_cast<int>(g.size()) != weight[live[i]]) throw Error("ingredient GDC type does not match weights");
        for (std::size_t j = 0; j < g.size(); ++j) map[g[j]] = off[live[i]] + static_cast<int>(j);
    }
    return map;
}

}  // namespace

GroupDivisibleCode wfc_gdc(const BlockDesign& master, const std::vector<int>& weight, const CodeIngredient& ingredient) {
    if (static_cast<int>(weight.size()) != master.n()) throw Error("weight function has the wrong length");
    auto off = weight_offsets(weight);
    GroupDivisibleCode r;
    r.partition.n = off.back();
    r.code.n = off.back();
    for (const auto& g : master.partition.groups) {
        std::vector<int> h;
        for (int x : g)
            for (int j = 0; j < weight[x]; ++j) h.push_back(off[x] + j);
        if (!h.empty()) r.partition.groups.push_back(h);
    }
    bool first = true;
    for (const auto& blk : master.blocks) {
        std::vector<int> w;
        int live = 0;
        for (int x : blk) {
            w.push_back(weight[x]);
            live += weight[x] > 0;
        }
        if (live < 2) continue;
        auto ing = ingredient(blk, w);
        if (!ing) throw Error("missing ingredient GDC for a block");
        if (first) {
            r.code.comp = ing->code.comp;
            r.code.d = ing->code.d;
            require_fill_distance(r.code.comp, r.code.d);
            first = false;
        } else {
            if (ing->code.comp != r.code.comp) throw Error("ingredients disagree on composition");
            r.code.d = std::min(r.code.d, ing->code.d);
        }
        auto map = ingredient_code_map(ing->partition, blk, weight, off);
        for (const auto& u : ing->code.words) r.code.words.push_back(map_word(u, map, r.code.n));
    }
    return checked(std::move(r), "wfc_gdc");
}

GroupDivisibleCode inflate(const BlockDesign& master, int weight, const std::map<int, GroupDivisibleCode>& by_block_size) {
    std::vector<int> w(master.n(), weight);
    return wfc_gdc(master, w, [&](const std::vector<int>& blk, const std::vector<int>&) -> std::optional<GroupDivisibleCode> {
        auto it = by_block_size.find(static_cast<int>(blk.size()));
        if (it == by_block_size.end()) return std::nullopt;
        return it->second;
    });
}

GroupDivisibleCode fill_groups(const GroupDivisibleCode& g, const std::vector<std::optional<ConstantCompositionCode>>& fillers) {
    if (fillers.size() != g.partition.groups.size()) throw Error("one filler slot per group expected");
    GroupDivisibleCode r;
    r.partition.n = g.partition.n;
    r.code = g.code;
    bool any = false;
    for (std::size_t i = 0; i < fillers.size(); ++i) {
        auto grp = sorted(g.partition.groups[i]);
        if (!fillers[i]) {
            r.partition.groups.push_back(grp);
            continue;
        }
        any = true;
        const auto& f = *fillers[i];
        if (f.n != static_cast<int>(grp.size())) throw Error("filler length differs from group size");
        require_same_kind(g.code, f);
        for (const auto& u : f.words) r.code.words.push_back(map_word(u, grp, r.code.n));
        for (int x : grp) r.partition.groups.push_back({x});
    }
    if (any) require_fill_distance(g.code.comp, g.code.d);
    std::sort(r.partition.groups.begin(), r.partition.groups.end());
    return checked(std::move(r), "fill_groups");
}

GroupDivisibleCode adjoin_points(const GroupDivisibleCode& g, int y, const std::vector<AdjoinRole>& roles) {
    using K = AdjoinRole::Kind;
    if (y < 0) throw Error("negative number of adjoined points");
    if (roles.size() != g.partition.groups.size()) throw Error("one role per group expected");
    int caps = 0, open_y = 0;
    for (const auto& r : roles) {
        caps += r.kind == K::Cap;
        open_y += r.kind == K::OpenWithY;
        if ((r.kind == K::Cap || r.kind == K::Arm) && !r.ingredient) throw Error("missing adjoin ingredient");
    }
    if (caps > 1 || open_y > 1 || (caps && open_y)) throw Error("at most one group may take the new points");
    require_fill_distance(g.code.comp, g.code.d);
    const int n2 = g.partition.n + y;
    std::vector<int> Y(y);
    std::iota(Y.begin(), Y.end(), g.partition.n);
    GroupDivisibleCode r;
    r.partition.n = n2;
    r.code = g.code;
    r.code.n = n2;
    for (auto& u : r.code.words) u.n = n2;
    for (std::size_t i = 0; i < roles.size(); ++i) {
        auto grp = sorted(g.partition.groups[i]);
        const int gs = static_cast<int>(grp.size());
        const auto& role = roles[i];
        if (role.kind == K::Open) {
            r.partition.groups.push_back(grp);
            continue;
        }
        if (role.kind == K::OpenWithY) {
            auto h = grp;
            h.insert(h.end(), Y.begin(), Y.end());
            r.partition.groups.push_back(h);
            continue;
        }
        const auto& ing = *role.ingredient;
        if (ing.partition.n != gs + y) throw Error("adjoin ingredient has the wrong length");
        require_same_kind(g.code, ing.code);
        std::vector<int> map(gs + y, -1);
        if (role.kind == K::Cap) {
            for (int j = 0; j < gs; ++j) map[j] = grp[j];
            for (int j = 0; j < y; ++j) map[gs + j] = Y[j];
        } else {
            // the arm's size-y group lands on Y
            std::vector<int> ypts, rest;
            for (const auto& h : ing.partition.groups)
                if (static_cast<int>(h.size()) == y && ypts.empty() && y > 1) ypts = sorted(h);
            if (y == 1) ypts = {gs};
            if (static_cast<int>(ypts.size()) != y) throw Error("arm ingredient lacks a group of size y");
            for (int x = 0; x < gs + y; ++x)
                if (!std::binary_search(ypts.begin(), ypts.end(), x)) rest.push_back(x);
            for (int j = 0; j < gs; ++j) map[rest[j]] = grp[j];
            for (int j = 0; j < y; ++j) map[ypts[j]] = Y[j];
        }
        for (const auto& u : ing.code.words) r.code.words.push_back(map_word(u, map, n2));
        for (int x : grp) r.partition.groups.push_back({x});
    }
    if (y > 0 && !open_y) {
        if (caps)
            for (int x : Y) r.partition.groups.push_back({x});
        else
            r.partition.groups.push_back(Y);
    }
    std::sort(r.partition.groups.begin(), r.partition.groups.end());
    return checked(std::move(r), "adjoin_points");
}

namespace {

void require_optimal_input(const ConstantCompositionCode& c) {
    require(verify_code(c), "tripling input");
    if (c.comp != Composition{1, 1, 1} || c.d != 4) throw Error("tripling needs a [1,1,1] code of distance 4");
    auto opt = optimal_size(4, c.n, 4, c.comp);
    if (!opt.value || static_cast<long long>(c.size()) != *opt.value)
        throw Error("tripling input of length " + std::to_string(c.n) + " is not of optimal size");
}

}  // namespace

ConstantCompositionCode triple_3n(const ConstantCompositionCode& c) {
    require_optimal_input(c);
    auto L = latin_gdc(c.n);
    return as_code(fill_groups(L, {c, c, c}));
}

ConstantCompositionCode triple_3n_minus_2(const ConstantCompositionCode& c) {
    require_optimal_input(c);
    auto L = latin_gdc(c.n - 1);
    auto g = adjoin_points(L, 1, {AdjoinRole::arm(c), AdjoinRole::arm(c), AdjoinRole::arm(c)});
    return as_code(g);
}

TripledCodes triple(const ConstantCompositionCode& c) {
    if (c.n % 2 == 0) throw Error("tripling needs odd length");
    return {triple_3n(c), triple_3n_minus_2(c)};
}

ConstantCompositionCode shorten(const ConstantCompositionCode& c) {
    if (c.n % 2 == 0) throw Error("shortening needs odd length");
    if (c.size() != static_cast<std::size_t>(c.n) * (c.n - 1) / 2)
        throw Error("shortening needs a code of size n(n-1)/2");
    require(verify_code(c), "shorten input");
    std::vector<int> occ(c.n, 0);
    for (const auto& u : c.words)
        for (const auto& e : u.support) ++occ[e.pos];
    int x = static_cast<int>(std::min_element(occ.begin(), occ.end()) - occ.begin());
    if (2 * occ[x] > 3 * (c.n - 1)) throw Error("no coordinate at or below the average occurrence");
    std::vector<int> map(c.n, -1);
    for (int p = 0, k = 0; p < c.n; ++p)
        if (p != x) map[p] = k++;
    ConstantCompositionCode r;
    r.n = c.n - 1;
    r.d = c.d;
    r.comp = c.comp;
    for (const auto& u : c.words)
        if (u.at(x) == 0) r.words.push_back(map_word(u, map, r.n));
    return checked(std::move(r), "shorten");
}

GroupDivisibleCode excise_subcode(const ConstantCompositionCode& c, const std::vector<int>& S) {
    std::vector<char> in(c.n, 0);
    for (int x : S) {
        if (x < 0 || x >= c.n) throw Error("excision set out of range");
        in[x] = 1;
    }
    GroupDivisibleCode r;
    r.code.n = c.n;
    r.code.d = c.d;
    r.code.comp = c.comp;
    for (const auto& u : c.words) {
        bool inside = std::all_of(u.support.begin(), u.support.end(), [&](const Entry& e) { return in[e.pos]; });
        if (!inside || S.empty()) r.code.words.push_back(u);
    }
    r.partition.n = c.n;
    for (int x = 0; x < c.n; ++x)
        if (!in[x]) r.partition.groups.push_back({x});
    if (!S.empty()) r.partition.groups.push_back(sorted(S));
    std::sort(r.partition.groups.begin(), r.partition.groups.end());
    return checked(std::move(r), "excise_subcode");
}

ConstantCompositionCode subcode_on(const ConstantCompositionCode& c, const std::vector<int>& S) {
    std::vector<int> map(c.n, -1);
    for (std::size_t i = 0; i < S.size(); ++i) map.at(S[i]) = static_cast<int>(i);
    ConstantCompositionCode r;
    r.n = static_cast<int>(S.size());
    r.d = c.d;
    r.comp = c.comp;
    for (const auto& u : c.words)
        if (std::all_of(u.support.begin(), u.support.end(), [&](const Entry& e) { return map[e.pos] >= 0; }))
            r.words.push_back(map_word(u, map, r.n));
    return checked(std::move(r), "subcode_on");
}

namespace {

// weight-3 words; conflicts found through shared positions
class CodeClimber {
public:
    CodeClimber(int n, int d, const Composition& comp, const std::optional<GroupPartition>& groups)
        : n_(n), d_(d), comp_(comp) {
        if (comp.w() != 3) throw Error("code hill climbing handles weight-3 words only");
        int s = 0;
        while (2 * (3 - s) >= d) ++s;
        share_ = s;
        if (share_ < 1 || share_ > 2) throw Error("code hill climbing needs 3 <= d <= 5");
        gof_.assign(n, -1);
        if (groups) gof_ = groups->group_of();
        else std::iota(gof_.begin(), gof_.end(), 0);
        std::vector<int> syms;
        for (std::size_t j = 0; j < comp.weights.size(); ++j)
            for (int r = 0; r < comp.weights[j]; ++r) syms.push_back(static_cast<int>(j) + 1);
        std::sort(syms.begin(), syms.end());
        do arrangements_.push_back(syms);
        while (std::next_permutation(syms.begin(), syms.end()));
        index_.assign(share_ == 2 ? static_cast<std::size_t>(n) * n : n, {});
    }

    bool run(std::size_t target, std::mt19937_64& rng, std::uint64_t max_iter,
             std::chrono::steady_clock::time_point deadline, std::size_t& best) {
        std::uniform_int_distribution<int> pt(0, n_ - 1);
        for (std::uint64_t it = 0; it < max_iter && live_ < target; ++it) {
            if ((it & 4095) == 0 && std::chrono::steady_clock::now() > deadline) break;
            int a = pt(rng), b = pt(rng), c = pt(rng);
            if (gof_[a] == gof_[b] || gof_[a] == gof_[c] || gof_[b] == gof_[c]) continue;
            const auto& arr = arrangements_[rng() % arrangements_.size()];
            Codeword w(n_, {{a, arr[0]}, {b, arr[1]}, {c, arr[2]}});
            conflicts(w);
            if (conf_.size() > 1) continue;
            if (conf_.size() == 1) remove(conf_[0]);
            add(w);
            best = std::max(best, live_);
        }
        return live_ >= target;
    }

    ConstantCompositionCode code() const {
        ConstantCompositionCode c;
        c.n = n_;
        c.d = d_;
        c.comp = comp_;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (alive_[i]) c.words.push_back(words_[i]);
        c.sort_words();
        return c;
    }

private:
    template <class F>
    void for_keys(const Codeword& w, F f) const {
        const auto& s = w.support;
        if (share_ == 1)
            for (int i = 0; i < 3; ++i) f(static_cast<std::size_t>(s[i].pos));
        else
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) f(static_cast<std::size_t>(s[i].pos) * n_ + s[j].pos);
    }

    void conflicts(const Codeword& w) {
        conf_.clear();
        for_keys(w, [&](std::size_t k) {
            for (int id : index_[k])
                if (hamming_distance(w, words_[id]) < d_ &&
                    std::find(conf_.begin(), conf_.end(), id) == conf_.end())
                    conf_.push_back(id);
        });
    }

    void add(const Codeword& w) {
        int id = static_cast<int>(words_.size());
        words_.push_back(w);
        alive_.push_back(1);
        for_keys(w, [&](std::size_t k) { index_[k].push_back(id); });
        ++live_;
    }

    void remove(int id) {
        alive_[id] = 0;
        for_keys(words_[id], [&](std::size_t k) {
            auto& v = index_[k];
            v.erase(std::find(v.begin(), v.end(), id));
        });
        --live_;
    }

    int n_, d_, share_;
    Composition comp_;
    std::vector<int> gof_;
    std::vector<std::vector<int>> arrangements_;
    std::vector<std::vector<int>> index_;
    std::vector<Codeword> words_;
    std::vector<char> alive_;
    std::vector<int> conf_;
    std::size_t live_ = 0;
};

}  // namespace

ConstantCompositionCode hill_climb_code(int n, int d, const Composition& comp, std::size_t target,
                                        const SearchBudget& budget, const std::optional<GroupPartition>& groups) {
    auto deadline = std::chrono::steady_clock::now() + budget.wall;
    std::size_t best = 0;
    for (int r = 0; r < std::max(1, budget.max_restarts); ++r) {
        std::mt19937_64 rng(budget.seed + 0x9e3779b97f4a7c15ull * r);
        CodeClimber hc(n, d, comp, groups);
        if (hc.run(target, rng, budget.max_iterations, deadline, best)) {
            auto c = hc.code();
            require(verify_code(c), "hill_climb_code");
            return c;
        }
        if (std::chrono::steady_clock::now() > deadline) break;
    }
    throw SearchFailure("code hill climbing reached " + std::to_string(best) + " of " + std::to_string(target),
                        target ? static_cast<double>(best) / target : 0);
}

GroupDivisibleCode hill_climb_gdc(const GroupPartition& groups, int d, const Composition& comp, std::size_t target,
                                  const SearchBudget& budget) {
    GroupDivisibleCode g;
    g.partition = groups;
    g.code = hill_climb_code(groups.n, d, comp, target, budget, groups);
    return checked(std::move(g), "hill_climb_gdc");
}

namespace {

ConstantCompositionCode latin3_from_square(int n, const std::vector<int>& L) {
    ConstantCompositionCode c;
    c.n = n;
    c.d = 3;
    c.comp = {1, 1, 1};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) c.words.push_back(Codeword::from_tuple(n, c.comp, {a, b, L[a * n + b]}));
    c.sort_words();
    return c;
}

std::optional<ConstantCompositionCode> latin3_field(int n) {
    auto [p, k] = prime_power(n);
    if (!p) return std::nullopt;
    auto F = make_field(n);
    for (int lam = 2; lam < n; ++lam) {
        int mu = F.sub(1, lam);
        std::vector<int> L(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) L[a * n + b] = F.add(F.mul(lam, a), F.mul(mu, b));
        auto c = latin3_from_square(n, L);
        if (verify_code(c).passed) return c;
    }
    return std::nullopt;
}

// words (a,b,c) with a, b, c carrying symbols 1, 2, 3; each ordered pair used once per symbol pair
class Latin3Climber {
public:
    explicit Latin3Climber(int n) : n_(n) {
        m12_.assign(static_cast<std::size_t>(n) * n, -1);
        m13_ = m12_;
        m23_ = m12_;
        mpos_.assign(static_cast<std::size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) {
                    mpos_[a * n + b] = static_cast<int>(missing_.size());
                    missing_.push_back(a * n + b);
                }
    }

    // min-conflict choice of the third symbol; noise is the per-mille chance of ignoring the cost
    bool run(std::mt19937_64& rng, std::uint64_t max_iter, int noise, std::chrono::steady_clock::time_point deadline) {
        std::vector<int> best;
        for (std::uint64_t it = 0; it < max_iter; ++it) {
            if (missing_.empty()) return true;
            if ((it & 4095) == 0 && std::chrono::steady_clock::now() > deadline) break;
            int ab = missing_[rng() % missing_.size()];
            int a = ab / n_, b = ab % n_;
            best.clear();
            int best_cost = 1 << 20;
            for (int c = 0; c < n_; ++c) {
                if (c == a || c == b) continue;
                int cost = (m13_[a * n_ + c] >= 0) + (m23_[b * n_ + c] >= 0);
                for (auto [x, y, z] : rotations(a, b, c))
                    if (int v = m12_[x * n_ + y]; v >= 0 && words_[v][2] == z) ++cost;
                if (noise > 0 && static_cast<int>(rng() % 1000) < noise) cost = 0;
                if (cost < best_cost) {
                    best_cost = cost;
                    best.clear();
                }
                if (cost == best_cost) best.push_back(c);
            }
            int c = best[rng() % best.size()];
            if (int v = m13_[a * n_ + c]; v >= 0) remove(v);
            if (int v = m23_[b * n_ + c]; v >= 0) remove(v);
            // words on the same support that share a fixed symbol position
            for (auto [x, y, z] : rotations(a, b, c))
                if (int v = m12_[x * n_ + y]; v >= 0 && words_[v][2] == z) remove(v);
            add({a, b, c});
        }
        return missing_.empty();
    }

    std::vector<int> square() const {
        std::vector<int> L(static_cast<std::size_t>(n_) * n_);
        for (int a = 0; a < n_; ++a) {
            L[a * n_ + a] = a;
            for (int b = 0; b < n_; ++b)
                if (a != b) L[a * n_ + b] = words_[m12_[a * n_ + b]][2];
        }
        return L;
    }

private:
    static std::array<std::array<int, 3>, 3> rotations(int a, int b, int c) { return {{{b, a, c}, {a, c, b}, {c, b, a}}}; }

    void add(const std::array<int, 3>& w) {
        int id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
            words_[id] = w;
        } else {
            id = static_cast<int>(words_.size());
            words_.push_back(w);
        }
        auto [a, b, c] = w;
        m12_[a * n_ + b] = id;
        m13_[a * n_ + c] = id;
        m23_[b * n_ + c] = id;
        int k = a * n_ + b, p = mpos_[k], last = missing_.back();
        missing_[p] = last;
        mpos_[last] = p;
        missing_.pop_back();
        mpos_[k] = -1;
    }

    void remove(int id) {
        auto [a, b, c] = words_[id];
        m12_[a * n_ + b] = -1;
        m13_[a * n_ + c] = -1;
        m23_[b * n_ + c] = -1;
        mpos_[a * n_ + b] = static_cast<int>(missing_.size());
        missing_.push_back(a * n_ + b);
        free_.push_back(id);
    }

    int n_;
    std::vector<int> m12_, m13_, m23_, mpos_, missing_, free_;
    std::vector<std::array<int, 3>> words_;
};

}  // namespace

ConstantCompositionCode latin_distance3_code(int n, const SearchBudget& budget) {
    if (n < 4 || n == 5 || n == 6) throw Error("no distance-3 code of size n(n-1) exists for length " + std::to_string(n));
    if (auto c = latin3_field(n)) return *c;
    auto deadline = std::chrono::steady_clock::now() + budget.wall;
    for (int r = 0; r < 50 * std::max(1, budget.max_restarts); ++r) {
        std::mt19937_64 rng(budget.seed + 0x9e3779b97f4a7c15ull * r);
        Latin3Climber hc(n);
        // short restarts: the climber either finishes quickly or sits in a plateau
        static constexpr int kNoise[] = {0, 3, 1, 5};
        auto iters = std::min<std::uint64_t>(budget.max_iterations, 400ull * n * n);
        if (hc.run(rng, iters, kNoise[r % 4], deadline)) {
            auto c = latin3_from_square(n, hc.square());
            require(verify_code(c), "latin_distance3_code");
            return c;
        }
        if (std::chrono::steady_clock::now() > deadline) break;
    }
    throw SearchFailure("no distance-3 Latin code of length " + std::to_string(n) + " found", 0);
}

ConstantCompositionCode distance5_code(int n) {
    if (n < 7) throw Error("the cyclic distance-5 construction needs n >= 7");
    BaseCodewordSet b;
    b.n = n;
    b.d = 5;
    b.comp = {1, 1, 1};
    b.bases = {Codeword::from_tuple(n, b.comp, {0, 1, 3})};
    return as_code(develop(b));
}

}  // namespace ccc
