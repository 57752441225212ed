#include "ccc/designs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <array>
#include <functional>

#include "ccc/algebra.hpp"

namespace ccc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Deadline {
    std::chrono::steady_clock::time_point end;
    explicit Deadline(std::chrono::milliseconds ms) : end(std::chrono::steady_clock::now() + ms) {}
    bool passed() const { return std::chrono::steady_clock::now() > end; }
};

// Stinson-style completion of a partial GDD by triples
class TripleClimber {
public:
    TripleClimber(const GroupPartition& gp, const std::vector<std::vector<int>>& fixed) : n_(gp.n), gof_(gp.group_of()) {
        fixed_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (const auto& b : fixed)
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    int x = b[i], y = b[j];
                    if (gof_[x] == gof_[y]) throw Error("prestructure block meets a group twice");
                    if (fixed_[idx(x, y)]) throw Error("prestructure covers a pair twice");
                    fixed_[idx(x, y)] = fixed_[idx(y, x)] = 1;
                }
    }

    int n() const { return n_; }

    // per point the number of triple pairs must be even, total divisible by three
    void check_parity() const {
        long long total = 0;
        for (int x = 0; x < n_; ++x) {
            int c = 0;
            for (int y = 0; y < n_; ++y)
                if (y != x && gof_[x] != gof_[y] && !fixed_[idx(x, y)]) ++c;
            if (c % 2) throw Error("no triple completion: point " + std::to_string(x) + " has an odd number of free pairs");
            total += c;
        }
        if ((total / 2) % 3) throw Error("no triple completion: free pair count not divisible by 3");
    }

    bool run(std::mt19937_64& rng, std::uint64_t max_iter, const Deadline& dl, double& best) {
        reset();
        std::size_t start = unc_.size();
        for (std::uint64_t it = 0; it < max_iter; ++it) {
            if (unc_.empty()) return true;
            if ((it & 4095) == 0 && dl.passed()) break;
            auto [x, y] = unc_[rng() % unc_.size()];
            if (rng() & 1) std::swap(x, y);
            cand_.clear();
            zero_.clear();
            for (int z : partners_[x]) {
                if (z == y || gof_[z] == gof_[y] || fixed_[idx(y, z)]) continue;
                cand_.push_back(z);
                if (cover_[idx(y, z)] < 0) zero_.push_back(z);
            }
            const auto& pool = zero_.empty() ? cand_ : zero_;
            if (pool.empty()) continue;
            int z = pool[rng() % pool.size()];
            if (int t = cover_[idx(y, z)]; t >= 0) remove_triple(t);
            add_triple(x, y, z);
            double frac = start ? 1.0 - static_cast<double>(unc_.size()) / start : 1.0;
            best = std::max(best, frac);
        }
        return unc_.empty();
    }

    std::vector<std::vector<int>> triples() const {
        std::vector<std::vector<int>> r;
        for (std::size_t t = 0; t < tri_.size(); ++t)
            if (alive_[t]) {
                auto b = std::vector<int>(tri_[t].begin(), tri_[t].end());
                std::sort(b.begin(), b.end());
                r.push_back(b);
            }
        std::sort(r.begin(), r.end());
        return r;
    }

private:
    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

    void reset() {
        cover_.assign(static_cast<std::size_t>(n_) * n_, -1);
        upos_.assign(static_cast<std::size_t>(n_) * n_, -1);
        ppos_.assign(static_cast<std::size_t>(n_) * n_, -1);
        partners_.assign(n_, {});
        unc_.clear();
        tri_.clear();
        alive_.clear();
        free_.clear();
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (x != y && gof_[x] != gof_[y] && !fixed_[idx(x, y)]) {
                    ppos_[idx(x, y)] = static_cast<int>(partners_[x].size());
                    partners_[x].push_back(y);
                    if (x < y) {
                        upos_[idx(x, y)] = static_cast<int>(unc_.size());
                        unc_.push_back({x, y});
                    }
                }
    }

    void uncover(int x, int y) {  // pair becomes free again
        cover_[idx(x, y)] = cover_[idx(y, x)] = -1;
        ppos_[idx(x, y)] = static_cast<int>(partners_[x].size());
        partners_[x].push_back(y);
        ppos_[idx(y, x)] = static_cast<int>(partners_[y].size());
        partners_[y].push_back(x);
        int a = std::min(x, y), b = std::max(x, y);
        upos_[idx(a, b)] = static_cast<int>(unc_.size());
        unc_.push_back({a, b});
    }

    void drop_partner(int x, int y) {
        int p = ppos_[idx(x, y)];
        int last = partners_[x].back();
        partners_[x][p] = last;
        ppos_[idx(x, last)] = p;
        partners_[x].pop_back();
        ppos_[idx(x, y)] = -1;
    }

    void cover(int x, int y, int t) {
        cover_[idx(x, y)] = cover_[idx(y, x)] = t;
        drop_partner(x, y);
        drop_partner(y, x);
        int a = std::min(x, y), b = std::max(x, y);
        int p = upos_[idx(a, b)];
        auto last = unc_.back();
        unc_[p] = last;
        upos_[idx(last.first, last.second)] = p;
        unc_.pop_back();
        upos_[idx(a, b)] = -1;
    }

    void add_triple(int x, int y, int z) {
        int t;
        if (!free_.empty()) {
            t = free_.back();
            free_.pop_back();
            tri_[t] = {x, y, z};
            alive_[t] = 1;
        } else {
            t = static_cast<int>(tri_.size());
            tri_.push_back({x, y, z});
            alive_.push_back(1);
        }
        cover(x, y, t);
        cover(x, z, t);
        cover(y, z, t);
    }

    void remove_triple(int t) {
        auto [a, b, c] = tri_[t];
        alive_[t] = 0;
        free_.push_back(t);
        uncover(a, b);
        uncover(a, c);
        uncover(b, c);
    }

    int n_;
    std::vector<int> gof_;
    std::vector<char> fixed_;
    std::vector<int> cover_, upos_, ppos_;
    std::vector<std::vector<int>> partners_;
    std::vector<std::pair<int, int>> unc_;
    std::vector<std::array<int, 3>> tri_;
    std::vector<char> alive_;
    std::vector<int> free_;
    std::vector<int> cand_, zero_;
};

}  // namespace

BlockDesign hill_climb_gdd(const GroupPartition& groups, const std::vector<int>& K, const Prestructure& pre,
                           const SearchBudget& budget) {
    if (std::find(K.begin(), K.end(), 3) == K.end()) throw Error("hill climbing searches triples: K must contain 3");
    for (const auto& b : pre.blocks)
        if (std::find(K.begin(), K.end(), static_cast<int>(b.size())) == K.end())
            throw Error("prestructure block size not in K");
    TripleClimber hc(groups, pre.blocks);
    hc.check_parity();
    Deadline dl(budget.wall);
    double best = 0;
    for (int r = 0; r < std::max(1, budget.max_restarts); ++r) {
        std::mt19937_64 rng(r == 0 ? budget.seed : splitmix(budget.seed * 1315423911ull + r));
        if (hc.run(rng, budget.max_iterations, dl, best)) {
            BlockDesign d;
            d.partition = groups;
            d.blocks = pre.blocks;
            for (auto& b : d.blocks) std::sort(b.begin(), b.end());
            auto t = hc.triples();
            d.blocks.insert(d.blocks.end(), t.begin(), t.end());
            d.K = K;
            require(verify_design(d), "hill_climb_gdd");
            return d;
        }
        if (dl.passed()) break;
    }
    throw SearchFailure("hill climbing found no completion of type " + GddType::of(groups).str(), best);
}

BlockDesign hill_climb_gdd(const GddType& type, const std::vector<int>& K, const Prestructure& pre,
                           const SearchBudget& budget) {
    return hill_climb_gdd(GroupPartition::from_sizes(type.sizes()), K, pre, budget);
}

namespace {

struct Resolver {
    const BlockDesign& d;
    ResolutionMode mode;
    std::uint64_t nodes = 0, max_nodes;
    std::vector<int> gof;
    std::vector<std::vector<int>> blocks_at;  // point -> blocks
    std::vector<char> used;
    std::vector<std::vector<int>> classes;
    std::vector<int> per_group_left;

    Resolver(const BlockDesign& dd, ResolutionMode m, std::uint64_t mx) : d(dd), mode(m), max_nodes(mx) {
        gof = d.partition.group_of();
        blocks_at.assign(d.n(), {});
        for (std::size_t i = 0; i < d.blocks.size(); ++i)
            for (int x : d.blocks[i]) blocks_at[x].push_back(static_cast<int>(i));
        used.assign(d.blocks.size(), 0);
    }

    bool solve() {
        if (++nodes > max_nodes) return false;
        int b0 = -1;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (!used[i]) {
                b0 = static_cast<int>(i);
                break;
            }
        if (b0 < 0) return true;
        if (mode == ResolutionMode::Parallel) return build_class(b0, -1);
        std::vector<char> hit(d.partition.groups.size(), 0);
        for (int x : d.blocks[b0]) hit[gof[x]] = 1;
        for (std::size_t g = 0; g < hit.size(); ++g)
            if (!hit[g] && per_group_left[g] > 0) {
                --per_group_left[g];
                bool ok = build_class(b0, static_cast<int>(g));
                ++per_group_left[g];
                if (ok) return true;
                if (nodes > max_nodes) return false;
            }
        return false;
    }

    bool build_class(int b0, int hole) {
        std::vector<char> covered(d.n(), 0);
        if (hole >= 0)
            for (int x : d.partition.groups[hole]) covered[x] = 1;
        std::vector<int> cls;
        return extend(b0, covered, cls);
    }

    bool extend(int b, std::vector<char>& covered, std::vector<int>& cls) {
        if (++nodes > max_nodes) return false;
        for (int x : d.blocks[b]) covered[x] = 1;
        used[b] = 1;
        cls.push_back(b);
        int p = -1;
        for (int x = 0; x < d.n(); ++x)
            if (!covered[x]) {
                p = x;
                break;
            }
        bool ok = false;
        if (p < 0) {
            classes.push_back(cls);
            ok = solve();
            if (!ok) classes.pop_back();
        } else {
            for (int c : blocks_at[p]) {
                if (used[c]) continue;
                bool fits = true;
                for (int x : d.blocks[c]) fits = fits && !covered[x];
                if (fits && extend(c, covered, cls)) {
                    ok = true;
                    break;
                }
                if (nodes > max_nodes) break;
            }
        }
        if (!ok) {
            cls.pop_back();
            used[b] = 0;
            for (int x : d.blocks[b]) covered[x] = 0;
        }
        return ok;
    }
};

}  // namespace

std::optional<BlockDesign> extract_resolution(const BlockDesign& d, ResolutionMode mode, std::uint64_t max_nodes) {
    if (d.blocks.empty()) return std::nullopt;
    std::size_t k = d.blocks[0].size();
    for (const auto& b : d.blocks)
        if (b.size() != k) return std::nullopt;
    Resolver r(d, mode, max_nodes);
    if (mode == ResolutionMode::Parallel) {
        if (d.n() % k || (d.blocks.size() * k) % d.n()) return std::nullopt;
    } else {
        for (const auto& g : d.partition.groups) {
            if (g.size() % (k - 1)) return std::nullopt;
            r.per_group_left.push_back(static_cast<int>(g.size() / (k - 1)));
        }
    }
    if (!r.solve()) return std::nullopt;
    BlockDesign out = d;
    out.resolution = r.classes;
    require(verify_design(out), "extract_resolution");
    return out;
}

BlockDesign resolvable_td(const BlockDesign& td) {
    int k1 = static_cast<int>(td.partition.groups.size());
    auto last = td.partition.groups.back();
    std::vector<char> is_last(td.n(), 0);
    for (int x : last) is_last[x] = 1;
    BlockDesign t = td;
    std::vector<std::vector<int>> classes(last.size());
    std::vector<int> pos(td.n(), -1);
    for (std::size_t i = 0; i < last.size(); ++i) pos[last[i]] = static_cast<int>(i);
    for (std::size_t b = 0; b < td.blocks.size(); ++b)
        for (int x : td.blocks[b])
            if (is_last[x]) classes[pos[x]].push_back(static_cast<int>(b));
    BlockDesign r = delete_points(t, last, 1);
    r.K = {k1 - 1};
    r.resolution = classes;
    require(verify_design(r), "resolvable_td");
    return r;
}

BlockDesign add_points_to_frame(const BlockDesign& frame, int y, int group) {
    if (!frame.resolution) throw Error("frame has no holey resolution");
    auto gof = frame.partition.group_of();
    const auto& classes = *frame.resolution;
    std::vector<int> missing(classes.size(), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<char> hit(frame.n(), 0);
        for (int b : classes[c])
            for (int x : frame.blocks[b]) hit[x] = 1;
        for (int x = 0; x < frame.n(); ++x)
            if (!hit[x]) {
                missing[c] = gof[x];
                break;
            }
    }
    if (y == 0) {
        BlockDesign r = frame;
        r.resolution.reset();
        return r;
    }
    auto count = [&](int g) { return static_cast<int>(std::count(missing.begin(), missing.end(), g)); };
    if (group < 0) {
        for (std::size_t g = 0; g < frame.partition.groups.size(); ++g)
            if (count(static_cast<int>(g)) >= y) {
                group = static_cast<int>(g);
                break;
            }
    }
    if (group < 0 || count(group) < y) throw Error("not enough holey classes missing one group");
    BlockDesign r;
    r.partition = frame.partition;
    r.partition.n = frame.n() + y;
    r.blocks = frame.blocks;
    int added = 0;
    for (std::size_t c = 0; c < classes.size() && added < y; ++c)
        if (missing[c] == group) {
            int inf = frame.n() + added;
            for (int b : classes[c]) r.blocks[b].push_back(inf);
            r.partition.groups[group].push_back(inf);
            ++added;
        }
    for (auto [k, cnt] : r.census()) r.K.push_back(k);
    require(verify_design(r), "add_points_to_frame");
    return r;
}

BlockDesign complete_rgdd(const BlockDesign& rgdd, int u, CompletionVariant variant) {
    if (!rgdd.resolution) throw Error("design has no resolution");
    const auto& classes = *rgdd.resolution;
    const int c = static_cast<int>(classes.size());
    BlockDesign r;
    if (variant == CompletionVariant::Append) {
        if (u < 0 || u > c) throw Error("cannot complete more classes than exist");
        if (u == 0) {
            r = rgdd;
            r.resolution.reset();
            return r;
        }
        r.partition = rgdd.partition;
        r.partition.n = rgdd.n() + u;
        r.blocks = rgdd.blocks;
        std::vector<int> infs;
        for (int i = 0; i < u; ++i) {
            int inf = rgdd.n() + i;
            infs.push_back(inf);
            for (int b : classes[i]) r.blocks[b].push_back(inf);
        }
        r.partition.groups.push_back(infs);
    } else {
        // last class becomes the groups, old groups become blocks through the last infinite point
        r.partition.n = rgdd.n() + c;
        for (int b : classes[c - 1]) r.partition.groups.push_back(rgdd.blocks[b]);
        std::vector<int> infs;
        for (int i = 0; i < c; ++i) infs.push_back(rgdd.n() + i);
        r.partition.groups.push_back(infs);
        for (int i = 0; i + 1 < c; ++i)
            for (int b : classes[i]) {
                auto blk = rgdd.blocks[b];
                blk.push_back(infs[i]);
                r.blocks.push_back(blk);
            }
        for (const auto& g : rgdd.partition.groups) {
            auto blk = g;
            blk.push_back(infs[c - 1]);
            r.blocks.push_back(blk);
        }
    }
    for (auto [k, cnt] : r.census()) r.K.push_back(k);
    require(verify_design(r), "complete_rgdd");
    return r;
}

std::vector<int> weight_offsets(const std::vector<int>& weight) {
    std::vector<int> off(weight.size() + 1, 0);
    for (std::size_t i = 0; i < weight.size(); ++i) {
        if (weight[i] < 0) throw Error("negative weight");
        off[i + 1] = off[i] + weight[i];
    }
    return off;
}

namespace {

// maps the groups of an ingredient on the weighted copies of a block's points
std::vector<int> ingredient_map(const GroupPartition& ing, const std::vector<int>& block, const std::vector<int>& weight,
                                const std::vector<int>& off) {
    std::vector<int> live;
    for (int x : block)
        if (weight[x] > 0) live.push_back(x);
    if (ing.groups.size() != live.size()) throw Error("ingredient has the wrong number of groups");
    std::vector<int> gi(ing.groups.size());
    std::iota(gi.begin(), gi.end(), 0);
    std::stable_sort(gi.begin(), gi.end(), [&](int a, int b) { return ing.groups[a].size() < ing.groups[b].size(); });
    std::stable_sort(live.begin(), live.end(), [&](int a, int b) { return weight[a] < weight[b]; });
    std::vector<int> map(ing.n, -1);
    for (std::size_t i = 0; i < live.size(); ++i) {
        auto g = ing.groups[gi[i]];
        if (static_cast<int>(g.size()) != weight[live[i]]) throw Error("ingredient type does not match the weights");
        std::sort(g.begin(), g.end());
        for (std::size_t j = 0; j < g.size(); ++j) map[g[j]] = off[live[i]] + static_cast<int>(j);
    }
    return map;
}

}  // namespace

BlockDesign wfc_gdd(const BlockDesign& master, const std::vector<int>& weight, const DesignIngredient& ingredient) {
    if (static_cast<int>(weight.size()) != master.n()) throw Error("weight function has the wrong length");
    auto off = weight_offsets(weight);
    BlockDesign r;
    r.partition.n = off.back();
    for (const auto& g : master.partition.groups) {
        std::vector<int> h;
        for (int x : g)
            for (int j = 0; j < weight[x]; ++j) h.push_back(off[x] + j);
        if (!h.empty()) r.partition.groups.push_back(h);
    }
    for (const auto& blk : master.blocks) {
        std::vector<int> w;
        int live = 0;
        for (int x : blk) {
            w.push_back(weight[x]);
            live += weight[x] > 0;
        }
        if (live < 2) continue;
        auto ing = ingredient(blk, w);
        if (!ing) throw Error("missing ingredient for weights of block");
        auto map = ingredient_map(ing->partition, blk, weight, off);
        for (const auto& b : ing->blocks) {
            std::vector<int> nb;
            for (int x : b) nb.push_back(map[x]);
            std::sort(nb.begin(), nb.end());
            r.blocks.push_back(nb);
        }
    }
    for (auto [k, cnt] : r.census()) r.K.push_back(k);
    require(verify_design(r), "wfc_gdd");
    return r;
}

BlockDesign kirkman_frame_cyclic(int g, const SearchBudget& budget) {
    // points Z_g x {0..3}; each holey class is the Z_g-orbit of one transversal triple
    if (g % 2) throw Error("Kirkman frame needs even group size");
    const int t = 4, per = g / 2;
    struct Cls {
        int c, a, b, d, s, u;
    };
    std::vector<std::array<int, 4>> slots;  // missing group, then the other three
    for (int c = 0; c < t; ++c) {
        std::array<int, 4> o{c, 0, 0, 0};
        int k = 1;
        for (int x = 0; x < t; ++x)
            if (x != c) o[k++] = x;
        for (int i = 0; i < per; ++i) slots.push_back(o);
    }
    // used[pair of groups][difference]
    std::vector<std::vector<char>> used(t * t, std::vector<char>(g, 0));
    std::vector<Cls> chosen;
    std::mt19937_64 rng(budget.seed);
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == slots.size()) return true;
        if (++nodes > budget.max_iterations) return false;
        auto [c, a, b, d] = slots[i];
        std::vector<std::pair<int, int>> opts;
        for (int s = 0; s < g; ++s)
            for (int u = 0; u < g; ++u) opts.push_back({s, u});
        std::shuffle(opts.begin(), opts.end(), rng);
        for (auto [s, u] : opts) {
            int dab = s, dad = u, dbd = ((u - s) % g + g) % g;
            auto& A = used[a * t + b];
            auto& B = used[a * t + d];
            auto& C = used[b * t + d];
            if (A[dab] || B[dad] || C[dbd]) continue;
            A[dab] = B[dad] = C[dbd] = 1;
            chosen.push_back({c, a, b, d, s, u});
            if (rec(i + 1)) return true;
            chosen.pop_back();
            A[dab] = B[dad] = C[dbd] = 0;
        }
        return false;
    };
    if (!rec(0)) throw SearchFailure("no cyclic Kirkman frame found", 0);
    BlockDesign f;
    f.partition = GroupPartition::uniform(t * g, g);
    f.K = {3};
    std::vector<std::vector<int>> classes;
    for (const auto& cl : chosen) {
        std::vector<int> cls;
        for (int x = 0; x < g; ++x) {
            std::vector<int> blk = {cl.a * g + x, cl.b * g + (x + cl.s) % g, cl.d * g + (x + cl.u) % g};
            std::sort(blk.begin(), blk.end());
            cls.push_back(static_cast<int>(f.blocks.size()));
            f.blocks.push_back(blk);
        }
        classes.push_back(cls);
    }
    f.resolution = classes;
    require(verify_design(f), "kirkman_frame_cyclic");
    return f;
}

BlockDesign rgdd_type2_rotational(int k, const SearchBudget& budget) {
    // points (x, j) = 2x + j for x in Z_m, m = 3k-1, plus two fixed points; one base class developed mod m
    const int m = 3 * k - 1;
    if (k < 2 || m % 2 == 0) throw Error("rotational construction needs 3k-1 odd");
    const int n = 2 * m + 2, inf0 = 2 * m, inf1 = 2 * m + 1;
    auto orbit = [&](int p, int q) -> int {
        if (p > q) std::swap(p, q);
        if (q >= 2 * m) {
            if (p >= 2 * m) return -1;
            return 2 * m + 2 * (q - 2 * m) + (p & 1);  // fixed point with a level
        }
        int x = p >> 1, i = p & 1, y = q >> 1, j = q & 1;
        int delta = ((y - x) % m + m) % m;
        if (i == j) {
            if (delta == 0) return -1;
            return i * m + std::min(delta, m - delta);  // pure orbits per level
        }
        if (i == 1) delta = (m - delta) % m;
        if (delta == 0) return -1;  // a group
        return 2 * m + 4 + delta;   // mixed orbits
    };
    const int orbits = 2 * m + 4 + m;
    std::vector<char> used_orbit(orbits, 0), used_pt(n, 0);
    std::vector<std::array<int, 3>> base;
    std::mt19937_64 rng(budget.seed);
    std::uint64_t nodes = 0;
    std::function<bool()> rec = [&]() -> bool {
        if (++nodes > budget.max_iterations) return false;
        int p = -1;
        for (int x = 0; x < n; ++x)
            if (!used_pt[x]) {
                p = x;
                break;
            }
        if (p < 0) return true;
        std::vector<std::pair<int, int>> opts;
        for (int q = p + 1; q < n; ++q) {
            if (used_pt[q]) continue;
            int o1 = orbit(p, q);
            if (o1 < 0 || used_orbit[o1]) continue;
            for (int r = q + 1; r < n; ++r) {
                if (used_pt[r]) continue;
                int o2 = orbit(p, r), o3 = orbit(q, r);
                if (o2 < 0 || o3 < 0 || used_orbit[o2] || used_orbit[o3] || o1 == o2 || o1 == o3 || o2 == o3) continue;
                opts.push_back({q, r});
            }
        }
        std::shuffle(opts.begin(), opts.end(), rng);
        for (auto [q, r] : opts) {
            int o1 = orbit(p, q), o2 = orbit(p, r), o3 = orbit(q, r);
            used_orbit[o1] = used_orbit[o2] = used_orbit[o3] = 1;
            used_pt[p] = used_pt[q] = used_pt[r] = 1;
            base.push_back({p, q, r});
            if (rec()) return true;
            base.pop_back();
            used_orbit[o1] = used_orbit[o2] = used_orbit[o3] = 0;
            used_pt[p] = used_pt[q] = used_pt[r] = 0;
            if (nodes > budget.max_iterations) return false;
        }
        return false;
    };
    if (!rec()) throw SearchFailure("no rotational RGDD found", 0);
    BlockDesign d;
    d.partition.n = n;
    for (int x = 0; x < m; ++x) d.partition.groups.push_back({2 * x, 2 * x + 1});
    d.partition.groups.push_back({inf0, inf1});
    d.K = {3};
    std::vector<std::vector<int>> classes;
    auto shift = [&](int p, int s) { return p >= 2 * m ? p : 2 * (((p >> 1) + s) % m) + (p & 1); };
    for (int s = 0; s < m; ++s) {
        std::vector<int> cls;
        for (const auto& t : base) {
            std::vector<int> blk = {shift(t[0], s), shift(t[1], s), shift(t[2], s)};
            std::sort(blk.begin(), blk.end());
            cls.push_back(static_cast<int>(d.blocks.size()));
            d.blocks.push_back(blk);
        }
        classes.push_back(cls);
    }
    d.resolution = classes;
    require(verify_design(d), "rgdd_type2_rotational");
    return d;
}

}  // namespace ccc
