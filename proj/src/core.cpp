#include "ccc/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ccc {

int Composition::w() const { return std::accumulate(weights.begin(), weights.end(), 0); }

bool Composition::canonical() const {
    if (weights.empty()) return false;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1) return false;
        if (i && weights[i] > weights[i - 1]) return false;
    }
    return true;
}

std::string Composition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights[i]);
    }
    return s + "]";
}

Composition canonicalize(std::vector<int> counts) {
    counts.erase(std::remove(counts.begin(), counts.end(), 0), counts.end());
    std::sort(counts.rbegin(), counts.rend());
    return Composition(std::move(counts));
}

Composition parse_composition(const std::string& s) {
    std::string t;
    for (char ch : s) t += (ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
    std::istringstream in(t);
    std::vector<int> w;
    int x;
    while (in >> x) w.push_back(x);
    if (!in.eof() || w.empty()) throw Error("bad composition: " + s);
    Composition c(w);
    if (!c.canonical()) throw Error("composition not canonical: " + s);
    return c;
}

Codeword::Codeword(int n_, std::vector<Entry> s) : n(n_), support(std::move(s)) {
    std::sort(support.begin(), support.end());
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i].pos < 0 || support[i].pos >= n) throw Error("position out of range");
        if (support[i].sym < 1) throw Error("zero symbol in support");
        if (i && support[i].pos == support[i - 1].pos) throw Error("repeated position");
    }
}

Codeword Codeword::from_tuple(int n, const Composition& comp, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != comp.w()) throw Error("tuple length differs from weight");
    std::vector<Entry> s;
    std::size_t k = 0;
    for (std::size_t j = 0; j < comp.weights.size(); ++j)
        for (int r = 0; r < comp.weights[j]; ++r) s.push_back({tuple[k++], static_cast<int>(j) + 1});
    return Codeword(n, std::move(s));
}

std::vector<int> Codeword::to_tuple(const Composition& comp) const {
    std::vector<int> t;
    for (std::size_t j = 0; j < comp.weights.size(); ++j)
        for (const auto& e : support)
            if (e.sym == static_cast<int>(j) + 1) t.push_back(e.pos);
    return t;
}

int Codeword::at(int pos) const {
    for (const auto& e : support)
        if (e.pos == pos) return e.sym;
    return 0;
}

std::string Codeword::str() const {
    std::string s;
    for (const auto& e : support) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e.pos) + ":" + std::to_string(e.sym);
    }
    return s;
}

int hamming_distance(const Codeword& u, const Codeword& v) {
    if (u.n != v.n) throw Error("length mismatch");
    int d = 0;
    std::size_t i = 0, j = 0;
    while (i < u.support.size() || j < v.support.size()) {
        if (j == v.support.size() || (i < u.support.size() && u.support[i].pos < v.support[j].pos)) {
            ++d, ++i;
        } else if (i == u.support.size() || v.support[j].pos < u.support[i].pos) {
            ++d, ++j;
        } else {
            d += u.support[i].sym != v.support[j].sym;
            ++i, ++j;
        }
    }
    return d;
}

std::vector<int> composition_of(const Codeword& u, int q) {
    std::vector<int> w(q - 1, 0);
    for (const auto& e : u.support) {
        if (e.sym >= q) throw Error("symbol exceeds alphabet");
        ++w[e.sym - 1];
    }
    return w;
}

Codeword restrict(const Codeword& u, const std::vector<int>& Y) {
    std::vector<Entry> s;
    for (const auto& e : u.support)
        if (std::find(Y.begin(), Y.end(), e.pos) != Y.end()) s.push_back(e);
    return Codeword(u.n, std::move(s));
}

void ConstantCompositionCode::sort_words() { std::sort(words.begin(), words.end()); }

GroupPartition GroupPartition::singletons(int n) {
    GroupPartition p{n, {}};
    for (int i = 0; i < n; ++i) p.groups.push_back({i});
    return p;
}

GroupPartition GroupPartition::uniform(int n, int g) {
    if (g <= 0 || n % g) throw Error("uniform partition needs g | n");
    std::vector<int> sizes(n / g, g);
    return from_sizes(sizes);
}

GroupPartition GroupPartition::from_sizes(const std::vector<int>& sizes) {
    GroupPartition p;
    int at = 0;
    for (int s : sizes) {
        std::vector<int> g(s);
        std::iota(g.begin(), g.end(), at);
        at += s;
        p.groups.push_back(std::move(g));
    }
    p.n = at;
    return p;
}

std::vector<int> GroupPartition::group_of() const {
    std::vector<int> r(n, -1);
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (int x : groups[i])
            if (x >= 0 && x < n) r[x] = static_cast<int>(i);
    return r;
}

GddType GddType::from_sizes(const std::vector<int>& sizes) {
    std::map<int, int, std::greater<>> m;
    for (int s : sizes) ++m[s];
    GddType t;
    for (auto [g, c] : m) t.entries.push_back({g, c});
    return t;
}

GddType GddType::of(const GroupPartition& p) {
    std::vector<int> sizes;
    for (const auto& g : p.groups) sizes.push_back(static_cast<int>(g.size()));
    return from_sizes(sizes);
}

GddType GddType::parse(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    std::vector<int> sizes;
    while (in >> tok) {
        auto caret = tok.find('^');
        int g, t = 1;
        try {
            g = std::stoi(tok.substr(0, caret));
            if (caret != std::string::npos) t = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw Error("bad type token: " + tok);
        }
        if (g <= 0 || t <= 0) throw Error("bad type token: " + tok);
        sizes.insert(sizes.end(), t, g);
    }
    if (sizes.empty()) throw Error("empty type");
    return from_sizes(sizes);
}

std::string GddType::str() const {
    std::string s;
    for (auto [g, t] : entries) {
        if (!s.empty()) s += ' ';
        s += std::to_string(g) + "^" + std::to_string(t);
    }
    return s;
}

int GddType::points() const {
    int n = 0;
    for (auto [g, t] : entries) n += g * t;
    return n;
}

int GddType::groups() const {
    int n = 0;
    for (auto [g, t] : entries) n += t;
    return n;
}

std::vector<int> GddType::sizes() const {
    std::vector<int> r;
    for (auto [g, t] : entries) r.insert(r.end(), t, g);
    return r;
}

GroupDivisibleCode as_gdc(const ConstantCompositionCode& c) {
    return GroupDivisibleCode{GroupPartition::singletons(c.n), c};
}

ConstantCompositionCode as_code(const GroupDivisibleCode& g) {
    for (const auto& grp : g.partition.groups)
        if (grp.size() != 1) throw Error("GDC is not of type 1^n");
    return g.code;
}

std::map<int, int> BlockDesign::census() const {
    std::map<int, int> m;
    for (const auto& b : blocks) ++m[static_cast<int>(b.size())];
    return m;
}

void BlockDesign::normalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    for (auto& g : partition.groups) std::sort(g.begin(), g.end());
    std::sort(partition.groups.begin(), partition.groups.end());
    if (!resolution) std::sort(blocks.begin(), blocks.end());
    K.clear();
    for (auto [k, c] : census()) K.push_back(k);
}

void VerificationReport::add(std::string name, bool ok, std::string witness) {
    checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
    passed = passed && ok;
}

void VerificationReport::merge(const VerificationReport& o, const std::string& prefix) {
    for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.ok, c.witness});
    passed = passed && o.passed;
}

std::string VerificationReport::summary() const {
    std::string s;
    for (const auto& c : checks) {
        s += c.name + ": " + (c.ok ? "ok" : "FAIL");
        if (!c.ok && !c.witness.empty()) s += " (" + c.witness + ")";
        s += "\n";
    }
    return s;
}

void require(const VerificationReport& r, const std::string& what) {
    if (r.passed) return;
    for (const auto& c : r.checks)
        if (!c.ok) throw Error(what + ": " + c.name + " failed: " + c.witness);
}

namespace {

std::string pair_witness(const Codeword& u, const Codeword& v) {
    return "{" + u.str() + "} vs {" + v.str() + "} at distance " + std::to_string(hamming_distance(u, v));
}

// Two words of weight w sharing s support positions are at distance >= 2(w-s),
// so a pair closer than d shares at least s_min positions. Bucket by s_min-subsets.
std::optional<std::pair<std::size_t, std::size_t>> first_close_pair(const std::vector<Codeword>& words, int d) {
    if (words.empty()) return std::nullopt;
    int w = words[0].weight();
    bool uniform = std::all_of(words.begin(), words.end(), [&](const Codeword& u) { return u.weight() == w; });
    int smin = 0;
    while (smin <= w && 2 * (w - smin) >= d) ++smin;

    std::optional<std::pair<std::size_t, std::size_t>> best;
    auto consider = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        if (hamming_distance(words[i], words[j]) >= d) return;
        if (!best || std::make_pair(i, j) < *best) best = std::make_pair(i, j);
    };

    if (!uniform || smin == 0 || smin > 3 || smin > w) {
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                consider(i, j);
                if (best) return best;
            }
        return best;
    }

    std::vector<std::pair<std::uint64_t, std::uint32_t>> keys;
    std::vector<int> idx(smin);
    for (std::size_t k = 0; k < words.size(); ++k) {
        const auto& s = words[k].support;
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::uint64_t key = 0;
            for (int i : idx) key = (key << 21) | static_cast<std::uint64_t>(s[i].pos);
            keys.push_back({key, static_cast<std::uint32_t>(k)});
            int i = smin - 1;
            while (i >= 0 && idx[i] == w - smin + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < smin; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t a = 0; a < keys.size();) {
        std::size_t b = a;
        while (b < keys.size() && keys[b].first == keys[a].first) ++b;
        for (std::size_t i = a; i < b; ++i)
            for (std::size_t j = i + 1; j < b; ++j) consider(keys[i].second, keys[j].second);
        a = b;
    }
    return best;
}

void check_partition(VerificationReport& r, const GroupPartition& p) {
    std::vector<int> seen(p.n, 0);
    std::string bad;
    for (std::size_t i = 0; i < p.groups.size() && bad.empty(); ++i) {
        if (p.groups[i].empty()) bad = "group " + std::to_string(i) + " is empty";
        for (int x : p.groups[i]) {
            if (x < 0 || x >= p.n) {
                bad = "point " + std::to_string(x) + " out of range";
                break;
            }
            if (seen[x]++) {
                bad = "point " + std::to_string(x) + " in two groups";
                break;
            }
        }
    }
    if (bad.empty())
        for (int x = 0; x < p.n; ++x)
            if (!seen[x]) {
                bad = "point " + std::to_string(x) + " in no group";
                break;
            }
    r.add("partition", bad.empty(), bad);
}

}  // namespace

VerificationReport verify_code(const ConstantCompositionCode& c) {
    VerificationReport r;
    std::string bad;
    for (const auto& u : c.words) {
        bool ok = u.n == c.n;
        for (std::size_t i = 0; ok && i < u.support.size(); ++i)
            ok = u.support[i].pos >= 0 && u.support[i].pos < c.n && (i == 0 || u.support[i].pos > u.support[i - 1].pos);
        if (!ok) {
            bad = "{" + u.str() + "}";
            break;
        }
    }
    r.add("length", bad.empty(), bad);

    bad.clear();
    for (const auto& u : c.words) {
        bool ok = true;
        for (const auto& e : u.support) ok = ok && e.sym >= 1 && e.sym < c.comp.q();
        if (ok) ok = composition_of(u, c.comp.q()) == c.comp.weights;
        if (!ok) {
            bad = "{" + u.str() + "} is not of composition " + c.comp.str();
            break;
        }
    }
    r.add("composition", bad.empty(), bad);

    std::vector<std::size_t> order(c.words.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return c.words[a] < c.words[b]; });
    bad.clear();
    for (std::size_t i = 1; i < order.size(); ++i)
        if (c.words[order[i]] == c.words[order[i - 1]]) {
            bad = "{" + c.words[order[i]].str() + "} appears twice";
            break;
        }
    r.add("duplicates", bad.empty(), bad);

    bad.clear();
    if (r.checks[0].ok) {
        auto hit = first_close_pair(c.words, c.d);
        if (hit) bad = pair_witness(c.words[hit->first], c.words[hit->second]);
    } else {
        bad = "skipped: malformed words";
    }
    r.add("distance>=" + std::to_string(c.d), bad.empty(), bad);
    return r;
}

VerificationReport verify_gdc(const GroupDivisibleCode& g) {
    VerificationReport r;
    if (g.partition.n != g.code.n) r.add("points", false, "partition has " + std::to_string(g.partition.n) + " points, code length " + std::to_string(g.code.n));
    check_partition(r, g.partition);
    r.merge(verify_code(g.code));
    std::string bad;
    if (r.passed) {
        auto gof = g.partition.group_of();
        for (const auto& u : g.code.words) {
            for (std::size_t i = 0; i < u.support.size() && bad.empty(); ++i)
                for (std::size_t j = i + 1; j < u.support.size(); ++j)
                    if (gof[u.support[i].pos] == gof[u.support[j].pos]) {
                        bad = "{" + u.str() + "} meets group " + std::to_string(gof[u.support[i].pos]) + " twice";
                        break;
                    }
            if (!bad.empty()) break;
        }
    } else {
        bad = "skipped";
    }
    r.add("group condition", bad.empty(), bad);
    return r;
}

VerificationReport verify_design(const BlockDesign& b) {
    VerificationReport r;
    const int n = b.partition.n;
    check_partition(r, b.partition);
    if (!r.passed) return r;
    auto gof = b.partition.group_of();

    std::string bad;
    for (std::size_t i = 0; i < b.blocks.size() && bad.empty(); ++i) {
        const auto& blk = b.blocks[i];
        if (!b.K.empty() && std::find(b.K.begin(), b.K.end(), static_cast<int>(blk.size())) == b.K.end())
            bad = "block " + std::to_string(i) + " has size " + std::to_string(blk.size()) + " not in K";
        for (int x : blk)
            if (x < 0 || x >= n) bad = "block " + std::to_string(i) + " has point " + std::to_string(x) + " out of range";
    }
    r.add("block sizes", bad.empty(), bad);
    if (!bad.empty()) return r;

    bad.clear();
    for (std::size_t i = 0; i < b.blocks.size() && bad.empty(); ++i) {
        const auto& blk = b.blocks[i];
        for (std::size_t a = 0; a < blk.size() && bad.empty(); ++a)
            for (std::size_t c = a + 1; c < blk.size(); ++c)
                if (gof[blk[a]] == gof[blk[c]]) {
                    bad = "block " + std::to_string(i) + " meets group " + std::to_string(gof[blk[a]]) + " twice";
                    break;
                }
    }
    r.add("block meets group at most once", bad.empty(), bad);
    if (!bad.empty()) return r;

    std::vector<char> in_hole(n, 0);
    if (b.hole)
        for (int x : *b.hole)
            if (x >= 0 && x < n) in_hole[x] = 1;
    std::vector<unsigned char> cov(static_cast<std::size_t>(n) * n, 0);
    for (const auto& blk : b.blocks)
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t c = a + 1; c < blk.size(); ++c) {
                int x = std::min(blk[a], blk[c]), y = std::max(blk[a], blk[c]);
                auto& v = cov[static_cast<std::size_t>(x) * n + y];
                if (v < 255) ++v;
            }
    bad.clear();
    for (int x = 0; x < n && bad.empty(); ++x)
        for (int y = x + 1; y < n; ++y) {
            int want = (gof[x] == gof[y] || (in_hole[x] && in_hole[y])) ? 0 : 1;
            int got = cov[static_cast<std::size_t>(x) * n + y];
            if (got != want) {
                bad = "pair {" + std::to_string(x) + "," + std::to_string(y) + "} covered " + std::to_string(got) + " times, expected " + std::to_string(want);
                break;
            }
        }
    r.add(b.hole ? "pair coverage (holey)" : "pair coverage", bad.empty(), bad);

    if (b.resolution) {
        bad.clear();
        std::vector<int> used(b.blocks.size(), 0);
        for (std::size_t ci = 0; ci < b.resolution->size() && bad.empty(); ++ci) {
            std::vector<int> hit(n, 0);
            for (int bi : (*b.resolution)[ci]) {
                if (bi < 0 || bi >= static_cast<int>(b.blocks.size())) {
                    bad = "class " + std::to_string(ci) + " names a missing block";
                    break;
                }
                ++used[bi];
                for (int x : b.blocks[bi]) ++hit[x];
            }
            if (!bad.empty()) break;
            int missing_group = -1;
            for (int x = 0; x < n && bad.empty(); ++x) {
                if (hit[x] > 1) bad = "class " + std::to_string(ci) + " covers point " + std::to_string(x) + " twice";
                else if (hit[x] == 0) {
                    if (missing_group == -1) missing_group = gof[x];
                    else if (missing_group != gof[x]) bad = "class " + std::to_string(ci) + " misses points of two groups";
                }
            }
            if (bad.empty() && missing_group >= 0)
                for (int x : b.partition.groups[missing_group])
                    if (hit[x]) {
                        bad = "class " + std::to_string(ci) + " partially covers group " + std::to_string(missing_group);
                        break;
                    }
        }
        for (std::size_t i = 0; i < used.size() && bad.empty(); ++i)
            if (used[i] != 1) bad = "block " + std::to_string(i) + " lies in " + std::to_string(used[i]) + " classes";
        r.add("resolution", bad.empty(), bad);
    }
    return r;
}

namespace {
void check_map(const std::vector<int>& map, int new_n) {
    std::vector<char> seen(new_n, 0);
    for (int y : map) {
        if (y < 0 || y >= new_n) throw Error("relabel image out of range");
        if (seen[y]++) throw Error("relabel map is not injective");
    }
}
}  // namespace

Codeword relabel_points(const Codeword& u, const std::vector<int>& map, int new_n) {
    std::vector<Entry> s;
    for (const auto& e : u.support) {
        if (e.pos >= static_cast<int>(map.size())) throw Error("relabel map too short");
        s.push_back({map[e.pos], e.sym});
    }
    return Codeword(new_n, std::move(s));
}

ConstantCompositionCode relabel_points(const ConstantCompositionCode& c, const std::vector<int>& map, int new_n) {
    check_map(map, new_n);
    ConstantCompositionCode r{new_n, c.comp, c.d, {}};
    r.words.reserve(c.words.size());
    for (const auto& u : c.words) r.words.push_back(relabel_points(u, map, new_n));
    return r;
}

GroupPartition relabel_points(const GroupPartition& p, const std::vector<int>& map, int new_n) {
    check_map(map, new_n);
    GroupPartition r{new_n, {}};
    for (const auto& g : p.groups) {
        std::vector<int> h;
        for (int x : g) h.push_back(map.at(x));
        std::sort(h.begin(), h.end());
        r.groups.push_back(std::move(h));
    }
    return r;
}

GroupDivisibleCode relabel_points(const GroupDivisibleCode& g, const std::vector<int>& map, int new_n) {
    return GroupDivisibleCode{relabel_points(g.partition, map, new_n), relabel_points(g.code, map, new_n)};
}

BlockDesign relabel_points(const BlockDesign& b, const std::vector<int>& map, int new_n) {
    BlockDesign r = b;
    r.partition = relabel_points(b.partition, map, new_n);
    for (auto& blk : r.blocks) {
        for (int& x : blk) x = map.at(x);
        std::sort(blk.begin(), blk.end());
    }
    if (r.hole)
        for (int& x : *r.hole) x = map.at(x);
    return r;
}

std::vector<int> inverse_map(const std::vector<int>& map, int new_n) {
    check_map(map, new_n);
    std::vector<int> inv(new_n, -1);
    for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace ccc
