// One PASS/FAIL line per acceptance criterion; pass criterion numbers to run a subset.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccc/algebra.hpp"
#include "ccc/bounds.hpp"
#include "ccc/catalog.hpp"
#include "ccc/gdcbuild.hpp"
#include "ccc/pipeline.hpp"

using namespace ccc;

namespace {

const Composition kT{2, 1};
const Composition kQ{1, 1, 1};

// collects the first few failures of a criterion
struct Tally {
    std::vector<std::string> failures;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
};

std::string str(long long v) { return std::to_string(v); }

long long size_of(const CertifiedCode& c) { return c.code ? static_cast<long long>(c.code->size()) : -1; }

void catalog_reproduction(Tally& t) {
    const auto& cat = Catalog::shipped();
    for (const auto& r : cat.rejected()) t.expect(false, "rejected " + r.id + ": " + r.detail);
    for (const auto& c : cat.verify_all()) t.expect(c.ok, c.id + ": " + c.detail);

    struct Want {
        std::string id;
        long long size;
        int n, d;
        Composition comp;
    };
    // the 2^t GDCs are distance-3 objects; everything else is a distance-4 object
    const std::vector<Want> want = {
        {"ternary-d4-n35", 291, 35, 4, kT},           {"quaternary-d4-n5", 6, 5, 4, kQ},
        {"quaternary-d4-n6", 11, 6, 4, kQ},           {"quaternary-d4-n7", 16, 7, 4, kQ},
        {"quaternary-d4-n8", 23, 8, 4, kQ},           {"quaternary-d4-n21", 210, 21, 4, kQ},
        {"quaternary-d4-n35", 595, 35, 4, kQ},        {"quaternary-d4-n39", 741, 39, 4, kQ},
        {"quaternary-d4-n45", 990, 45, 4, kQ},        {"quaternary-d4-n49", 1176, 49, 4, kQ},
        {"quaternary-d4-n51", 1275, 51, 4, kQ},       {"quaternary-d4-n65", 2080, 65, 4, kQ},
        {"quaternary-d4-gdc-4x4", 96, 16, 4, kQ},     {"quaternary-d4-gdc-6x4", 216, 24, 4, kQ},
        {"quaternary-d4-gdc-10x4", 600, 40, 4, kQ},   {"quaternary-d3-gdc-2x4", 48, 8, 3, kQ},
        {"quaternary-d3-gdc-2x5", 80, 10, 3, kQ},     {"quaternary-d3-gdc-2x6", 120, 12, 3, kQ},
    };
    for (const auto& w : want) {
        const auto* e = cat.find(w.id);
        if (!e || !e->code) {
            t.expect(false, "missing " + w.id);
            continue;
        }
        const auto& g = *e->code;
        t.expect(static_cast<long long>(g.size()) == w.size, w.id + " has " + str(g.size()) + " words, want " + str(w.size));
        t.expect(g.code.n == w.n && g.code.d == w.d && g.code.comp == w.comp, w.id + " parameters differ");
        // independent re-check of distance and composition, pair by pair
        bool good = true;
        for (std::size_t i = 0; i < g.code.words.size() && good; ++i) {
            good = composition_of(g.code.words[i], w.comp.q()) == w.comp.weights;
            for (std::size_t j = i + 1; j < g.code.words.size() && good; ++j)
                good = hamming_distance(g.code.words[i], g.code.words[j]) >= w.d;
        }
        t.expect(good, w.id + " fails distance >= " + str(w.d) + " or composition");
        t.expect(verify_gdc(g).passed, w.id + " fails group conditions");
    }
    t.notes << want.size() << " sized entries, " << cat.entries().size() << " entries verified";
}

void latin_squares(Tally& t) {
    for (int g = 3; g <= 12; ++g) {
        auto L = latin_gdc(g);
        t.expect(verify_gdc(L).passed, "latin_gdc(" + str(g) + ") fails verification");
        t.expect(L.type() == GddType::from_sizes({g, g, g}), "latin_gdc(" + str(g) + ") type " + L.type().str());
        t.expect(L.d() == 4 && L.code.comp == kQ, "latin_gdc(" + str(g) + ") parameters");
        t.expect(static_cast<long long>(L.size()) == 3LL * g * g, "latin_gdc(" + str(g) + ") size " + str(L.size()));
    }
    t.notes << "g = 3..12, sizes 3g^2";
}

void prime_powers(Tally& t) {
    const std::vector<std::pair<int, int>> alphas = {{43, 26}, {47, 5}, {59, 2}, {67, 2}, {71, 7}, {83, 2}, {107, 2}};
    for (auto [n, a] : alphas) {
        auto c = prime_power_code(n, a);
        t.expect(verify_code(c).passed, str(n) + " fails verification");
        t.expect(static_cast<long long>(c.size()) == 1LL * n * (n - 1) / 2, str(n) + " size " + str(c.size()));
        auto found = find_generator(n);
        t.expect(found && prime_power_condition(n, *found).empty(), "find_generator(" + str(n) + ") invalid");
        if (found) t.notes << n << ":" << *found << " ";
    }
    t.expect(prime_power_code(47, 5).size() == 1081, "47 with alpha 5 is not 1081");
    t.notes << "(found generators)";
}

void ternary_sweep(Tally& t) {
    auto s = sweep(3, 4, kT, 3, 99, {}, 4);
    t.expect(s.rows.size() == 25, "expected 25 lengths");
    for (const auto& r : s.rows) {
        auto u = upper_bound(r.n, 4, kT).value;
        t.expect(r.result.status == Status::Optimal, "n=" + str(r.n) + " " + status_name(r.result.status) + " " + r.result.detail);
        t.expect(u && size_of(r.result) == *u, "n=" + str(r.n) + " size " + str(size_of(r.result)));
    }
    std::map<int, long long> spot = {{35, 291}, {39, 364}, {43, 444}, {47, 532}};
    for (const auto& r : s.rows)
        if (spot.count(r.n)) t.expect(size_of(r.result) == spot[r.n], "spot n=" + str(r.n));
    t.notes << s.optimal << "/25 optimal";
}

void quaternary_d3(Tally& t) {
    struct Row {
        int n;
        std::string gdc;
        long long size;
    };
    const std::vector<Row> rows = {{44, "GDC 10^4 4^1", 1520}, {47, "GDC 10^4 6^1", 1680}, {51, "GDC 10^5", 2000},
                                   {54, "GDC 10^5 4^1", 2400}, {59, "GDC 10^5 8^1", 2800}, {62, "GDC 14^4 6^1", 3024}};
    for (const auto& r : rows) {
        auto c = build_optimal(4, r.n, 3, kQ);
        t.expect(c.status == Status::Optimal, "n=" + str(r.n) + " " + status_name(c.status) + " " + c.detail);
        t.expect(size_of(c) == 1LL * r.n * (r.n - 1), "n=" + str(r.n) + " size " + str(size_of(c)));
        t.expect(c.intermediate(r.gdc) == r.size, "n=" + str(r.n) + " intermediate " + r.gdc + " missing or wrong");
    }
    for (int n : {158, 167}) {
        auto c = build_optimal(4, n, 3, kQ);
        t.expect(c.status == Status::Optimal && size_of(c) == 1LL * n * (n - 1), "n=" + str(n) + " " + c.detail);
    }
    auto c = build_optimal(4, 173, 3, kQ);
    bool ok173 = (c.status == Status::Optimal && size_of(c) == 173LL * 172) ||
                 (c.status == Status::Unresolved && !c.unresolved.empty() && c.unresolved.front() == "TD(5,18)");
    t.expect(ok173, "n=173 " + status_name(c.status) + " " + c.detail);
    t.notes << "44..62 with intermediates, 158, 167; 173 " << status_name(c.status);
}

std::map<int, CertifiedCode> odd_results;

void quaternary_d4(Tally& t) {
    auto s = sweep(4, 4, kQ, 3, 127, {}, 2);
    std::set<int> open;
    for (const auto& r : s.rows) {
        if (r.result.status == Status::Open) open.insert(r.n);
        if (r.n >= 19) {
            t.expect(r.result.status == Status::Optimal,
                     "n=" + str(r.n) + " " + status_name(r.result.status) + " " + r.result.detail);
            odd_results[r.n] = r.result;
        }
    }
    t.expect(open == std::set<int>{9, 13, 15, 17}, "open set differs");
    std::map<int, long long> spot = {{77, 2926}, {119, 7021}, {127, 8001}};
    for (auto [n, v] : spot) t.expect(size_of(odd_results[n]) == v, "spot n=" + str(n));
    t.expect(odd_results[119].intermediate("GDC 30^3 18^1") == 4320, "n=119 intermediate 4320 missing");
    t.notes << s.optimal << " optimal odd lengths, open {9,13,15,17}";
}

void shortening(Tally& t) {
    if (odd_results.empty()) quaternary_d4(t);
    int count = 0;
    for (const auto& [n, c] : odd_results) {
        if (c.status != Status::Optimal || !c.code) continue;
        auto s = shorten(*c.code);
        auto u = upper_bound(n - 1, 4, kQ).value;
        t.expect(verify_code(s).passed, "shorten(" + str(n) + ") fails verification");
        t.expect(u && static_cast<long long>(s.size()) >= *u, "shorten(" + str(n) + ") size " + str(s.size()));
        t.expect(certify(s, 4, n - 1, 4, kQ).status == Status::Optimal, "shorten(" + str(n) + ") not certified");
        ++count;
    }
    t.notes << count << " even lengths 18..126";
}

void oracle(Tally& t) {
    for (auto [n, want] : {std::pair{5, 6LL}, {6, 11LL}}) {
        auto r = brute_force_optimum(n, 4, kQ, OracleMode::Exact, {0, std::chrono::minutes(5)});
        t.expect(r.complete && r.size == want, "exact n=" + str(n) + " gave " + str(r.size));
        t.expect(*optimal_size(4, n, 4, kQ).value == want, "bound table n=" + str(n));
    }
    for (auto [n, want] : {std::pair{7, 16LL}, {8, 23LL}}) {
        auto r = brute_force_optimum(n, 4, kQ, OracleMode::WitnessOnly, {0, std::chrono::seconds(50), want});
        t.expect(r.size >= want && verify_code(r.witness).passed, "witness n=" + str(n) + " reached " + str(r.size));
        const auto* e = Catalog::shipped().lookup_code(n, 4, kQ);
        t.expect(e && static_cast<long long>(e->code->size()) == want && *optimal_size(4, n, 4, kQ).value == want,
                 "catalog cross-check n=" + str(n));
        t.notes << "n=" << n << " witness " << r.size << " ";
    }
}

void hill_climbing(Tally& t) {
    for (const auto& e : Catalog::shipped().entries()) {
        if (!e.prestructure) continue;
        const auto& p = *e.prestructure;
        long long pairs = 0;
        for (const auto& g : p.groups.groups) pairs += 1LL * g.size() * (g.size() - 1) / 2;
        long long n = p.groups.n;
        long long want = (n * (n - 1) / 2 - pairs - 6LL * static_cast<long long>(p.pre.blocks.size())) / 3;
        bool done = false;
        std::string why;
        for (std::uint64_t seed = 0; seed < 10 && !done; ++seed) {
            SearchBudget b;
            b.seed = seed;
            b.wall = std::chrono::seconds(30);
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto d = hill_climb_gdd(p.groups, {3, 4}, p.pre, b);
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                done = verify_design(d).passed && d.census()[3] == want && d.census()[4] == static_cast<int>(p.pre.blocks.size()) &&
                       secs <= 30;
                if (!done) why = "census or time";
            } catch (const std::exception& ex) {
                why = ex.what();
            }
        }
        t.expect(done, e.id + ": " + why);
        t.notes << GddType::of(p.groups).str() << ":" << want << " ";
    }
    const auto* first = Catalog::shipped().lookup_prestructure(GddType::parse("5^3 6^1"));
    t.expect(first != nullptr, "5^3 6^1 prestructure missing");
}

void properties(Tally& t) {
    int rc = std::system(CCC_PROPERTIES_BIN " --no-intro=true --minimal=true");
    t.expect(rc == 0, "property binary exited with " + str(rc));
    t.notes << "standalone property binary";
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
        {"catalog reproduction", catalog_reproduction},
        {"Latin-square GDCs 3g^2", latin_squares},
        {"prime-power codes and generators", prime_powers},
        {"ternary sweep 3..99", ternary_sweep},
        {"quaternary distance-3 rows", quaternary_d3},
        {"quaternary distance-4 odd sweep", quaternary_d4},
        {"shortening to even lengths", shortening},
        {"oracle equivalence", oracle},
        {"hill-climbing the seven prestructures", hill_climbing},
        {"property suites", properties},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        if (!wanted.empty() && !wanted.count(id)) continue;
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << id << " " << criteria[i].first << " ("
                  << static_cast<int>(secs * 10) / 10.0 << " s) " << t.notes.str() << "\n";
        for (std::size_t k = 0; k < t.failures.size() && k < 8; ++k) std::cout << "    " << t.failures[k] << "\n";
        std::cout.flush();
        failed += !t.ok();
    }
    return failed ? 1 : 0;
}
