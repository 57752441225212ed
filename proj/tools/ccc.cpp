#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccc/bounds.hpp"
#include "ccc/catalog.hpp"
#include "ccc/io.hpp"
#include "ccc/pipeline.hpp"

using namespace ccc;
using json = nlohmann::json;

namespace {

// exit codes, documented in the README
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kSuboptimal = 2;
constexpr int kOpen = 3;
constexpr int kUnresolved = 4;
constexpr int kVerifyFailed = 5;
constexpr int kOutOfScope = 6;
constexpr int kUsage = 64;

struct UsageError : Error {
    using Error::Error;
};

bool porcelain = false;

void record(const json& j) { std::cout << j.dump() << "\n"; }

int exit_for(Status s) {
    switch (s) {
        case Status::Optimal: return kOk;
        case Status::Suboptimal: return kSuboptimal;
        case Status::Open: return kOpen;
        case Status::Unresolved: return kUnresolved;
        case Status::OutOfScope: return kOutOfScope;
        case Status::VerificationFailed: return kVerifyFailed;
    }
    return kError;
}

// "q n d w1 .. wk"; q must agree with the composition
struct Params {
    int q = 0, n = 0, d = 0;
    Composition comp;
};

Params params_from(const std::vector<int>& v, bool with_q) {
    std::size_t off = with_q ? 1 : 0;
    if (v.size() < off + 3) throw UsageError(with_q ? "expected q n d w1 .. wk" : "expected n d w1 .. wk");
    Params p;
    p.n = v[off];
    p.d = v[off + 1];
    std::vector<int> w(v.begin() + static_cast<long>(off) + 2, v.end());
    for (int x : w)
        if (x <= 0) throw UsageError("composition weights must be positive");
    p.comp = canonicalize(w);
    p.q = with_q ? v[0] : p.comp.q();
    if (p.q != p.comp.q())
        throw UsageError("q=" + std::to_string(p.q) + " does not match composition " + p.comp.str());
    if (p.n <= 0 || p.d <= 0) throw UsageError("n and d must be positive");
    return p;
}

json bound_json(const BoundValue& b) {
    json j = {{"kind", b.kind == BoundValue::Kind::Exact ? "exact" : b.kind == BoundValue::Kind::UpperBound ? "upper" : "open"}};
    j["value"] = b.value ? json(*b.value) : json(nullptr);
    return j;
}

json result_json(const CertifiedCode& c) {
    json j = {{"record", "build"},     {"q", c.q},
              {"n", c.n},              {"d", c.d},
              {"comp", c.comp.weights}, {"status", status_name(c.status)},
              {"detail", c.detail},    {"bound", bound_json(c.bound)},
              {"seconds", c.seconds}};
    j["size"] = c.code ? json(c.code->size()) : json(nullptr);
    json inter = json::array();
    for (const auto& [name, size] : c.intermediates) inter.push_back({{"name", name}, {"size", size}});
    j["intermediates"] = inter;
    if (!c.unresolved.empty()) j["unresolved"] = c.unresolved;
    return j;
}

std::string label(int n, int d, const Composition& comp) {
    return "(" + std::to_string(n) + "," + std::to_string(d) + "," + comp.str() + ")";
}

std::string default_out(const Params& p) {
    std::string s = "code-q" + std::to_string(p.q) + "-n" + std::to_string(p.n) + "-d" + std::to_string(p.d);
    for (int w : p.comp.weights) s += "-" + std::to_string(w);
    return s + ".ccc";
}

int cmd_bound(const std::vector<int>& args) {
    auto p = params_from(args, true);
    auto b = optimal_size(p.q, p.n, p.d, p.comp);
    auto u = upper_bound(p.n, p.d, p.comp);
    if (porcelain) {
        record({{"record", "bound"}, {"q", p.q}, {"n", p.n}, {"d", p.d}, {"comp", p.comp.weights},
                {"optimal", bound_json(b)}, {"upper", bound_json(u)}});
    } else {
        std::cout << "A" << label(p.n, p.d, p.comp) << ": " << b.str() << "\n";
        std::cout << "upper bound: " << u.str() << "\n";
    }
    return kOk;
}

int cmd_build(const std::vector<int>& args, std::uint64_t seed, const std::string& out, bool no_write,
              bool show_provenance, int wall_seconds) {
    auto p = params_from(args, true);
    SearchBudget budget;
    budget.seed = seed;
    if (wall_seconds > 0) budget.wall = std::chrono::milliseconds(1000LL * wall_seconds);
    auto c = build_optimal(p.q, p.n, p.d, p.comp, budget);

    std::string path;
    if (c.code && c.status != Status::VerificationFailed && !no_write) {
        path = out.empty() ? default_out(p) : out;
        std::vector<std::string> comments = {"status: " + status_name(c.status), "seed: " + std::to_string(seed)};
        std::istringstream prov(c.provenance.str());
        for (std::string line; std::getline(prov, line);) comments.push_back("provenance: " + line);
        if (path == "-")
            std::cout << emit_code(*c.code, comments);
        else
            write_text_file_atomic(path, emit_code(*c.code, comments));
    }
    if (porcelain) {
        auto j = result_json(c);
        j["file"] = path.empty() || path == "-" ? json(nullptr) : json(path);
        record(j);
    } else if (path != "-") {
        std::cout << status_name(c.status) << " " << c.detail << "\n";
        for (const auto& [name, size] : c.intermediates) std::cout << "  intermediate " << name << ": " << size << "\n";
        for (const auto& u : c.unresolved) std::cout << "  unresolved: " << u << "\n";
        if (show_provenance && c.code) std::cout << c.provenance.str() << "\n";
        if (!path.empty()) std::cout << "wrote " << path << "\n";
    }
    return exit_for(c.status);
}

int report_failure(const std::string& file, const std::string& what) {
    if (porcelain)
        record({{"record", "verify"}, {"file", file}, {"ok", false}, {"detail", what}});
    else
        std::cout << "FAIL " << file << "\n" << what << "\n";
    return kVerifyFailed;
}

int cmd_verify(const std::string& file) {
    std::string text;
    try {
        text = read_text_file(file);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    std::string magic = file_magic(text);
    try {
        if (magic == "CCC" || magic == "BASES") {
            GroupDivisibleCode g = magic == "CCC" ? parse_code(text).gdc : develop(parse_bases(text).bases);
            auto r = verify_gdc(g);
            if (!r.passed) return report_failure(file, r.summary());
            if (static_cast<int>(g.partition.groups.size()) == g.code.n) {
                auto c = as_code(g);
                auto cert = certify(c, c.q(), c.n, c.d, c.comp);
                if (porcelain) {
                    auto j = result_json(cert);
                    j["record"] = "verify";
                    j["file"] = file;
                    j["ok"] = true;
                    record(j);
                } else {
                    std::cout << "verified " << file << ": " << c.size() << " words, " << label(c.n, c.d, c.comp)
                              << "_" << c.q() << "\n";
                    std::cout << status_name(cert.status) << " " << cert.detail << "\n";
                }
                return cert.status == Status::Optimal ? kOk : exit_for(cert.status);
            }
            if (porcelain)
                record({{"record", "verify"}, {"file", file}, {"ok", true}, {"size", g.size()}, {"type", g.type().str()}});
            else
                std::cout << "verified " << file << ": GDC of type " << g.type().str() << ", " << g.size()
                          << " words, d=" << g.d() << "\n";
            return kOk;
        }
        if (magic == "GDD") {
            auto f = parse_design(text);
            auto r = verify_design(f.design);
            if (!r.passed) return report_failure(file, r.summary());
            if (porcelain)
                record({{"record", "verify"}, {"file", file}, {"ok", true}, {"size", f.design.blocks.size()},
                        {"type", f.design.type().str()}, {"resolvable", f.design.resolution.has_value()}});
            else
                std::cout << "verified " << file << ": design of type " << f.design.type().str() << ", "
                          << f.design.blocks.size() << " blocks" << (f.design.resolution ? ", resolvable" : "") << "\n";
            return kOk;
        }
        if (magic == "PRE") {
            auto e = load_catalog_entry(file, CatalogKind::Prestructure);
            const auto& pre = *e.prestructure;
            if (porcelain)
                record({{"record", "verify"}, {"file", file}, {"ok", true}, {"size", pre.pre.blocks.size()},
                        {"type", GddType::of(pre.groups).str()}});
            else
                std::cout << "verified " << file << ": prestructure on " << GddType::of(pre.groups).str() << ", "
                          << pre.pre.blocks.size() << " fixed blocks\n";
            return kOk;
        }
    } catch (const std::exception& e) {
        return report_failure(file, e.what());
    }
    return report_failure(file, "unknown file magic '" + magic + "'");
}

int cmd_sweep(const std::vector<int>& args, int from, int to, int step, std::uint64_t seed) {
    std::vector<int> full = args;
    // sweep takes q d comp..., n comes from the range
    if (full.size() < 3) throw UsageError("expected q d w1 .. wk");
    full.insert(full.begin() + 1, from);
    auto p = params_from(full, true);
    if (from > to || step <= 0) throw UsageError("empty range");
    SearchBudget budget;
    budget.seed = seed;
    auto s = sweep(p.q, p.d, p.comp, from, to, budget, step);
    for (const auto& row : s.rows) {
        const auto& c = row.result;
        if (porcelain) {
            auto j = result_json(c);
            j["record"] = "sweep-row";
            record(j);
        } else {
            std::cout << "n=" << row.n << " " << status_name(c.status) << " " << c.detail << "\n";
        }
    }
    if (porcelain)
        record({{"record", "sweep-summary"}, {"optimal", s.optimal}, {"suboptimal", s.suboptimal}, {"open", s.open},
                {"unresolved", s.unresolved}, {"out_of_scope", s.out_of_scope}, {"failed", s.failed}});
    else
        std::cout << "optimal " << s.optimal << ", suboptimal " << s.suboptimal << ", open " << s.open
                  << ", unresolved " << s.unresolved << ", out of scope " << s.out_of_scope << ", failed " << s.failed
                  << "\n";
    // Open lengths are reported but do not fail a sweep
    if (s.failed) return kVerifyFailed;
    if (s.unresolved) return kUnresolved;
    if (s.suboptimal) return kSuboptimal;
    return kOk;
}

int cmd_hillclimb(const std::string& type, const std::vector<int>& K, const std::string& pre_file,
                  std::uint64_t seed, const std::string& out, long long iterations) {
    GroupPartition groups;
    Prestructure pre;
    if (!pre_file.empty()) {
        auto e = load_catalog_entry(pre_file, CatalogKind::Prestructure);
        groups = e.prestructure->groups;
        pre = e.prestructure->pre;
        if (!type.empty() && !(GddType::parse(type) == GddType::of(groups)))
            throw UsageError("--type " + type + " differs from the prestructure's " + GddType::of(groups).str());
    } else {
        if (type.empty()) throw UsageError("--type or --prestructure is required");
        groups = GroupPartition::from_sizes(GddType::parse(type).sizes());
    }
    SearchBudget budget;
    budget.seed = seed;
    if (iterations > 0) budget.max_iterations = static_cast<std::uint64_t>(iterations);
    BlockDesign d;
    try {
        d = hill_climb_gdd(groups, K, pre, budget);
    } catch (const SearchFailure& f) {
        if (porcelain)
            record({{"record", "hillclimb"}, {"ok", false}, {"detail", f.what()}, {"best", f.best}});
        else
            std::cout << "no design within budget: " << f.what() << "\n";
        return kUnresolved;
    }
    auto r = verify_design(d);
    if (!r.passed) return report_failure("<hill-climbed design>", r.summary());
    if (!out.empty()) write_text_file_atomic(out, emit_design(d, {"seed: " + std::to_string(seed)}));
    auto census = d.census();
    if (porcelain) {
        json c = json::object();
        for (auto [k, m] : census) c[std::to_string(k)] = m;
        record({{"record", "hillclimb"}, {"ok", true}, {"type", d.type().str()}, {"blocks", d.blocks.size()},
                {"census", c}, {"seed", seed}});
    } else {
        std::cout << "verified design of type " << d.type().str() << ":";
        for (auto [k, m] : census) std::cout << " " << m << " blocks of size " << k << ";";
        std::cout << " seed " << seed << "\n";
        if (!out.empty()) std::cout << "wrote " << out << "\n";
    }
    return kOk;
}

int cmd_catalog(const std::string& action, const std::string& dir) {
    const auto& cat = Catalog::shipped();
    if (action == "verify") {
        bool ok = true;
        for (const auto& c : cat.verify_all()) {
            ok = ok && c.ok;
            if (porcelain)
                record({{"record", "catalog-check"}, {"id", c.id}, {"ok", c.ok}, {"size", c.size}, {"detail", c.detail}});
            else
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.id << ": " << c.detail << "\n";
        }
        return ok ? kOk : kVerifyFailed;
    }
    if (action == "list") {
        for (const auto& e : cat.entries()) {
            long long size = e.code ? static_cast<long long>(e.code->size())
                             : e.prestructure ? static_cast<long long>(e.prestructure->pre.blocks.size())
                             : e.design       ? static_cast<long long>(e.design->blocks.size())
                                              : static_cast<long long>(e.generators.size());
            if (porcelain)
                record({{"record", "catalog-entry"}, {"id", e.id}, {"kind", kind_name(e.kind)}, {"size", size},
                        {"cite", e.cite}});
            else
                std::cout << kind_name(e.kind) << " " << e.id << " " << size << (e.cite.empty() ? "" : "  " + e.cite)
                          << "\n";
        }
        for (const auto& r : cat.rejected()) std::cout << "rejected " << r.id << ": " << r.detail << "\n";
        return cat.rejected().empty() ? kOk : kVerifyFailed;
    }
    if (action == "seed-library") {
        if (dir.empty()) throw UsageError("seed-library needs a directory");
        auto count = seed_design_library(dir);
        if (porcelain)
            record({{"record", "seed-library"}, {"dir", dir}, {"designs", count}});
        else
            std::cout << count << " designs in " << dir << "\n";
        return kOk;
    }
    throw UsageError("unknown catalog action '" + action + "'");
}

int cmd_oracle(const std::vector<int>& args, bool witness, long long max_nodes, int seconds, long long target) {
    auto p = params_from(args, false);
    OracleBudget b;
    if (max_nodes > 0) b.max_nodes = static_cast<std::uint64_t>(max_nodes);
    if (seconds > 0) b.wall = std::chrono::milliseconds(1000LL * seconds);
    b.target = target;
    auto r = brute_force_optimum(p.n, p.d, p.comp, witness ? OracleMode::WitnessOnly : OracleMode::Exact, b);
    if (porcelain)
        record({{"record", "oracle"}, {"n", p.n}, {"d", p.d}, {"comp", p.comp.weights}, {"size", r.size},
                {"complete", r.complete}, {"nodes", r.nodes}});
    else
        std::cout << r.size << "\n"
                  << (r.complete ? "proven maximum" : "lower bound only") << ", " << r.nodes << " nodes\n";
    // an Exact run that ran out of budget has not answered the question
    return witness || r.complete ? kOk : kOpen;
}

int cmd_recipe(const std::vector<int>& args) {
    auto p = params_from(args, true);
    auto r = recipe_for(p.q, p.n, p.d, p.comp);
    if (porcelain) {
        json j = {{"record", "recipe"}, {"route", r.route}, {"cite", r.cite}, {"steps", r.steps}};
        j["kind"] = r.kind == Recipe::Kind::Build ? "build" : r.kind == Recipe::Kind::Open ? "open" : "out-of-scope";
        j["expected"] = r.expected ? json(*r.expected) : json(nullptr);
        record(j);
    } else {
        std::cout << r.str() << "\n";
    }
    return r.kind == Recipe::Kind::Build ? kOk : r.kind == Recipe::Kind::Open ? kOpen : kOutOfScope;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal constant-composition codes of weight three"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string catalog_dir;
    app.add_flag("--porcelain", porcelain, "one JSON record per line");
    app.add_option("--catalog", catalog_dir, "catalog directory");

    std::vector<int> args;
    std::uint64_t seed = 0;
    std::string out, file, type, pre_file, action, dir;
    std::vector<int> K;
    int from = 0, to = 0, step = 1, seconds = 0;
    long long limit = 0, target = 0;
    bool no_write = false, show_provenance = false, exact = false, witness = false;

    auto* bound = app.add_subcommand("bound", "optimal size or upper bound");
    bound->add_option("params", args, "q n d w1 .. wk")->required()->expected(4, -1);

    auto* build = app.add_subcommand("build", "construct and certify an optimal code");
    build->add_option("params", args, "q n d w1 .. wk")->required()->expected(4, -1);
    build->add_option("--seed", seed);
    build->add_option("--out", out, "output file, '-' for stdout");
    build->add_flag("--no-write", no_write);
    build->add_flag("--provenance", show_provenance);
    build->add_option("--seconds", seconds, "wall budget per search");

    auto* verify = app.add_subcommand("verify", "verify a code, base, design or prestructure file");
    verify->add_option("file", file)->required();

    auto* sw = app.add_subcommand("sweep", "build every length in a range");
    sw->add_option("params", args, "q d w1 .. wk")->required()->expected(3, -1);
    sw->add_option("--from", from)->required();
    sw->add_option("--to", to)->required();
    sw->add_option("--step", step);
    sw->add_option("--seed", seed);

    auto* hc = app.add_subcommand("hillclimb", "complete a GDD by hill-climbing");
    hc->add_option("--type", type, "group type, e.g. 5^3 6^1");
    hc->add_option("--k", K, "block sizes")->required()->expected(1, -1);
    hc->add_option("--prestructure", pre_file)->check(CLI::ExistingFile);
    hc->add_option("--seed", seed);
    hc->add_option("--out", out);
    hc->add_option("--iterations", limit);

    auto* cat = app.add_subcommand("catalog", "verify, list or export the shipped catalog");
    cat->add_option("action", action)->required()->check(CLI::IsMember({"verify", "list", "seed-library"}));
    cat->add_option("dir", dir);

    auto* oracle = app.add_subcommand("oracle", "exact maximum clique on small lengths");
    oracle->add_option("params", args, "n d w1 .. wk")->required()->expected(3, -1);
    auto* fe = oracle->add_flag("--exact", exact);
    oracle->add_flag("--witness", witness)->excludes(fe);
    oracle->add_option("--max-nodes", limit);
    oracle->add_option("--seconds", seconds);
    oracle->add_option("--target", target, "with --witness, stop at this size");

    auto* recipe = app.add_subcommand("recipe", "show the construction chosen for a length");
    recipe->add_option("params", args, "q n d w1 .. wk")->required()->expected(4, -1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    if (!catalog_dir.empty()) setenv("CCC_CATALOG_DIR", catalog_dir.c_str(), 1);

    try {
        if (*bound) return cmd_bound(args);
        if (*build) return cmd_build(args, seed, out, no_write, show_provenance, seconds);
        if (*verify) return cmd_verify(file);
        if (*sw) return cmd_sweep(args, from, to, step, seed);
        if (*hc) return cmd_hillclimb(type, K, pre_file, seed, out, limit);
        if (*cat) return cmd_catalog(action, dir);
        if (*oracle) return cmd_oracle(args, witness, limit, seconds, target);
        if (*recipe) return cmd_recipe(args);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        if (porcelain)
            record({{"record", "error"}, {"detail", e.what()}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kUsage;
}
