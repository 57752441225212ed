#include "ccc/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace ccc {

namespace fs = std::filesystem;

std::string kind_name(CatalogKind k) {
    switch (k) {
        case CatalogKind::Code: return "code";
        case CatalogKind::BaseCodewordSet: return "bases";
        case CatalogKind::Prestructure: return "prestructure";
        case CatalogKind::Design: return "design";
        case CatalogKind::Generators: return "generators";
    }
    return "?";
}

bool CatalogEntry::is_plain_code() const {
    return code && static_cast<int>(code->partition.groups.size()) == code->code.n;
}

std::string default_catalog_dir() {
    if (const char* e = std::getenv("CCC_CATALOG_DIR"); e && *e) return e;
#ifdef CCC_DEFAULT_CATALOG_DIR
    return CCC_DEFAULT_CATALOG_DIR;
#else
    return "catalog";
#endif
}

namespace {

std::optional<long long> expected_size_of(const std::vector<std::string>& comments) {
    auto v = comment_value(comments, "expect");
    if (v.rfind("size ", 0) != 0) return std::nullopt;
    return std::stoll(v.substr(5));
}

std::optional<GddType> expected_type_of(const std::vector<std::string>& comments) {
    auto v = comment_value(comments, "type");
    if (v.empty()) return std::nullopt;
    return GddType::parse(v);
}

void check_expectations(const CatalogEntry& e, long long size, const std::optional<GddType>& type) {
    if (e.expected_size && *e.expected_size != size)
        throw Error("size " + std::to_string(size) + " differs from the expected " + std::to_string(*e.expected_size));
    if (e.expected_type && type && !(*e.expected_type == *type))
        throw Error("type " + type->str() + " differs from the expected " + e.expected_type->str());
}

std::map<int, int> parse_generators(const std::string& text, std::vector<std::string>& comments) {
    std::istringstream is(text);
    std::map<int, int> out;
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (line.rfind("#", 0) == 0) {
            comments.push_back(line.size() > 1 ? line.substr(2) : "");
            continue;
        }
        std::istringstream ls(line);
        std::string k;
        if (!(ls >> k)) continue;
        if (no == 1 && k == "GEN") continue;
        int n, a;
        if (k != "alpha" || !(ls >> n >> a)) throw ParseError(no, "expected 'alpha n a'");
        out[n] = a;
    }
    return out;
}

}  // namespace

CatalogEntry load_catalog_entry(const std::string& path, CatalogKind kind) {
    CatalogEntry e;
    e.id = fs::path(path).filename().string();
    e.kind = kind;
    e.path = path;
    e.text = read_text_file(path);
    std::vector<std::string> comments;
    switch (kind) {
        case CatalogKind::Code: {
            auto f = read_code(e.text);
            comments = f.comments;
            e.code = f.gdc;
            break;
        }
        case CatalogKind::BaseCodewordSet: {
            auto f = parse_bases(e.text);
            comments = f.comments;
            e.bases = f.bases;
            e.code = develop(f.bases);
            break;
        }
        case CatalogKind::Prestructure: {
            auto f = parse_prestructure(e.text);
            comments = f.comments;
            e.prestructure = f;
            break;
        }
        case CatalogKind::Design: {
            auto f = read_design(e.text);
            comments = f.comments;
            e.design = f.design;
            break;
        }
        case CatalogKind::Generators: {
            e.generators = parse_generators(e.text, comments);
            break;
        }
    }
    e.cite = comment_value(comments, "cite");
    e.expected_size = expected_size_of(comments);
    e.expected_type = expected_type_of(comments);

    if (e.code) {
        check_expectations(e, static_cast<long long>(e.code->size()), e.code->type());
    } else if (e.prestructure) {
        const auto& p = *e.prestructure;
        auto gof = p.groups.group_of();
        std::vector<std::vector<char>> seen(p.groups.n, std::vector<char>(p.groups.n, 0));
        for (const auto& b : p.pre.blocks)
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (b[i] < 0 || b[i] >= p.groups.n) throw Error("prestructure point out of range");
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    if (gof[b[i]] == gof[b[j]])
                        throw Error("prestructure block meets a group twice at {" + std::to_string(b[i]) + "," + std::to_string(b[j]) + "}");
                    auto& s = seen[std::min(b[i], b[j])][std::max(b[i], b[j])];
                    if (s) throw Error("prestructure covers pair {" + std::to_string(std::min(b[i], b[j])) + "," + std::to_string(std::max(b[i], b[j])) + "} twice");
                    s = 1;
                }
            }
        check_expectations(e, static_cast<long long>(p.pre.blocks.size()), GddType::of(p.groups));
    } else if (e.design) {
        check_expectations(e, static_cast<long long>(e.design->blocks.size()), e.design->type());
    } else if (kind == CatalogKind::Generators) {
        for (auto [n, a] : e.generators) {
            auto why = prime_power_condition(n, a);
            if (!why.empty()) throw Error("alpha " + std::to_string(a) + " for " + std::to_string(n) + ": " + why);
        }
    }
    return e;
}

namespace {

const std::vector<std::pair<std::string, CatalogKind>> kKindDirs = {
    {"code", CatalogKind::Code},          {"bases", CatalogKind::BaseCodewordSet},
    {"prestructure", CatalogKind::Prestructure}, {"design", CatalogKind::Design},
    {"generators", CatalogKind::Generators},
};

std::vector<std::pair<std::string, CatalogKind>> catalog_files(const std::string& dir) {
    std::vector<std::pair<std::string, CatalogKind>> out;
    for (const auto& [sub, kind] : kKindDirs) {
        fs::path p = fs::path(dir) / sub;
        if (!fs::is_directory(p)) continue;
        std::vector<std::string> files;
        for (const auto& f : fs::directory_iterator(p))
            if (f.is_regular_file() && f.path().extension() != ".tmp") files.push_back(f.path().string());
        std::sort(files.begin(), files.end());
        for (auto& f : files) out.push_back({f, kind});
    }
    return out;
}

}  // namespace

Catalog Catalog::load(const std::string& dir) {
    Catalog c;
    c.dir_ = dir;
    for (const auto& [path, kind] : catalog_files(dir)) {
        try {
            c.entries_.push_back(load_catalog_entry(path, kind));
        } catch (const std::exception& ex) {
            c.rejected_.push_back({fs::path(path).filename().string(), false, ex.what(), 0});
        }
    }
    return c;
}

const Catalog& Catalog::shipped() {
    static const Catalog c = load(default_catalog_dir());
    return c;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

const CatalogEntry* Catalog::lookup_code(int n, int d, const Composition& comp) const {
    for (const auto& e : entries_)
        if (e.is_plain_code() && e.code->code.n == n && e.code->code.d == d && e.code->code.comp == comp) return &e;
    return nullptr;
}

const CatalogEntry* Catalog::lookup_gdc(const GddType& type, int d, const Composition& comp) const {
    for (const auto& e : entries_)
        if (e.code && e.code->code.d == d && e.code->code.comp == comp && e.code->type() == type) return &e;
    return nullptr;
}

const CatalogEntry* Catalog::lookup_prestructure(const GddType& type) const {
    for (const auto& e : entries_)
        if (e.prestructure && GddType::of(e.prestructure->groups) == type) return &e;
    return nullptr;
}

const CatalogEntry* Catalog::lookup_design(const GddType& type, const std::vector<int>& K, bool resolvable) const {
    auto want = K;
    std::sort(want.begin(), want.end());
    for (const auto& e : entries_) {
        if (!e.design || !(e.design->type() == type)) continue;
        if (resolvable && !e.design->resolution) continue;
        auto have = e.design->K;
        std::sort(have.begin(), have.end());
        // the design's block sizes must be allowed by K
        if (std::all_of(have.begin(), have.end(), [&](int k) { return std::binary_search(want.begin(), want.end(), k); }))
            return &e;
    }
    return nullptr;
}

std::optional<int> Catalog::generator(int n) const {
    for (const auto& e : entries_)
        if (auto it = e.generators.find(n); it != e.generators.end()) return it->second;
    return std::nullopt;
}

std::vector<CatalogCheck> Catalog::verify_all() const {
    std::vector<CatalogCheck> out;
    for (const auto& [path, kind] : catalog_files(dir_)) {
        CatalogCheck c;
        c.id = fs::path(path).filename().string();
        try {
            auto e = load_catalog_entry(path, kind);
            if (e.code) {
                c.size = static_cast<long long>(e.code->size());
                c.detail = "size " + std::to_string(c.size) + " type " + e.code->type().str();
            } else if (e.prestructure) {
                c.size = static_cast<long long>(e.prestructure->pre.blocks.size());
                c.detail = std::to_string(c.size) + " fixed blocks on type " + GddType::of(e.prestructure->groups).str();
            } else if (e.design) {
                c.size = static_cast<long long>(e.design->blocks.size());
                c.detail = std::to_string(c.size) + " blocks on type " + e.design->type().str();
            } else {
                c.size = static_cast<long long>(e.generators.size());
                c.detail = std::to_string(c.size) + " generators";
            }
            c.ok = true;
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = ex.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t seed_design_library(const std::string& path) {
    const auto& cat = Catalog::shipped();
    std::size_t count = 0;
    fs::create_directories(path);
    for (const auto& e : cat.entries()) {
        if (e.kind != CatalogKind::Design) continue;
        auto target = (fs::path(path) / e.id).string();
        if (fs::exists(target) && read_text_file(target) == e.text) {
            ++count;
            continue;
        }
        write_text_file_atomic(target, e.text);
        load_design_file(target);  // re-verify what landed on disk
        ++count;
    }
    return count;
}

}  // namespace ccc
