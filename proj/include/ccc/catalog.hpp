#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccc/core.hpp"
#include "ccc/designs.hpp"
#include "ccc/gdcbuild.hpp"
#include "ccc/io.hpp"

namespace ccc {

enum class CatalogKind { Code, BaseCodewordSet, Prestructure, Design, Generators };

std::string kind_name(CatalogKind k);

struct CatalogEntry {
    std::string id;
    CatalogKind kind = CatalogKind::Code;
    std::string cite;
    std::string path;
    std::string text;  // file content as loaded
    std::optional<long long> expected_size;
    std::optional<GddType> expected_type;

    // Code entries and developed base sets
    std::optional<GroupDivisibleCode> code;
    std::optional<BaseCodewordSet> bases;
    std::optional<PrestructureFile> prestructure;
    std::optional<BlockDesign> design;
    std::map<int, int> generators;

    bool is_plain_code() const;  // type 1^n
};

struct CatalogCheck {
    std::string id;
    bool ok = false;
    std::string detail;  // size on success, witness on failure
    long long size = 0;
};

class Catalog {
public:
    // parses and verifies every file under dir/<kind>/; failing entries are withheld and listed in rejected()
    static Catalog load(const std::string& dir);
    // the catalog shipped with the repository (CCC_CATALOG_DIR overrides its location)
    static const Catalog& shipped();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const std::vector<CatalogCheck>& rejected() const { return rejected_; }
    const std::string& dir() const { return dir_; }

    const CatalogEntry* find(const std::string& id) const;
    // exact-parameter matches; nullptr when missing
    const CatalogEntry* lookup_code(int n, int d, const Composition& comp) const;
    const CatalogEntry* lookup_gdc(const GddType& type, int d, const Composition& comp) const;
    const CatalogEntry* lookup_prestructure(const GddType& type) const;
    const CatalogEntry* lookup_design(const GddType& type, const std::vector<int>& K, bool resolvable = false) const;
    std::optional<int> generator(int n) const;

    // reloads every file from disk and re-runs the verifiers, including on rejected entries
    std::vector<CatalogCheck> verify_all() const;

private:
    std::string dir_;
    std::vector<CatalogEntry> entries_;
    std::vector<CatalogCheck> rejected_;
};

std::string default_catalog_dir();

// parse + verify one catalog file; throws with a witness on failure
CatalogEntry load_catalog_entry(const std::string& path, CatalogKind kind);

// copies the shipped designs into path, each re-verified on read; returns the number of designs present
std::size_t seed_design_library(const std::string& path);

}  // namespace ccc
