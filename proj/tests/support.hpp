#pragma once

#include <algorithm>

#include <doctest.h>

#include "ccc/catalog.hpp"

namespace testing {

inline const ccc::CatalogEntry& entry(const std::string& id) {
    const auto* e = ccc::Catalog::shipped().find(id);
    REQUIRE_MESSAGE(e != nullptr, "missing catalog entry " << id);
    return *e;
}

inline ccc::ConstantCompositionCode catalog_code(const std::string& id) { return ccc::as_code(*entry(id).code); }

// 210001 over Z_6
inline ccc::Codeword ternary_six() { return ccc::Codeword(6, {{0, 2}, {1, 1}, {5, 1}}); }

inline ccc::Codeword shift(const ccc::Codeword& u, int s) {
    std::vector<ccc::Entry> e;
    for (auto x : u.support) e.push_back({(x.pos + s) % u.n, x.sym});
    std::sort(e.begin(), e.end());
    return ccc::Codeword(u.n, e);
}

}  // namespace testing
