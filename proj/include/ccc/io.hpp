#pragma once

#include <string>
#include <vector>

#include "ccc/core.hpp"
#include "ccc/designs.hpp"
#include "ccc/gdcbuild.hpp"

namespace ccc {

struct ParseError : Error {
    int line = 0;
    ParseError(int line_no, const std::string& what);
};

// "CCC 1 q n d w1 .. wk", then "# " comments, "group" lines (omitted for type 1^n), one codeword per line
struct CodeFile {
    GroupDivisibleCode gdc;
    std::vector<std::string> comments;
};

// "BASES 1 q n d w1 .. wk", comments, a develop line, optional "stride t", one "base a1 .. aw" tuple per line
struct BaseFile {
    BaseCodewordSet bases;
    std::vector<std::string> comments;
};

// "GDD 1", comments, "points N", "K ..", group, block, class and hole lines
struct DesignFile {
    BlockDesign design;
    std::vector<std::string> comments;
};

// "PRE 1", comments, "points N", group lines, block lines (the fixed blocks only)
struct PrestructureFile {
    GroupPartition groups;
    Prestructure pre;
    std::vector<std::string> comments;
};

std::string emit_code(const GroupDivisibleCode& g, const std::vector<std::string>& comments = {});
std::string emit_code(const ConstantCompositionCode& c, const std::vector<std::string>& comments = {});
std::string emit_bases(const BaseCodewordSet& b, const std::vector<std::string>& comments = {});
std::string emit_design(const BlockDesign& d, const std::vector<std::string>& comments = {});
std::string emit_prestructure(const GroupPartition& g, const Prestructure& p,
                              const std::vector<std::string>& comments = {});

// parse only; the read_* variants also verify and throw on failure
CodeFile parse_code(const std::string& text);
BaseFile parse_bases(const std::string& text);
DesignFile parse_design(const std::string& text);
PrestructureFile parse_prestructure(const std::string& text);

CodeFile read_code(const std::string& text);
BaseFile read_bases(const std::string& text);
DesignFile read_design(const std::string& text);

// first token of the first line: "CCC", "BASES", "GDD" or "PRE"
std::string file_magic(const std::string& text);

std::string read_text_file(const std::string& path);
// write to a temporary sibling, then rename
void write_text_file_atomic(const std::string& path, const std::string& content);

CodeFile load_code_file(const std::string& path);
DesignFile load_design_file(const std::string& path);

// comment lines of the form "# key: value"
std::string comment_value(const std::vector<std::string>& comments, const std::string& key);

}  // namespace ccc
