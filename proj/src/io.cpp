#include "ccc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ccc {

ParseError::ParseError(int line_no, const std::string& what)
    : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

struct Line {
    int no;
    std::vector<std::string> tok;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

// comments are collected separately; blank lines are skipped
std::vector<Line> lex(const std::string& text, std::vector<std::string>& comments) {
    std::vector<Line> out;
    std::istringstream is(text);
    int no = 0;
    for (std::string s; std::getline(is, s);) {
        ++no;
        if (!s.empty() && s.back() == '\r') s.pop_back();
        if (s.rfind("#", 0) == 0) {
            comments.push_back(s.size() > 1 && s[1] == ' ' ? s.substr(2) : s.substr(1));
            continue;
        }
        auto tok = split_ws(s);
        if (!tok.empty()) out.push_back({no, std::move(tok)});
    }
    return out;
}

int to_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError(line, "not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(line, "not an integer: '" + s + "'");
    }
}

std::vector<int> ints(const Line& l, std::size_t from) {
    std::vector<int> v;
    for (std::size_t i = from; i < l.tok.size(); ++i) v.push_back(to_int(l.tok[i], l.no));
    return v;
}

void emit_comments(std::ostream& os, const std::vector<std::string>& comments) {
    for (const auto& c : comments) os << "# " << c << "\n";
}

void emit_ints(std::ostream& os, const std::string& head, const std::vector<int>& v) {
    os << head;
    for (int x : v) os << ' ' << x;
    os << "\n";
}

// header "MAGIC 1 q n d w.." shared by codes and bases
struct CodeHeader {
    int q, n, d;
    Composition comp;
};

CodeHeader parse_code_header(const std::vector<Line>& lines, const std::string& magic) {
    if (lines.empty() || lines[0].tok[0] != magic) throw ParseError(lines.empty() ? 1 : lines[0].no, "expected " + magic + " header");
    const auto& h = lines[0];
    if (h.tok.size() < 6) throw ParseError(h.no, "header needs version, q, n, d and a composition");
    if (h.tok[1] != "1") throw ParseError(h.no, "unsupported version " + h.tok[1]);
    auto v = ints(h, 2);
    CodeHeader ch{v[0], v[1], v[2], Composition(std::vector<int>(v.begin() + 3, v.end()))};
    if (ch.comp.q() != ch.q) throw ParseError(h.no, "composition has " + std::to_string(ch.comp.weights.size()) + " parts but q = " + std::to_string(ch.q));
    if (ch.n < 0 || ch.d < 0) throw ParseError(h.no, "negative length or distance");
    return ch;
}

std::string code_header(const std::string& magic, int q, int n, int d, const Composition& comp) {
    std::ostringstream os;
    os << magic << " 1 " << q << ' ' << n << ' ' << d;
    for (int w : comp.weights) os << ' ' << w;
    os << "\n";
    return os.str();
}

bool all_singletons(const GroupPartition& p) {
    return std::all_of(p.groups.begin(), p.groups.end(), [](const auto& g) { return g.size() == 1; }) &&
           static_cast<int>(p.groups.size()) == p.n;
}

std::vector<std::vector<int>> canonical_groups(const GroupPartition& p) {
    auto gs = p.groups;
    for (auto& g : gs) std::sort(g.begin(), g.end());
    std::sort(gs.begin(), gs.end());
    return gs;
}

}  // namespace

std::string emit_code(const GroupDivisibleCode& g, const std::vector<std::string>& comments) {
    std::ostringstream os;
    const auto& c = g.code;
    os << code_header("CCC", c.q(), c.n, c.d, c.comp);
    emit_comments(os, comments);
    if (!all_singletons(g.partition))
        for (const auto& grp : canonical_groups(g.partition)) emit_ints(os, "group", grp);
    auto words = c.words;
    std::sort(words.begin(), words.end());
    for (const auto& w : words) os << w.str() << "\n";
    return os.str();
}

std::string emit_code(const ConstantCompositionCode& c, const std::vector<std::string>& comments) {
    return emit_code(as_gdc(c), comments);
}

CodeFile parse_code(const std::string& text) {
    CodeFile f;
    auto lines = lex(text, f.comments);
    auto h = parse_code_header(lines, "CCC");
    auto& c = f.gdc.code;
    c.n = h.n;
    c.d = h.d;
    c.comp = h.comp;
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tok[0] == "group") {
            groups.push_back(ints(l, 1));
            continue;
        }
        std::vector<Entry> sup;
        for (const auto& t : l.tok) {
            auto colon = t.find(':');
            if (colon == std::string::npos) throw ParseError(l.no, "expected pos:sym, got '" + t + "'");
            sup.push_back({to_int(t.substr(0, colon), l.no), to_int(t.substr(colon + 1), l.no)});
        }
        for (std::size_t k = 1; k < sup.size(); ++k)
            if (sup[k].pos <= sup[k - 1].pos) throw ParseError(l.no, "positions must be strictly ascending");
        for (const auto& e : sup) {
            if (e.pos < 0 || e.pos >= h.n) throw ParseError(l.no, "position " + std::to_string(e.pos) + " out of range");
            if (e.sym <= 0 || e.sym >= h.q) throw ParseError(l.no, "symbol " + std::to_string(e.sym) + " out of range");
        }
        try {
            c.words.emplace_back(h.n, std::move(sup));
        } catch (const Error& e) {
            throw ParseError(l.no, e.what());
        }
    }
    if (groups.empty()) {
        f.gdc.partition = GroupPartition::singletons(h.n);
    } else {
        f.gdc.partition.n = h.n;
        f.gdc.partition.groups = std::move(groups);
    }
    return f;
}

CodeFile read_code(const std::string& text) {
    auto f = parse_code(text);
    require(verify_gdc(f.gdc), "code file");
    return f;
}

std::string emit_bases(const BaseCodewordSet& b, const std::vector<std::string>& comments) {
    std::ostringstream os;
    os << code_header("BASES", b.comp.q(), b.n, b.d, b.comp);
    emit_comments(os, comments);
    if (b.development == BaseCodewordSet::Development::Cyclic)
        os << "develop cyclic shift " << b.shift << " orbit " << b.orbit << "\n";
    else
        os << "develop multiplicative alpha " << b.alpha << " step " << b.step << " count " << b.count << "\n";
    if (b.group_stride) os << "stride " << *b.group_stride << "\n";
    for (const auto& w : b.bases) emit_ints(os, "base", w.to_tuple(b.comp));
    return os.str();
}

BaseFile parse_bases(const std::string& text) {
    BaseFile f;
    auto lines = lex(text, f.comments);
    auto h = parse_code_header(lines, "BASES");
    auto& b = f.bases;
    b.n = h.n;
    b.d = h.d;
    b.comp = h.comp;
    bool developed = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& k = l.tok[0];
        if (k == "develop") {
            if (l.tok.size() < 2) throw ParseError(l.no, "develop needs a mode");
            developed = true;
            auto kv = [&](const std::string& key) {
                for (std::size_t j = 2; j + 1 < l.tok.size(); j += 2)
                    if (l.tok[j] == key) return to_int(l.tok[j + 1], l.no);
                throw ParseError(l.no, "develop line lacks '" + key + "'");
            };
            if (l.tok[1] == "cyclic") {
                b.development = BaseCodewordSet::Development::Cyclic;
                b.shift = kv("shift");
                b.orbit = kv("orbit");
            } else if (l.tok[1] == "multiplicative") {
                b.development = BaseCodewordSet::Development::Multiplicative;
                b.alpha = kv("alpha");
                b.step = kv("step");
                b.count = kv("count");
            } else {
                throw ParseError(l.no, "unknown development '" + l.tok[1] + "'");
            }
        } else if (k == "stride") {
            if (l.tok.size() != 2) throw ParseError(l.no, "stride takes one value");
            b.group_stride = to_int(l.tok[1], l.no);
        } else if (k == "base") {
            auto t = ints(l, 1);
            if (static_cast<int>(t.size()) != h.comp.w()) throw ParseError(l.no, "base has the wrong weight");
            for (int x : t)
                if (x < 0 || x >= h.n) throw ParseError(l.no, "base point " + std::to_string(x) + " out of range");
            try {
                b.bases.push_back(Codeword::from_tuple(h.n, h.comp, t));
            } catch (const Error& e) {
                throw ParseError(l.no, e.what());
            }
        } else {
            throw ParseError(l.no, "unexpected '" + k + "'");
        }
    }
    if (!developed) throw ParseError(lines[0].no, "missing develop line");
    return f;
}

BaseFile read_bases(const std::string& text) {
    auto f = parse_bases(text);
    develop(f.bases);  // verifies and throws on failure
    return f;
}

std::string emit_design(const BlockDesign& d, const std::vector<std::string>& comments) {
    std::ostringstream os;
    os << "GDD 1\n";
    emit_comments(os, comments);
    os << "points " << d.n() << "\n";
    emit_ints(os, "K", d.K);
    for (const auto& g : d.partition.groups) emit_ints(os, "group", g);
    for (const auto& b : d.blocks) emit_ints(os, "block", b);
    if (d.resolution)
        for (const auto& c : *d.resolution) emit_ints(os, "class", c);
    if (d.hole) emit_ints(os, "hole", *d.hole);
    return os.str();
}

DesignFile parse_design(const std::string& text) {
    DesignFile f;
    auto lines = lex(text, f.comments);
    if (lines.empty() || lines[0].tok.size() != 2 || lines[0].tok[0] != "GDD")
        throw ParseError(lines.empty() ? 1 : lines[0].no, "expected 'GDD 1' header");
    if (lines[0].tok[1] != "1") throw ParseError(lines[0].no, "unsupported version " + lines[0].tok[1]);
    auto& d = f.design;
    bool have_points = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& k = l.tok[0];
        if (k == "points") {
            if (l.tok.size() != 2) throw ParseError(l.no, "points takes one value");
            d.partition.n = to_int(l.tok[1], l.no);
            have_points = true;
        } else if (k == "K") {
            d.K = ints(l, 1);
        } else if (k == "group") {
            d.partition.groups.push_back(ints(l, 1));
        } else if (k == "block") {
            d.blocks.push_back(ints(l, 1));
        } else if (k == "class") {
            if (!d.resolution) d.resolution.emplace();
            d.resolution->push_back(ints(l, 1));
        } else if (k == "hole") {
            d.hole = ints(l, 1);
        } else {
            throw ParseError(l.no, "unexpected '" + k + "'");
        }
    }
    if (!have_points) throw ParseError(lines[0].no, "missing points line");
    return f;
}

DesignFile read_design(const std::string& text) {
    auto f = parse_design(text);
    require(verify_design(f.design), "design file");
    return f;
}

std::string emit_prestructure(const GroupPartition& g, const Prestructure& p, const std::vector<std::string>& comments) {
    std::ostringstream os;
    os << "PRE 1\n";
    emit_comments(os, comments);
    os << "points " << g.n << "\n";
    for (const auto& grp : g.groups) emit_ints(os, "group", grp);
    for (const auto& b : p.blocks) emit_ints(os, "block", b);
    return os.str();
}

PrestructureFile parse_prestructure(const std::string& text) {
    PrestructureFile f;
    auto lines = lex(text, f.comments);
    if (lines.empty() || lines[0].tok.size() != 2 || lines[0].tok[0] != "PRE")
        throw ParseError(lines.empty() ? 1 : lines[0].no, "expected 'PRE 1' header");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& k = l.tok[0];
        if (k == "points") f.groups.n = to_int(l.tok.at(1), l.no);
        else if (k == "group") f.groups.groups.push_back(ints(l, 1));
        else if (k == "block") f.pre.blocks.push_back(ints(l, 1));
        else throw ParseError(l.no, "unexpected '" + k + "'");
    }
    return f;
}

std::string file_magic(const std::string& text) {
    std::istringstream is(text);
    std::string t;
    is >> t;
    return t;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename onto " + path + ": " + ec.message());
    }
}

CodeFile load_code_file(const std::string& path) {
    try {
        return read_code(read_text_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

DesignFile load_design_file(const std::string& path) {
    try {
        return read_design(read_text_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string comment_value(const std::vector<std::string>& comments, const std::string& key) {
    for (const auto& c : comments)
        if (c.rfind(key + ":", 0) == 0) {
            auto v = c.substr(key.size() + 1);
            auto s = v.find_first_not_of(' ');
            return s == std::string::npos ? std::string() : v.substr(s);
        }
    return {};
}

}  // namespace ccc
