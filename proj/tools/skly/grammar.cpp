// SPDX-License-Identifier: Apache-2.0
#include "grammar.hpp"

#include <cctype>

#include "util.hpp"

namespace skly::tool {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Splits on '+' that directly follows the closing parenthesis of an entry.
std::vector<std::pair<std::string, std::size_t>> split_entries(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = 0;
    bool after_paren = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ')') {
            after_paren = true;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) {
            if (c == '+' && after_paren) {
                out.emplace_back(text.substr(start, i - start), start);
                start = i + 1;
            }
            after_paren = false;
        }
    }
    out.emplace_back(text.substr(start), start);
    return out;
}

struct Entry {
    CurvePoint point;
    std::vector<int> numbers;
};

Entry parse_entry(const std::string& raw, std::size_t offset, PointBook& book) {
    std::size_t open = raw.find('(');
    if (open == std::string::npos)
        throw ParseError("expected '(' in entry at position " + std::to_string(offset), offset, trim(raw));
    std::size_t colon = raw.rfind(':', open);
    if (colon == std::string::npos)
        throw ParseError("expected ':' before '(' at position " + std::to_string(offset + open),
                         offset + open, trim(raw.substr(0, open)));
    std::size_t close = raw.find(')', open);
    if (close == std::string::npos)
        throw ParseError("unterminated '(' at position " + std::to_string(offset + open),
                         offset + open, raw.substr(open));
    std::string tail = trim(raw.substr(close + 1));
    if (!tail.empty())
        throw ParseError("unexpected trailing text at position " + std::to_string(offset + close + 1),
                         offset + close + 1, tail);

    Entry e;
    e.point = book.resolve(trim(raw.substr(0, colon)), offset);
    std::string inner = raw.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        std::size_t comma = inner.find(',', pos);
        std::string tok = trim(inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos));
        if (tok.empty()) {
            if (comma == std::string::npos && e.numbers.empty()) break; // "()" empty partition
            throw ParseError("empty part at position " + std::to_string(offset + open + 1 + pos),
                             offset + open + 1 + pos, ",");
        }
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            e.numbers.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("malformed integer part at position " +
                                 std::to_string(offset + open + 1 + pos),
                             offset + open + 1 + pos, tok);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return e;
}

} // namespace

CurvePoint PointBook::resolve(const std::string& token, std::size_t pos) {
    if (token.empty())
        throw ParseError("empty point token at position " + std::to_string(pos), pos, token);
    if (is_identifier(token)) {
        for (const auto& [name, pt] : bindings_)
            if (name == token) return pt;
        // deterministic generic coordinate, clear of the 2-torsion points
        SplitMix mix(fnv1a(token));
        double u = 0.07 + 0.36 * mix.uniform();
        double v = 0.07 + 0.36 * mix.uniform();
        CurvePoint pt(u * curve_->omega1() + v * curve_->omega2(), curve_);
        bindings_.emplace_back(token, pt);
        return pt;
    }
    try {
        CurvePoint pt(parse_complex(token), curve_);
        return pt;
    } catch (const ParseError& e) {
        throw ParseError("point token is neither a label nor a complex literal at position " +
                             std::to_string(pos),
                         pos, token);
    }
}

std::string PointBook::name(const CurvePoint& p) const {
    for (const auto& [label, pt] : bindings_)
        if (pt.equals(p)) return label;
    return format_complex(p.z());
}

TorsionType parse_torsion(const std::string& text, PointBook& book) {
    std::vector<std::pair<CurvePoint, Partition>> support;
    std::string t = trim(text);
    if (t.empty() || t == "0") return TorsionType{};
    for (const auto& [entry, offset] : split_entries(text)) {
        Entry e = parse_entry(entry, offset, book);
        for (int v : e.numbers)
            if (v <= 0)
                throw ParseError("partition parts must be positive (position " +
                                     std::to_string(offset) + ")",
                                 offset, std::to_string(v));
        support.emplace_back(e.point, Partition(e.numbers));
    }
    return TorsionType(std::move(support));
}

Divisor parse_divisor(const std::string& text, PointBook& book) {
    std::vector<std::pair<CurvePoint, int>> entries;
    for (const auto& [entry, offset] : split_entries(text)) {
        Entry e = parse_entry(entry, offset, book);
        if (e.numbers.size() != 1)
            throw ParseError("divisor entry needs a single multiplicity (position " +
                                 std::to_string(offset) + ")",
                             offset, entry);
        entries.emplace_back(e.point, e.numbers[0]);
    }
    return Divisor(std::move(entries));
}

std::string format_torsion(const TorsionType& t, const PointBook& book) {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [p, lam] : t.support()) {
        if (!out.empty()) out += "+";
        out += book.name(p) + ":" + lam.to_string();
    }
    return out;
}

} // namespace skly::tool
