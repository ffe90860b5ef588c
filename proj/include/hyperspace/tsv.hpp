#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspace/assoc_array.hpp"
#include "hyperspace/errors.hpp"

// Triple TSV: one entry per line, `row<TAB>col<TAB>value`, LF endings.
//
// Keys spelled as canonical decimal integers (optional '-', no leading
// zeros) read back as Integer keys; everything else is Text. Inside a field
// `\\`, `\t` and `\n` escape backslash, tab and newline. Set values are
// comma-separated elements with `\,` for a literal comma, `\e` for the empty
// string element, and `\U` alone for the universe.

namespace hyperspace {

struct TsvOptions {
    /// Split input lines on runs of spaces/tabs instead of single tabs.
    bool space_delimited = false;
};

namespace detail {

inline void escape_into(std::string& out, std::string_view s, bool in_set) {
    for (char ch : s) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case ',':
                if (in_set) out += "\\,";
                else out += ch;
                break;
            default: out += ch;
        }
    }
}

inline std::string unescape(std::string_view s, std::size_t line) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) throw FormatError("dangling escape", line);
        switch (s[i]) {
            case '\\': out += '\\'; break;
            case 't': out += '\t'; break;
            case 'n': out += '\n'; break;
            case ',': out += ','; break;
            default: throw FormatError(std::string("unknown escape \\") + s[i], line);
        }
    }
    return out;
}

inline bool is_canonical_integer(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 19) return false;
    for (char c : digits) {
        if (c < '0' || c > '9') return false;
    }
    if (digits.front() == '0') return s == "0";
    return true;
}

}  // namespace detail

/// Reads a key: canonical decimal integers that fit in 64 bits become
/// Integer keys, anything else Text.
inline Key parse_key(std::string_view s) {
    if (detail::is_canonical_integer(s)) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size()) return Key(v);
    }
    return Key(std::string(s));
}

inline std::string format_key(const Key& k) {
    if (k.is_integer()) return std::to_string(k.integer());
    std::string out;
    detail::escape_into(out, k.text(), false);
    return out;
}

inline std::string format_number(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

inline double parse_number(std::string_view s, std::size_t line = 0) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || std::isnan(v)) {
        throw FormatError("not a number: '" + std::string(s) + "'", line);
    }
    return v;
}

inline std::string format_value(const Value& v) {
    std::string out;
    switch (v.kind()) {
        case Value::Kind::number: return format_number(v.number());
        case Value::Kind::text: detail::escape_into(out, v.text(), false); return out;
        case Value::Kind::set: {
            const StringSet& s = v.set();
            if (s.is_universe()) return "\\U";
            bool first = true;
            for (const auto& item : s.items()) {
                if (!first) out += ',';
                first = false;
                if (item.empty()) out += "\\e";
                else detail::escape_into(out, item, true);
            }
            return out;
        }
    }
    return out;
}

/// Parses a value field for semiring `s`: a number for numeric semirings,
/// a comma-separated string set for union.intersect.
inline Value parse_value(std::string_view field, const Semiring& s, std::size_t line = 0) {
    if (s.is_numeric()) {
        Value v(parse_number(field, line));
        if (!s.contains(v)) {
            throw FormatError("value '" + std::string(field) + "' outside the domain of " +
                                  std::string(s.name()),
                              line);
        }
        return v;
    }
    if (field == "\\U") return Value(StringSet::universe());
    std::vector<std::string> items;
    if (field.empty()) return Value(StringSet{});
    std::size_t start = 0;
    for (std::size_t i = 0; i <= field.size(); ++i) {
        if (i < field.size() && field[i] == '\\') {
            ++i;
            continue;
        }
        if (i == field.size() || field[i] == ',') {
            std::string_view raw = field.substr(start, i - start);
            items.push_back(raw == "\\e" ? std::string() : detail::unescape(raw, line));
            start = i + 1;
        }
    }
    return Value(StringSet(std::move(items)));
}

inline std::string format_triple(const Triple& t) {
    return format_key(t.row) + '\t' + format_key(t.col) + '\t' + format_value(t.val);
}

inline void write_triples(std::ostream& out, const AssocArray& a) {
    for (const auto& t : a.entries()) out << format_triple(t) << '\n';
}

inline std::string export_tsv(const AssocArray& a) {
    std::ostringstream out;
    write_triples(out, a);
    return out.str();
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line, bool space_delimited) {
    std::vector<std::string_view> fields;
    if (!space_delimited) {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        return fields;
    }
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

}  // namespace detail

/// Parses triple lines without building; blank lines are skipped.
inline std::vector<Triple> read_triple_list(std::istream& in, const Semiring& s,
                                            TsvOptions opts = {}) {
    std::vector<Triple> triples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = detail::split_fields(line, opts.space_delimited);
        if (f.size() != 3) {
            throw FormatError("expected 3 fields, found " + std::to_string(f.size()), lineno);
        }
        triples.push_back({parse_key(detail::unescape(f[0], lineno)),
                           parse_key(detail::unescape(f[1], lineno)), parse_value(f[2], s, lineno)});
    }
    return triples;
}

inline AssocArray read_triples(std::istream& in, const Semiring& s, TsvOptions opts = {}) {
    return build(read_triple_list(in, s, opts), s);
}

inline AssocArray import_tsv(std::string_view text, const Semiring& s, TsvOptions opts = {}) {
    std::istringstream in{std::string(text)};
    return read_triples(in, s, opts);
}

}  // namespace hyperspace
