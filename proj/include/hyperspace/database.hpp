#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspace/assoc_array.hpp"
#include "hyperspace/tsv.hpp"

namespace hyperspace {

/// A relational table held as a union.intersect array: row keys are
/// sequence IDs, column keys are field names, and each cell is a set.
struct TableArray {
    AssocArray array{union_intersect};
};

/// Reads a header line of field names followed by rows of the same arity.
///
/// A leading `id` field supplies the row keys; otherwise rows are numbered
/// from 1. A cell with text t becomes the singleton {t}; empty cells are not
/// stored.
inline TableArray ingest_tsv(std::istream& in) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line)) return {};
    const auto header_views = detail::split_fields(line, false);
    std::vector<Key> fields;
    for (auto f : header_views) fields.push_back(parse_key(detail::unescape(f, lineno)));
    const bool has_id = !fields.empty() && fields.front() == Key("id");

    std::vector<Triple> cells;
    std::int64_t seq = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto row = detail::split_fields(line, false);
        if (row.size() != fields.size()) {
            throw FormatError("row has " + std::to_string(row.size()) + " fields, header has " +
                                  std::to_string(fields.size()),
                              lineno);
        }
        ++seq;
        const Key key = has_id ? parse_key(detail::unescape(row[0], lineno)) : Key(seq);
        for (std::size_t i = has_id ? 1 : 0; i < row.size(); ++i) {
            if (row[i].empty()) continue;
            cells.push_back({key, fields[i], Value(StringSet{detail::unescape(row[i], lineno)})});
        }
    }
    return {build(std::move(cells), union_intersect)};
}

inline TableArray ingest_tsv_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return ingest_tsv(in);
}

namespace detail {

inline StringSet condition_set(const Value& v) {
    const Value w = union_intersect.admit(v);
    return w.set();
}

}  // namespace detail

/// select cols from T where cond_col = v, by direct indexing:
/// T(rows where T(r, cond_col) meets v, cols). A cell matches when its set
/// intersects v; absent cells never match.
inline AssocArray select_direct(const TableArray& t, const KeyVector& cols, const Key& cond_col,
                                const Value& v) {
    const StringSet want = detail::condition_set(v);
    KeyVector rows;
    for (const auto& e : t.array.entries()) {
        if (e.col == cond_col && !set_intersection(e.val.set(), want).empty()) rows.push_back(e.row);
    }
    return index(t.array, rows, cols);
}

/// The same select through semilink algebra:
///   mask = |((T (+).(x) I(cond_col)) (x) v) (+).(x) 1|0, result = mask (x) T,
/// then restricted to `cols`.
inline AssocArray select_semilink(const TableArray& t, const KeyVector& cols, const Key& cond_col,
                                  const Value& v) {
    const Semiring& s = union_intersect;
    const AssocArray& a = t.array;
    const AssocArray column = array_mult(a, identity({cond_col}, s));
    const AssocArray matches = scalar_mult(column, v);
    const AssocArray spread = array_mult(matches, ones({cond_col}, col_keys(a), s));
    const AssocArray mask = zero_norm(spread, Value(StringSet::universe()));
    return index(ewise_mult(mask, a), all_keys, cols);
}

}  // namespace hyperspace
