#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperspace/errors.hpp"
#include "hyperspace/key.hpp"
#include "hyperspace/semiring.hpp"
#include "hyperspace/value.hpp"

namespace hyperspace {

struct Triple {
    Key row;
    Key col;
    Value val;

    friend bool operator==(const Triple&, const Triple&) = default;
};

namespace detail {

inline bool coord_less(const Triple& a, const Triple& b) {
    if (auto c = a.row <=> b.row; c != 0) return c < 0;
    return a.col < b.col;
}

inline bool same_coord(const Triple& a, const Triple& b) { return a.row == b.row && a.col == b.col; }

inline std::strong_ordering coord_cmp(const Triple& a, const Triple& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
}

inline void require_unique(const KeyVector& k, const char* what) {
    KeyVector sorted = k;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ShapeError(std::string(what) + ": keys must be unique");
    }
}

}  // namespace detail

/// Hypersparse associative array A: K1 x K2 -> V over one semiring.
///
/// Entries are kept as coordinate triples sorted by (row, col) with unique
/// coordinates, and no stored value is ever the semiring zero. Storage is
/// proportional to nnz regardless of how far apart the keys lie. Arrays are
/// immutable once built; every operation returns a new array.
class AssocArray {
public:
    AssocArray() = default;
    explicit AssocArray(Semiring s) : semiring_(s) {}

    /// Wraps triples that are already sorted, unique, admitted and zero-free.
    static AssocArray from_canonical(Semiring s, std::vector<Triple> entries) {
        AssocArray a(s);
        a.entries_ = std::move(entries);
        return a;
    }

    const Semiring& semiring() const noexcept { return semiring_; }
    /// Views into the array; unavailable on temporaries, which would dangle.
    std::span<const Triple> entries() const& noexcept { return entries_; }
    std::span<const Triple> entries() const&& = delete;
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Entry count the container has room for; bounded by a small multiple
    /// of nnz, never by key range.
    std::size_t storage_slots() const noexcept { return entries_.capacity(); }

    /// Stored value at (row, col), or the semiring zero when absent.
    Value at(const Key& row, const Key& col) const {
        Triple probe{row, col, Value()};
        auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, detail::coord_less);
        if (it != entries_.end() && detail::same_coord(*it, probe)) return it->val;
        return semiring_.zero();
    }

    /// Contiguous range of entries in row `row`.
    std::span<const Triple> row(const Key& r) const&& = delete;
    std::span<const Triple> row(const Key& r) const& {
        auto lo = std::lower_bound(entries_.begin(), entries_.end(), r,
                                   [](const Triple& t, const Key& k) { return t.row < k; });
        auto hi = std::upper_bound(lo, entries_.end(), r,
                                   [](const Key& k, const Triple& t) { return k < t.row; });
        return {lo, hi};
    }

    friend bool operator==(const AssocArray&, const AssocArray&) = default;

private:
    Semiring semiring_;
    std::vector<Triple> entries_;
};

/// Builds an array from triples. Duplicate coordinates are combined with the
/// semiring's add in input order; zero results are dropped.
inline AssocArray build(std::vector<Triple> triples, Semiring s) {
    for (auto& t : triples) t.val = s.admit(t.val);
    std::stable_sort(triples.begin(), triples.end(), detail::coord_less);
    std::vector<Triple> out;
    out.reserve(triples.size());
    for (auto& t : triples) {
        if (!out.empty() && detail::same_coord(out.back(), t)) {
            out.back().val = s.add_unchecked(out.back().val, t.val);
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [&](const Triple& t) { return s.is_zero_unchecked(t.val); });
    out.shrink_to_fit();
    return AssocArray::from_canonical(s, std::move(out));
}

inline std::vector<Triple> extract(const AssocArray& a) {
    return {a.entries().begin(), a.entries().end()};
}

inline std::size_t nnz(const AssocArray& a) { return a.nnz(); }

inline AssocArray transpose(const AssocArray& a) {
    std::vector<Triple> out;
    out.reserve(a.nnz());
    for (const auto& t : a.entries()) out.push_back({t.col, t.row, t.val});
    std::sort(out.begin(), out.end(), detail::coord_less);
    return AssocArray::from_canonical(a.semiring(), std::move(out));
}

inline KeyVector row_keys(const AssocArray& a) {
    KeyVector k;
    for (const auto& t : a.entries()) {
        if (k.empty() || k.back() != t.row) k.push_back(t.row);
    }
    return k;
}

inline KeyVector col_keys(const AssocArray& a) {
    KeyVector k;
    k.reserve(a.nnz());
    for (const auto& t : a.entries()) k.push_back(t.col);
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
}

/// Wildcard for `index`, the ":" of A(:, k).
struct AllKeys {
    friend bool operator==(AllKeys, AllKeys) = default;
};
inline constexpr AllKeys all_keys{};

using KeySelection = std::variant<AllKeys, KeyVector>;

/// Sub-array of the stored entries whose row is in `rows` and column is in
/// `cols`. Keys absent from `a` are allowed and simply match nothing.
inline AssocArray index(const AssocArray& a, const KeySelection& rows, const KeySelection& cols) {
    auto sorted = [](const KeySelection& sel) {
        KeyVector k;
        if (auto* v = std::get_if<KeyVector>(&sel)) {
            k = *v;
            std::sort(k.begin(), k.end());
        }
        return k;
    };
    const bool all_rows = std::holds_alternative<AllKeys>(rows);
    const bool all_cols = std::holds_alternative<AllKeys>(cols);
    const KeyVector r = sorted(rows);
    const KeyVector c = sorted(cols);
    std::vector<Triple> out;
    for (const auto& t : a.entries()) {
        if (!all_rows && !std::binary_search(r.begin(), r.end(), t.row)) continue;
        if (!all_cols && !std::binary_search(c.begin(), c.end(), t.col)) continue;
        out.push_back(t);
    }
    return AssocArray::from_canonical(a.semiring(), std::move(out));
}

namespace detail {

inline void require_same_semiring(const AssocArray& a, const AssocArray& b, const char* op) {
    if (a.semiring() != b.semiring()) {
        throw SemiringMismatch(std::string(op) + ": " + std::string(a.semiring().name()) + " vs " +
                               std::string(b.semiring().name()));
    }
}

}  // namespace detail

/// C(k1,k2) = A(k1,k2) (+) B(k1,k2) over the union of supports.
inline AssocArray ewise_add(const AssocArray& a, const AssocArray& b) {
    detail::require_same_semiring(a, b, "ewise_add");
    const Semiring& s = a.semiring();
    auto ea = a.entries();
    auto eb = b.entries();
    std::vector<Triple> out;
    out.reserve(ea.size() + eb.size());
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && detail::coord_less(ea[i], eb[j]))) {
            out.push_back(ea[i++]);
        } else if (i == ea.size() || detail::coord_less(eb[j], ea[i])) {
            out.push_back(eb[j++]);
        } else {
            Value v = s.add_unchecked(ea[i].val, eb[j].val);
            if (!s.is_zero_unchecked(v)) out.push_back({ea[i].row, ea[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// C(k1,k2) = A(k1,k2) (x) B(k1,k2); absent entries annihilate, so only the
/// intersection of supports is visited.
inline AssocArray ewise_mult(const AssocArray& a, const AssocArray& b) {
    detail::require_same_semiring(a, b, "ewise_mult");
    const Semiring& s = a.semiring();
    auto ea = a.entries();
    auto eb = b.entries();
    std::vector<Triple> out;
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        auto c = detail::coord_cmp(ea[i], eb[j]);
        if (c < 0) {
            ++i;
        } else if (c > 0) {
            ++j;
        } else {
            Value v = s.mult_unchecked(ea[i].val, eb[j].val);
            if (!s.is_zero_unchecked(v)) out.push_back({ea[i].row, ea[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// Each stored x becomes x (x) v.
inline AssocArray scalar_mult(const AssocArray& a, const Value& v) {
    const Semiring& s = a.semiring();
    const Value w = s.admit(v);
    std::vector<Triple> out;
    for (const auto& t : a.entries()) {
        Value x = s.mult_unchecked(t.val, w);
        if (!s.is_zero_unchecked(x)) out.push_back({t.row, t.col, std::move(x)});
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// Each stored x becomes x (+) v. Absent entries stay absent.
inline AssocArray scalar_add(const AssocArray& a, const Value& v) {
    const Semiring& s = a.semiring();
    const Value w = s.admit(v);
    std::vector<Triple> out;
    for (const auto& t : a.entries()) {
        Value x = s.add_unchecked(t.val, w);
        if (!s.is_zero_unchecked(x)) out.push_back({t.row, t.col, std::move(x)});
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// C(k1,k2) = (+)_k A(k1,k) (x) B(k,k2), joined over col(A) and row(B).
///
/// No dimensional conformance is required. The reduction over the join key
/// runs in ascending key order, so results are deterministic.
inline AssocArray array_mult(const AssocArray& a, const AssocArray& b) {
    detail::require_same_semiring(a, b, "array_mult");
    const Semiring& s = a.semiring();
    auto ea = a.entries();
    std::vector<Triple> out;
    std::map<Key, Value> acc;
    std::size_t i = 0;
    while (i < ea.size()) {
        const Key& r = ea[i].row;
        acc.clear();
        // Row entries of A are sorted by column, i.e. by join key.
        for (; i < ea.size() && ea[i].row == r; ++i) {
            for (const auto& tb : b.row(ea[i].col)) {
                Value p = s.mult_unchecked(ea[i].val, tb.val);
                auto [it, fresh] = acc.try_emplace(tb.col, p);
                if (!fresh) it->second = s.add_unchecked(it->second, p);
            }
        }
        for (auto& [c, v] : acc) {
            if (!s.is_zero_unchecked(v)) out.push_back({r, c, std::move(v)});
        }
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// Maps every stored value to `one`, keeping the semiring of `a`.
inline AssocArray zero_norm(const AssocArray& a, const Value& one) {
    const Semiring& s = a.semiring();
    const Value w = s.admit(one);
    if (s.is_zero_unchecked(w)) return AssocArray(s);
    std::vector<Triple> out;
    out.reserve(a.nnz());
    for (const auto& t : a.entries()) out.push_back({t.row, t.col, w});
    return AssocArray::from_canonical(s, std::move(out));
}

/// Zero norm into another semiring: every stored value becomes `target.one()`.
inline AssocArray zero_norm(const AssocArray& a, Semiring target) {
    std::vector<Triple> out;
    out.reserve(a.nnz());
    const Value one = target.one();
    for (const auto& t : a.entries()) out.push_back({t.row, t.col, one});
    return AssocArray::from_canonical(target, std::move(out));
}

inline AssocArray zero_norm(const AssocArray& a) { return zero_norm(a, a.semiring()); }

/// Reinterprets the stored values in another semiring. Values must lie in
/// the target domain; those equal to the target zero are dropped.
inline AssocArray retag(const AssocArray& a, Semiring target) {
    std::vector<Triple> out;
    out.reserve(a.nnz());
    for (const auto& t : a.entries()) {
        Value v = target.admit(t.val);
        if (!target.is_zero_unchecked(v)) out.push_back({t.row, t.col, std::move(v)});
    }
    return AssocArray::from_canonical(target, std::move(out));
}

/// Entries of `a` at coordinates stored in `pattern`; values of `pattern`
/// are ignored.
inline AssocArray apply_mask(const AssocArray& a, const AssocArray& pattern) {
    auto ea = a.entries();
    auto ep = pattern.entries();
    std::vector<Triple> out;
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < ep.size()) {
        auto c = detail::coord_cmp(ea[i], ep[j]);
        if (c < 0) {
            ++i;
        } else if (c > 0) {
            ++j;
        } else {
            out.push_back(ea[i]);
            ++i;
            ++j;
        }
    }
    return AssocArray::from_canonical(a.semiring(), std::move(out));
}

/// P(k1[i], k2[i]) = 1.
inline AssocArray permutation(const KeyVector& k1, const KeyVector& k2, Semiring s) {
    if (k1.size() != k2.size()) throw ShapeError("permutation: key vectors differ in length");
    detail::require_unique(k1, "permutation");
    detail::require_unique(k2, "permutation");
    std::vector<Triple> out;
    out.reserve(k1.size());
    for (std::size_t i = 0; i < k1.size(); ++i) out.push_back({k1[i], k2[i], s.one()});
    std::sort(out.begin(), out.end(), detail::coord_less);
    return AssocArray::from_canonical(s, std::move(out));
}

inline AssocArray identity(const KeyVector& k, Semiring s) { return permutation(k, k, s); }

/// The all-one array over the explicit grid k1 x k2.
inline AssocArray ones(const KeyVector& k1, const KeyVector& k2, Semiring s) {
    detail::require_unique(k1, "ones");
    detail::require_unique(k2, "ones");
    KeyVector r = k1, c = k2;
    std::sort(r.begin(), r.end());
    std::sort(c.begin(), c.end());
    std::vector<Triple> out;
    out.reserve(r.size() * c.size());
    for (const auto& kr : r) {
        for (const auto& kc : c) out.push_back({kr, kc, s.one()});
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// |A|0 == |B|0: the supports coincide.
inline bool same_pattern(const AssocArray& a, const AssocArray& b) {
    return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
                      detail::same_coord);
}

/// Sorted union of two sorted unique key vectors.
inline KeyVector key_union(const KeyVector& a, const KeyVector& b) {
    KeyVector out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Sorted intersection of two sorted unique key vectors.
inline KeyVector key_intersection(const KeyVector& a, const KeyVector& b) {
    KeyVector out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace hyperspace
