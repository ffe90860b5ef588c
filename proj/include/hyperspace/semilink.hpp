#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspace/assoc_array.hpp"

namespace hyperspace {

/// Counterexample for a failed identity: the operands and both evaluated
/// sides.
struct Witness {
    std::vector<AssocArray> operands;
    AssocArray lhs;
    AssocArray rhs;
};

/// Outcome of checking one semilink identity. `witness` is set iff the
/// identity failed. `cases` counts the sub-assertions actually evaluated.
struct SemilinkReport {
    std::string property;
    bool holds = true;
    std::optional<Witness> witness;
    std::size_t cases = 0;
};

/// C = A (+).(x) 1: each row reduced with (+) in ascending column order,
/// collapsed into the column `:all`.
inline AssocArray project_rows(const AssocArray& a) {
    const Semiring& s = a.semiring();
    std::vector<Triple> out;
    auto e = a.entries();
    std::size_t i = 0;
    while (i < e.size()) {
        Value acc = e[i].val;
        const Key& r = e[i].row;
        for (++i; i < e.size() && e[i].row == r; ++i) acc = s.add_unchecked(acc, e[i].val);
        if (!s.is_zero_unchecked(acc)) out.push_back({r, keys::all, std::move(acc)});
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// C = 1 (+).(x) A: each column reduced, collapsed into the row `:all`.
inline AssocArray project_cols(const AssocArray& a) {
    const Semiring& s = a.semiring();
    std::map<Key, Value> acc;
    // Entries are sorted by row, so each column folds in ascending row order.
    for (const auto& t : a.entries()) {
        auto [it, fresh] = acc.try_emplace(t.col, t.val);
        if (!fresh) it->second = s.add_unchecked(it->second, t.val);
    }
    std::vector<Triple> out;
    for (auto& [c, v] : acc) {
        if (!s.is_zero_unchecked(v)) out.push_back({keys::all, c, std::move(v)});
    }
    return AssocArray::from_canonical(s, std::move(out));
}

/// True iff every stored row key and column key occurs in exactly one entry.
inline bool is_permutation_pattern(const AssocArray& a) {
    return row_keys(a).size() == a.nnz() && col_keys(a).size() == a.nnz();
}

namespace detail {

inline void expect_equal(SemilinkReport& r, const AssocArray& lhs, const AssocArray& rhs,
                         std::vector<AssocArray> operands) {
    ++r.cases;
    if (r.holds && lhs != rhs) {
        r.holds = false;
        r.witness = Witness{std::move(operands), lhs, rhs};
    }
}

inline bool disjoint(const KeyVector& a, const KeyVector& b) { return key_intersection(a, b).empty(); }

}  // namespace detail

/// 1 (x) I = I (x) 1 = I and 1 (+).(x) I = I (+).(x) 1 = 1 over keys `k`.
inline SemilinkReport check_identity_interplay(const Semiring& s, const KeyVector& k) {
    SemilinkReport r;
    r.property = "identity_interplay";
    const AssocArray one = ones(k, k, s);
    const AssocArray eye = identity(k, s);
    detail::expect_equal(r, ewise_mult(one, eye), eye, {one, eye});
    detail::expect_equal(r, ewise_mult(eye, one), eye, {one, eye});
    detail::expect_equal(r, array_mult(one, eye), one, {one, eye});
    detail::expect_equal(r, array_mult(eye, one), one, {one, eye});
    return r;
}

/// A (x) P = P (x) A = A where P = |A|0. Meaningful when A has a
/// permutation pattern; evaluated regardless.
inline SemilinkReport check_permutation_identity(const AssocArray& a) {
    SemilinkReport r;
    r.property = "permutation_identity";
    const AssocArray p = zero_norm(a);
    detail::expect_equal(r, ewise_mult(a, p), a, {a, p});
    detail::expect_equal(r, ewise_mult(p, a), a, {a, p});
    return r;
}

/// (A1 (x) A2) (+).(x) (B (x) C) = (A1 (+).(x) B) (x) (A2 (+).(x) C).
/// Holds when A1 and A2 share one permutation pattern; evaluated regardless,
/// so a broken precondition surfaces as a witness.
inline SemilinkReport check_perm_distributivity(const AssocArray& a1, const AssocArray& a2,
                                                const AssocArray& b, const AssocArray& c) {
    SemilinkReport r;
    r.property = "perm_distributivity";
    const AssocArray lhs = array_mult(ewise_mult(a1, a2), ewise_mult(b, c));
    const AssocArray rhs = ewise_mult(array_mult(a1, b), array_mult(a2, c));
    detail::expect_equal(r, lhs, rhs, {a1, a2, b, c});
    return r;
}

/// A (x) (B (+).(x) C) = (A (x) B) (+).(x) C. Holds when A covers the needed
/// support with ones, or C is the identity over col(B).
inline SemilinkReport check_hybrid_associativity(const AssocArray& a, const AssocArray& b,
                                                 const AssocArray& c) {
    SemilinkReport r;
    r.property = "hybrid_associativity";
    const AssocArray lhs = ewise_mult(a, array_mult(b, c));
    const AssocArray rhs = array_mult(ewise_mult(a, b), c);
    detail::expect_equal(r, lhs, rhs, {a, b, c});
    return r;
}

/// Key-disjointness conditions that force a hybrid product to vanish.
///
/// `left` applies to A (x) (B (+).(x) C):
///   row(A)^row(B), col(A)^col(C), col(B)^row(C) empty.
/// `right` applies to (A (x) B) (+).(x) C:
///   row(A)^row(B), col(A)^col(B), col(A)^row(C), col(B)^row(C) empty.
struct AnnihilationConditions {
    std::array<bool, 3> left{};
    std::array<bool, 4> right{};
};

inline AnnihilationConditions annihilation_conditions(const AssocArray& a, const AssocArray& b,
                                                      const AssocArray& c) {
    const KeyVector ra = row_keys(a), ca = col_keys(a);
    const KeyVector rb = row_keys(b), cb = col_keys(b);
    const KeyVector rc = row_keys(c), cc = col_keys(c);
    AnnihilationConditions k;
    k.left = {detail::disjoint(ra, rb), detail::disjoint(ca, cc), detail::disjoint(cb, rc)};
    k.right = {detail::disjoint(ra, rb), detail::disjoint(ca, cb), detail::disjoint(ca, rc),
               detail::disjoint(cb, rc)};
    return k;
}

/// Asserts that each hybrid product vanishes whenever one of its
/// disjointness conditions holds. `cases` counts the triggered conditions;
/// with none triggered the report holds vacuously.
inline SemilinkReport check_annihilation(const AssocArray& a, const AssocArray& b,
                                         const AssocArray& c) {
    SemilinkReport r;
    r.property = "annihilation";
    const AnnihilationConditions k = annihilation_conditions(a, b, c);
    const AssocArray empty(a.semiring());
    std::optional<AssocArray> left_product, right_product;
    for (bool cond : k.left) {
        if (!cond) continue;
        if (!left_product) left_product = ewise_mult(a, array_mult(b, c));
        detail::expect_equal(r, *left_product, empty, {a, b, c});
    }
    for (bool cond : k.right) {
        if (!cond) continue;
        if (!right_product) right_product = array_mult(ewise_mult(a, b), c);
        detail::expect_equal(r, *right_product, empty, {a, b, c});
    }
    return r;
}

}  // namespace hyperspace
