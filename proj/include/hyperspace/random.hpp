#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "hyperspace/assoc_array.hpp"

namespace hyperspace {

/// Seeded source of small random semiring values, key sets and arrays.
///
/// Numbers are integer-valued so every semiring law holds bit-exactly.
/// Draws use plain modular reduction on mt19937_64, which is specified by
/// the standard, so a seed replays identically on every platform.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() noexcept { return engine_; }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// True with probability `p`.
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    /// Key `i` of the shared pool; every third key is text so mixed
    /// integer/text ordering is always exercised.
    static Key pool_key(std::size_t i) {
        if (i % 3 == 2) return Key("k" + std::to_string(i));
        return Key(static_cast<std::int64_t>(i));
    }

    /// A sorted random subset of the first `pool` keys, of size in [lo, hi].
    KeyVector key_subset(std::size_t pool, std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> idx(pool);
        for (std::size_t i = 0; i < pool; ++i) idx[i] = i;
        std::size_t n = lo + below(hi - lo + 1);
        if (n > pool) n = pool;
        for (std::size_t i = 0; i < n; ++i) std::swap(idx[i], idx[i + below(pool - i)]);
        KeyVector out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(pool_key(idx[i]));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// An integer-valued domain element; may be the zero or an infinity.
    Value scalar(const Semiring& s) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        const int n = between(-4, 4);
        switch (s.kind()) {
            case Semiring::Kind::plus_times: return Value(n);
            case Semiring::Kind::max_plus: return chance(0.1) ? Value(-inf) : Value(n);
            case Semiring::Kind::min_plus: return chance(0.1) ? Value(inf) : Value(n);
            case Semiring::Kind::max_times: return Value(between(0, 4));
            case Semiring::Kind::min_times: return chance(0.1) ? Value(inf) : Value(between(0, 4));
            case Semiring::Kind::max_min:
            case Semiring::Kind::min_max:
                if (chance(0.1)) return Value(inf);
                if (chance(0.1)) return Value(-inf);
                return Value(n);
            case Semiring::Kind::union_intersect: {
                if (chance(0.1)) return Value(StringSet::universe());
                static const char* letters[] = {"a", "b", "c", "d", "e"};
                std::vector<std::string> items;
                for (const char* l : letters) {
                    if (chance(0.4)) items.emplace_back(l);
                }
                return Value(StringSet(std::move(items)));
            }
        }
        return Value();
    }

    /// Like `scalar` but never the semiring zero.
    Value nonzero_scalar(const Semiring& s) {
        for (;;) {
            Value v = scalar(s);
            if (!s.is_zero(v)) return v;
        }
    }

    /// Each cell of rows x cols is filled with probability `density`.
    AssocArray array(const Semiring& s, const KeyVector& rows, const KeyVector& cols,
                     double density) {
        std::vector<Triple> t;
        for (const auto& r : rows) {
            for (const auto& c : cols) {
                if (chance(density)) t.push_back({r, c, scalar(s)});
            }
        }
        return build(std::move(t), s);
    }

    /// Random array over random subsets of a pool of `pool` keys.
    AssocArray array(const Semiring& s, std::size_t pool = 8, double density = 0.4) {
        const KeyVector rows = key_subset(pool, 0, pool);
        const KeyVector cols = key_subset(pool, 0, pool);
        return array(s, rows, cols, density);
    }

    /// Random nonzero values on a random permutation pattern of up to
    /// `max_entries` entries drawn from the pool.
    AssocArray permutation_array(const Semiring& s, std::size_t pool = 8,
                                 std::size_t max_entries = 8) {
        const std::size_t cap = std::min(pool, max_entries);
        const KeyVector rows = key_subset(pool, 0, cap);
        KeyVector cols = key_subset(pool, rows.size(), rows.size());
        for (std::size_t i = cols.size(); i > 1; --i) std::swap(cols[i - 1], cols[below(i)]);
        std::vector<Triple> t;
        for (std::size_t i = 0; i < rows.size(); ++i) t.push_back({rows[i], cols[i], nonzero_scalar(s)});
        return build(std::move(t), s);
    }

    /// Same coordinates as `pattern`, fresh nonzero values.
    AssocArray revalue(const AssocArray& pattern) {
        std::vector<Triple> t;
        for (const auto& e : pattern.entries()) {
            t.push_back({e.row, e.col, nonzero_scalar(pattern.semiring())});
        }
        return build(std::move(t), pattern.semiring());
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hyperspace
