#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "hyperspace/errors.hpp"
#include "hyperspace/value.hpp"

namespace hyperspace {

/// One of the built-in semirings (V, add, mult, zero, one).
///
/// Semirings are small immutable values, equal iff they name the
/// same semiring. Scalar operations validate their operands against the
/// domain and throw DomainError otherwise. The `*_unchecked` forms skip the
/// validation and are meant for values already admitted into an array.
class Semiring {
public:
    enum class Kind {
        plus_times,
        max_plus,
        min_plus,
        max_times,
        min_times,
        union_intersect,
        max_min,
        min_max,
    };

    static constexpr std::array<Kind, 8> all_kinds{
        Kind::plus_times, Kind::max_plus,        Kind::min_plus, Kind::max_times,
        Kind::min_times,  Kind::union_intersect, Kind::max_min,  Kind::min_max,
    };

    constexpr Semiring() = default;
    constexpr explicit Semiring(Kind kind) : kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

    std::string_view name() const noexcept {
        switch (kind_) {
            case Kind::plus_times: return "plus.times";
            case Kind::max_plus: return "max.plus";
            case Kind::min_plus: return "min.plus";
            case Kind::max_times: return "max.times";
            case Kind::min_times: return "min.times";
            case Kind::union_intersect: return "union.intersect";
            case Kind::max_min: return "max.min";
            case Kind::min_max: return "min.max";
        }
        return "?";
    }

    bool is_numeric() const noexcept { return kind_ != Kind::union_intersect; }

    Value zero() const {
        switch (kind_) {
            case Kind::plus_times:
            case Kind::max_times: return Value(0.0);
            case Kind::max_plus:
            case Kind::max_min: return Value::neg_infinity();
            case Kind::min_plus:
            case Kind::min_times:
            case Kind::min_max: return Value::infinity();
            case Kind::union_intersect: return Value(StringSet{});
        }
        return Value();
    }

    Value one() const {
        switch (kind_) {
            case Kind::plus_times:
            case Kind::max_times:
            case Kind::min_times: return Value(1.0);
            case Kind::max_plus:
            case Kind::min_plus: return Value(0.0);
            case Kind::max_min: return Value::infinity();
            case Kind::min_max: return Value::neg_infinity();
            case Kind::union_intersect: return Value(StringSet::universe());
        }
        return Value();
    }

    /// True iff `v` (after text-to-singleton promotion) lies in the domain.
    bool contains(const Value& v) const noexcept {
        if (kind_ == Kind::union_intersect) return v.is_set() || v.is_text();
        if (!v.is_number()) return false;
        const double x = v.number();
        switch (kind_) {
            case Kind::plus_times: return std::isfinite(x);
            case Kind::max_plus: return x != kInf;
            case Kind::min_plus: return x != -kInf;
            case Kind::max_times: return std::isfinite(x) && x >= 0.0;
            case Kind::min_times: return x >= 0.0;
            case Kind::max_min:
            case Kind::min_max: return true;
            case Kind::union_intersect: break;
        }
        return false;
    }

    /// Validates `v` and returns its canonical in-domain form. Text atoms
    /// become singleton sets under union.intersect.
    Value admit(const Value& v) const {
        if (!contains(v)) {
            throw DomainError(std::string(kind_name(v.kind())) + " value outside the domain of " +
                              std::string(name()));
        }
        if (v.is_text()) return Value(StringSet{v.text()});
        return v;
    }

    Value add(const Value& a, const Value& b) const { return add_unchecked(admit(a), admit(b)); }
    Value mult(const Value& a, const Value& b) const { return mult_unchecked(admit(a), admit(b)); }
    bool is_zero(const Value& v) const { return is_zero_unchecked(admit(v)); }

    Value add_unchecked(const Value& a, const Value& b) const {
        switch (kind_) {
            case Kind::plus_times: return Value(a.number() + b.number());
            case Kind::max_plus:
            case Kind::max_times:
            case Kind::max_min: return Value(std::max(a.number(), b.number()));
            case Kind::min_plus:
            case Kind::min_times:
            case Kind::min_max: return Value(std::min(a.number(), b.number()));
            case Kind::union_intersect: return Value(set_union(a.set(), b.set()));
        }
        return Value();
    }

    Value mult_unchecked(const Value& a, const Value& b) const {
        switch (kind_) {
            case Kind::plus_times:
            case Kind::max_times: return Value(a.number() * b.number());
            case Kind::max_plus:
            case Kind::min_plus: return Value(a.number() + b.number());
            case Kind::min_times: {
                // +inf is the zero here and must annihilate, including 0 * inf.
                const double x = a.number();
                const double y = b.number();
                if (x == kInf || y == kInf) return Value::infinity();
                return Value(x * y);
            }
            case Kind::max_min: return Value(std::min(a.number(), b.number()));
            case Kind::min_max: return Value(std::max(a.number(), b.number()));
            case Kind::union_intersect: return Value(set_intersection(a.set(), b.set()));
        }
        return Value();
    }

    bool is_zero_unchecked(const Value& v) const {
        switch (kind_) {
            case Kind::plus_times:
            case Kind::max_times: return v.number() == 0.0;
            case Kind::max_plus:
            case Kind::max_min: return v.number() == -kInf;
            case Kind::min_plus:
            case Kind::min_times:
            case Kind::min_max: return v.number() == kInf;
            case Kind::union_intersect: return v.set().empty();
        }
        return false;
    }

    friend bool operator==(const Semiring&, const Semiring&) = default;

private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();

    Kind kind_ = Kind::plus_times;
};

/// Looks up a built-in semiring by its canonical name, e.g. "max.plus".
inline Semiring make_semiring(std::string_view name) {
    for (auto kind : Semiring::all_kinds) {
        Semiring s(kind);
        if (s.name() == name) return s;
    }
    throw NameError("unknown semiring '" + std::string(name) + "'");
}

inline const Semiring plus_times{Semiring::Kind::plus_times};
inline const Semiring max_plus{Semiring::Kind::max_plus};
inline const Semiring min_plus{Semiring::Kind::min_plus};
inline const Semiring max_times{Semiring::Kind::max_times};
inline const Semiring min_times{Semiring::Kind::min_times};
inline const Semiring union_intersect{Semiring::Kind::union_intersect};
inline const Semiring max_min{Semiring::Kind::max_min};
inline const Semiring min_max{Semiring::Kind::min_max};

}  // namespace hyperspace
