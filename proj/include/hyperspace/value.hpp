#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperspace/errors.hpp"

namespace hyperspace {

/// A finite set of byte strings, or the symbolic universe P(V).
///
/// Finite sets are kept sorted and duplicate-free. The universe is never
/// materialized: it absorbs under union and is the identity under
/// intersection.
class StringSet {
public:
    StringSet() = default;

    StringSet(std::initializer_list<std::string> items) : items_(items) { canonicalize(); }

    explicit StringSet(std::vector<std::string> items) : items_(std::move(items)) { canonicalize(); }

    static StringSet universe() {
        StringSet s;
        s.universe_ = true;
        return s;
    }

    bool is_universe() const noexcept { return universe_; }
    bool empty() const noexcept { return !universe_ && items_.empty(); }

    /// Elements of a finite set; empty for the universe.
    const std::vector<std::string>& items() const noexcept { return items_; }

    bool contains(const std::string& item) const {
        return universe_ || std::binary_search(items_.begin(), items_.end(), item);
    }

    friend StringSet set_union(const StringSet& a, const StringSet& b) {
        if (a.universe_ || b.universe_) return universe();
        StringSet out;
        out.items_.reserve(a.items_.size() + b.items_.size());
        std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                       std::back_inserter(out.items_));
        return out;
    }

    friend StringSet set_intersection(const StringSet& a, const StringSet& b) {
        if (a.universe_) return b;
        if (b.universe_) return a;
        StringSet out;
        std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                              std::back_inserter(out.items_));
        return out;
    }

    friend bool operator==(const StringSet&, const StringSet&) = default;

    /// Finite sets order lexicographically; the universe sorts last.
    friend std::strong_ordering operator<=>(const StringSet& a, const StringSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
        return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                      b.items_.begin(), b.items_.end());
    }

private:
    void canonicalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<std::string> items_;
    bool universe_ = false;
};

/// A semiring element: an extended real, a text atom, or a string set.
///
/// NaN is rejected at construction and -0.0 is normalized to +0.0 so that
/// equal numbers have one representation.
class Value {
public:
    enum class Kind { number, text, set };

    Value() : data_(0.0) {}
    Value(double x) : data_(checked(x)) {}
    Value(int x) : data_(static_cast<double>(x)) {}
    Value(long x) : data_(checked(static_cast<double>(x))) {}
    Value(long long x) : data_(checked(static_cast<double>(x))) {}
    Value(std::string text) : data_(std::move(text)) {}
    Value(const char* text) : data_(std::string(text)) {}
    Value(StringSet set) : data_(std::move(set)) {}

    static Value infinity() { return Value(std::numeric_limits<double>::infinity()); }
    static Value neg_infinity() { return Value(-std::numeric_limits<double>::infinity()); }

    Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }
    bool is_number() const noexcept { return kind() == Kind::number; }
    bool is_text() const noexcept { return kind() == Kind::text; }
    bool is_set() const noexcept { return kind() == Kind::set; }

    double number() const { return std::get<double>(data_); }
    const std::string& text() const { return std::get<std::string>(data_); }
    const StringSet& set() const { return std::get<StringSet>(data_); }

    friend bool operator==(const Value&, const Value&) = default;

private:
    static double checked(double x) {
        if (std::isnan(x)) throw DomainError("NaN is not a representable value");
        return x == 0.0 ? 0.0 : x;
    }

    std::variant<double, std::string, StringSet> data_;
};

inline const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::number: return "number";
        case Value::Kind::text: return "text";
        case Value::Kind::set: return "set";
    }
    return "?";
}

}  // namespace hyperspace
