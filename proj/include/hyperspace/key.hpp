#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hyperspace {

/// A row or column label: a signed 64-bit integer or a byte string.
///
/// All integers sort before all strings; integers compare numerically and
/// strings by bytes.
class Key {
public:
    Key() : data_(std::int64_t{0}) {}
    Key(std::int64_t i) : data_(i) {}
    Key(int i) : data_(std::int64_t{i}) {}
    Key(std::string s) : data_(std::move(s)) {}
    Key(const char* s) : data_(std::string(s)) {}

    bool is_integer() const noexcept { return data_.index() == 0; }
    bool is_text() const noexcept { return data_.index() == 1; }
    std::int64_t integer() const { return std::get<std::int64_t>(data_); }
    const std::string& text() const { return std::get<std::string>(data_); }

    friend bool operator==(const Key&, const Key&) = default;
    friend std::strong_ordering operator<=>(const Key& a, const Key& b) {
        if (a.data_.index() != b.data_.index()) return a.data_.index() <=> b.data_.index();
        if (a.is_integer()) return a.integer() <=> b.integer();
        return a.text().compare(b.text()) <=> 0;
    }

private:
    std::variant<std::int64_t, std::string> data_;
};

using KeyVector = std::vector<Key>;

/// Reserved keys for collapsed or synthetic dimensions.
namespace keys {
inline const Key all{":all"};
inline const Key bias{":bias"};
inline const Key level{":level"};
inline const Key frontier{":frontier"};
}  // namespace keys

}  // namespace hyperspace
