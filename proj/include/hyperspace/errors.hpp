#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperspace {

/// Unknown semiring name.
class NameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value outside the domain of the semiring it was handed to.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binary array operation over arrays tagged with different semirings.
class SemiringMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Key vectors that violate uniqueness or length requirements.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

    /// The same error with the message prefixed by the file it came from.
    FormatError in_file(const std::string& path) const {
        return FormatError(Prefixed{}, path + ": " + what(), line_);
    }

private:
    struct Prefixed {};
    FormatError(Prefixed, const std::string& full, std::size_t line)
        : std::runtime_error(full), line_(line) {}

    std::size_t line_;
};

}  // namespace hyperspace
