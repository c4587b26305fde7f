#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arithdyn {

/// Misuse of an exact operation: zero where a nonzero value is required,
/// evaluation at a pole, a place that does not belong to the field.
class arith_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a 0-based byte offset.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), msg_(msg), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }
    /// The message without the position suffix.
    const std::string& message() const noexcept { return msg_; }

private:
    std::string msg_;
    std::size_t pos_;
};

/// Input is well-formed but fails a family or model constraint.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The presentation has vanishing resultant, so it is not a point of Rat_d.
class degenerate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity failed. Always a bug.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace arithdyn
