#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

// Caller-supplied parameters violate an operation's preconditions.
class argument_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural or configured limit was exceeded (vertex capacity, oracle size).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Always a bug, never a usage error.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph6 input; byte_offset() locates the offending byte.
class parse_error : public argument_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : argument_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace turan
