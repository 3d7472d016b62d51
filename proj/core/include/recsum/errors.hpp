#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recsum {

/// Bad argument or malformed input. CLI maps this to exit code 2.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size guard was exceeded. Recoverable: the caller can retry
/// with a larger guard or a cheaper method. CLI maps this to exit code 4.
class resource_guard_error : public std::runtime_error {
public:
    resource_guard_error(const std::string& what, std::uint64_t requested, std::uint64_t guard)
        : std::runtime_error(what), requested_(requested), guard_(guard) {}

    std::uint64_t requested() const { return requested_; }
    std::uint64_t guard() const { return guard_; }

private:
    std::uint64_t requested_;
    std::uint64_t guard_;
};

/// A mathematical identity that must hold failed to hold. CLI maps this to
/// exit code 3.
class identity_check_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace recsum
