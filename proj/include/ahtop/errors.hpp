#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ahtop {

/// Raised when an enumeration would exceed the configured cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t count, std::size_t cap)
        : std::runtime_error(what + ": " + std::to_string(count) + " exceeds cap " + std::to_string(cap)),
          count_(count), cap_(cap) {}

    std::size_t count() const noexcept { return count_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t count_;
    std::size_t cap_;
};

/// A vertex assignment that violates the graph-map condition where a map was required.
class MapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Runtime limits shared by every enumerating operation.
struct Limits {
    /// Maximum number of maps (or paths) an enumeration or search may materialize.
    std::size_t enumeration_cap = 10'000'000;
    /// Maximum number of one-step adjacencies a class computation may visit.
    std::size_t adjacency_cap = 200'000'000;
};

}  // namespace ahtop
