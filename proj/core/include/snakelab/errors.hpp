#pragma once

#include <stdexcept>
#include <string>

namespace snakelab {

// Parameter errors are reported as std::invalid_argument.  The exception
// types below distinguish the recoverable simulation failures named in the
// module contracts.

/// The walk stepped outside the generated environment window.  The caller
/// is expected to regenerate a longer environment and retry.
class EnvironmentExhausted : public std::runtime_error {
public:
    explicit EnvironmentExhausted(const std::string& what)
        : std::runtime_error(what) {}
};

/// A path-derived quantity (return time, excursion count, horizon) was
/// requested beyond what the simulated path contains.
class IncompletePath : public std::runtime_error {
public:
    explicit IncompletePath(const std::string& what)
        : std::runtime_error(what) {}
};

/// A hard resource guard tripped (e.g. particle population explosion).
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace snakelab
