#pragma once

#include <stdexcept>
#include <string>

namespace arccover {

/// Input data violates a structural precondition (bad rotation system,
/// malformed cycle claim, unknown family name, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact oracle was asked to run beyond its documented size cap.
struct size_limit_error : std::runtime_error {
    size_limit_error(const std::string& what, int limit)
        : std::runtime_error(what), cap(limit) {}
    int cap;
};

/// Internal consistency check failed (Euler sums, contradictory fixtures).
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

/// File / parse problems surfaced through the CLI.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arccover
