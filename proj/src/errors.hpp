#pragma once

#include <stdexcept>
#include <string>

namespace geolab {

// Input/precondition problems use std::domain_error (CLI exit 2).

// A computed internal cross-check failed; always names the identity (CLI exit 3).
struct identity_error : std::runtime_error {
    explicit identity_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem/stream trouble (CLI exit 4).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geolab
