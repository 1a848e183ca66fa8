#pragma once

#include <stdexcept>
#include <string>

namespace psep {

// Thrown when an algorithm reaches a state its own guarantees rule out.
// Seeing one of these means a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace psep
