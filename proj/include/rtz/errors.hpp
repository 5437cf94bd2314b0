#pragma once

#include <stdexcept>
#include <string>

namespace rtz {

/* Raised when an adaptive-precision computation hits its escalation cap
 * without reaching a decision (undecided comparison, uncertified roots). */
struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rtz
