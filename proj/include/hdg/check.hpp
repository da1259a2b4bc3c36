#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

/// Raised by internal consistency checks. These stay on in release builds:
/// the invariants they guard are the correctness net for the surgery
/// machinery.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hdg

#define HDG_CHECK(cond, msg)                                                       \
    do {                                                                           \
        if (!(cond)) throw ::hdg::InternalError(std::string("internal: ") + msg); \
    } while (0)
