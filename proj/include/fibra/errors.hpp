#pragma once

#include <stdexcept>

namespace fibra {

// Base class for every failure thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error { using error::error; };            // argument outside an operation's domain
struct shape_error : error { using error::error; };             // concatenation operand sizes disagree
struct bounds_error : error { using error::error; };            // subgrid/window outside the host
struct overflow_error : error { using error::error; };          // exact 128-bit arithmetic exceeded
struct resource_error : error { using error::error; };          // cell or loop budget exceeded
struct invalid_representation : error { using error::error; };  // malformed Zeckendorf digit string
struct undefined_transition : error { using error::error; };    // digit pair outside a state's image shape
struct inconsistent_image : error { using error::error; };      // 2D substitution shape condition violated
struct structural_violation : error { using error::error; };    // row/column structure check failed
struct insufficient_prefix : error { using error::error; };     // prefix too short for the requested windows

}  // namespace fibra
