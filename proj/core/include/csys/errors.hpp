#pragma once

#include <stdexcept>
#include <string>

namespace csys {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance/family/decomposition files.
struct ParseError : Error {
    using Error::Error;
};

// Arguments outside a contract (unknown element, ground-set mismatch).
struct InputError : Error {
    using Error::Error;
};

// Instance exceeds a documented exhaustive cap. Never a silent skip.
struct CapacityError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace csys
