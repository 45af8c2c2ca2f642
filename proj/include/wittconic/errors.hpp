#pragma once

#include <stdexcept>
#include <string>

namespace wittconic {

// Base for every failure the library reports deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (a, b) is split: the conic has a rational point.
struct SplitAlgebra : Error {
    using Error::Error;
};

// A polynomial factorization exceeded the configured degree bound.
struct DegreeBound : Error {
    using Error::Error;
};

// The request needs a field or residue field that is not supported.
struct UnsupportedField : Error {
    using Error::Error;
};

struct PoleAtPoint : Error {
    using Error::Error;
};

struct BadRepresentative : Error {
    using Error::Error;
};

struct DegenerateForm : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

} // namespace wittconic
