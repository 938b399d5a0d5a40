#pragma once

#include <stdexcept>
#include <string>

namespace swkb {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter set violates a constructor or canonical-form constraint.
struct ParamError : Error {
    using Error::Error;
};

// A coordinate lies outside a potential's natural domain.
struct DomainError : Error {
    using Error::Error;
};

// Arguments violate the validity region of a closed-form integral.
struct RangeError : Error {
    using Error::Error;
};

// Evaluation requested at a pole of the superpotential.
struct SingularityError : Error {
    using Error::Error;
};

// No classically allowed region at the requested energy
// (complex turning points, or roots outside the variable map's range).
struct NoBoundRegion : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

struct NonFiniteSample : Error {
    using Error::Error;
};

struct NoSignChange : Error {
    using Error::Error;
};

struct MaxIterations : Error {
    using Error::Error;
};

// Requested level index is at or beyond the bound-state count.
struct UnboundError : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

}  // namespace swkb
