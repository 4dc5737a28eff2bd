#ifndef SHAPEFLOW_ERRORS_HPP
#define SHAPEFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shapeflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input collapses to fewer than 3 hull vertices.
struct DegenerateInput : Error {
    using Error::Error;
};

// A polygon required to satisfy -K == K does not.
struct NotOriginSymmetric : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct NotATriangle : Error {
    using Error::Error;
};

// Triangle has no side whose opposite altitude matches the requested
// altitude/base ratio.
struct NotInCanonicalFamily : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Two routes that must agree (a closed form and its defining property,
// or two equivalent classifiers) disagree beyond tolerance.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct InsufficientOrbit : Error {
    using Error::Error;
};

}  // namespace shapeflow

#endif
