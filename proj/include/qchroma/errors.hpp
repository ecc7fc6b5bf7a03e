#pragma once

#include <stdexcept>
#include <string>

namespace qchroma {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Enumeration or ring-degree budget exceeded. CLI maps this to exit code 3. */
struct ResourceGuardError : Error {
    using Error::Error;
};

/* An exact solve produced a non-integer coefficient where the contract
 * guarantees integrality. Always an internal-consistency bug, never data. */
struct IntegralityError : Error {
    using Error::Error;
};

struct InvertibilityError : Error {
    using Error::Error;
};

struct InvalidHessenberg : Error {
    using Error::Error;
};

struct KOutOfRange : Error {
    using Error::Error;
};

/* The image of Delta fell outside S_2; carries the witness word. */
struct DeltaNotWellDefined : Error {
    using Error::Error;
};

struct MalformedTree : Error {
    using Error::Error;
};

struct EdgeNotIncident : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace qchroma
