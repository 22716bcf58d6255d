#ifndef SCHUBERT_ERRORS_HPP
#define SCHUBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schubert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A structural invariant of an input object is violated. */
struct ValidationError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

/* Machine-integer arithmetic left the representable range. */
struct OverflowError : Error {
    using Error::Error;
};

/* Arity or homogeneous-degree mismatch between polynomial operands. */
struct GradingError : Error {
    using Error::Error;
};

struct NotFoundError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

/* A query needs strata deeper than the table was built to. */
struct DepthError : Error {
    using Error::Error;
};

/* Stratum ceiling reached: the input matrix does not define a finite group. */
struct NonTerminationError : Error {
    using Error::Error;
};

struct CacheMismatchError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace schubert

#endif
