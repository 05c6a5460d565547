#ifndef OACODES_ERRORS_HPP
#define OACODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oacodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf
struct NotPrimePower : Error {
    using Error::Error;
};

// array
struct BudgetExceeded : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// construct
struct ShapeMismatch : Error {
    using Error::Error;
};
struct RowCountMismatch : Error {
    using Error::Error;
};
struct OddLevels : Error {
    using Error::Error;
};
struct Unconstructible : Error {
    using Error::Error;
};

// codes
struct RankDeficient : Error {
    using Error::Error;
};

// quantum
struct InvalidDistance : Error {
    using Error::Error;
};
struct PartitionInvalid : Error {
    using Error::Error;
};
struct DistanceUnavailable : Error {
    using Error::Error;
};
struct NotIrredundant : Error {
    using Error::Error;
};
struct InsufficientStrength : Error {
    using Error::Error;
};
struct DimensionCap : Error {
    using Error::Error;
};

}  // namespace oacodes

#endif
