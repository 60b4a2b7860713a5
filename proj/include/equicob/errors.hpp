#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equicob {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankMismatch : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct InvalidDataset : Error {
    using Error::Error;
};

// Raised when the multiplicity-route formula is asked for a multi-index
// whose top entry is zero; that case needs the rational route.
struct IndexRequiresDivision : Error {
    using Error::Error;
};

// A required Chern-number value failed to be a polynomial, so the abstract
// weight data cannot come from an actual manifold.
struct NonRealizableData : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct ConfigInvalid : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    std::size_t point_index;
    ValidationError(std::size_t index, const std::string& reason)
        : Error("point " + std::to_string(index) + ": " + reason), point_index(index) {}
};

}  // namespace equicob
