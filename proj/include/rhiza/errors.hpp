#pragma once

#include <stdexcept>
#include <string>

namespace rhiza {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct SingularFormError : Error {
    explicit SingularFormError(const std::string& msg = "bilinear form is degenerate") : Error(msg) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

struct PostconditionError : Error {
    explicit PostconditionError(const std::string& msg) : Error(msg) {}
};

struct IllDefinedError : Error {
    explicit IllDefinedError(const std::string& msg) : Error(msg) {}
};

struct CenterMismatchError : Error {
    explicit CenterMismatchError(const std::string& msg) : Error(msg) {}
};

struct NoCandidateError : Error {
    explicit NoCandidateError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

} // namespace rhiza
