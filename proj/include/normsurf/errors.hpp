// Exception hierarchy shared by the whole library.
//
// Two caller-facing families:
//   ParseError      -- malformed scenario/report input (bad syntax, unknown
//                      fields, vectors of the wrong length). Maps to exit
//                      code 2 in the CLI.
//   ValidationError -- well-formed input describing an impossible object
//                      (non-contractible configuration, mixed lattices,
//                      exceptional class in a positivity list). Maps to
//                      exit code 1.
// InternalError signals a broken internal invariant (e.g. a solution that
// fails its back-substitution check) and is never expected to fire.

#pragma once

#include <stdexcept>
#include <string>

namespace normsurf {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

class LatticeMismatchError : public ValidationError {
public:
    explicit LatticeMismatchError(const std::string& msg) : ValidationError(msg) {}
};

class NotNegativeDefiniteError : public ValidationError {
public:
    explicit NotNegativeDefiniteError(const std::string& msg) : ValidationError(msg) {}
};

class NegativeCrossTermError : public ValidationError {
public:
    explicit NegativeCrossTermError(const std::string& msg) : ValidationError(msg) {}
};

class SingularMatrixError : public ValidationError {
public:
    explicit SingularMatrixError(const std::string& msg) : ValidationError(msg) {}
};

class ExceptionalClassError : public ValidationError {
public:
    explicit ExceptionalClassError(const std::string& msg) : ValidationError(msg) {}
};

} // namespace normsurf
