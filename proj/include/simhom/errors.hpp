#pragma once

#include <stdexcept>
#include <string>

namespace simhom {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutation input is not a permutation of {0,...,p}.
class MalformedPermutation : public Error {
public:
    using Error::Error;
};

/// A vertex label occurs more than once in a simplex ordering.
class DuplicateVertex : public Error {
public:
    using Error::Error;
};

/// Two chains (or a chain and an assignment) have different dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A generator assignment has no value for a simplex appearing in a chain.
class MissingGenerator : public Error {
public:
    using Error::Error;
};

/// A chain mentions a simplex that is not a member of the complex.
class ForeignSimplex : public Error {
public:
    using Error::Error;
};

/// Malformed complex file or chain literal; carries the offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    explicit ParseError(const std::string& message) : Error(message), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Repeated vertex token within one simplex line of a complex file.
class DuplicateVertexInSimplex : public ParseError {
public:
    using ParseError::ParseError;
};

/// Requested builtin complex does not exist.
class UnknownBuiltin : public Error {
public:
    using Error::Error;
};

} // namespace simhom
