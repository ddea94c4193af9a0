#pragma once

#include <stdexcept>
#include <string>

namespace harbourne {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different fields.
class DescriptorMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Number of lines outside the supported range.
class InvalidDegree : public Error {
public:
    using Error::Error;
};

/// Malformed T-vector, duplicate lines, zero coordinate triples.
class InvalidConfiguration : public Error {
public:
    using Error::Error;
};

class UnsupportedField : public Error {
public:
    using Error::Error;
};

/// Certificate failed to parse or verify. `path()` points at the offending JSON node when known.
class VerificationError : public Error {
public:
    VerificationError(const std::string& what, std::string path = {})
        : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Table could not be certified: a candidate below the reported minimum is undecided.
class TableIntegrityError : public Error {
public:
    using Error::Error;
};

}  // namespace harbourne
