#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bwlf {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid rules, patterns, or command configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input file contents (ragged rows, bad numbers, bad entries).
class FormatError : public Error {
public:
    using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Two inputs that must line up row-for-row do not.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// Non-fatal diagnostics accumulated by an operation, in emission order.
using Warnings = std::vector<std::string>;

}  // namespace bwlf
