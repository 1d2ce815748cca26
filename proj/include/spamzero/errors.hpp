#pragma once

#include <stdexcept>
#include <string>

namespace spamzero {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration: unknown stopword list, template missing a placeholder,
// unreadable config file, schema mismatch. CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem-level failure (missing corpus file, unwritable output dir).
struct IoError : Error {
    using Error::Error;
};

// Backend could not be reached at startup (health check). CLI exit code 3.
struct BackendUnreachableError : Error {
    using Error::Error;
};

// Transient transport failure; callers may retry.
struct RetryableError : Error {
    using Error::Error;
};

// Malformed response from a backend; not retryable.
struct ProtocolError : Error {
    using Error::Error;
};

// Backend lacks a requested capability (e.g. score()).
struct CapabilityError : Error {
    using Error::Error;
};

}  // namespace spamzero
