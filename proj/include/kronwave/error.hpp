// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_ERROR_HPP
#define KRONWAVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kronwave {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument to a library call: wrong dimensions, out-of-range values.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Rejected simulation configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A factorization met a (numerically) zero pivot.
/// Non-finite state, failed factorization and the like.
class NumericalError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace kronwave

#endif  // KRONWAVE_ERROR_HPP
