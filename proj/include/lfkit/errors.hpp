#pragma once

#include <stdexcept>
#include <string>

namespace lfkit {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Argument outside the supported numeric range (sieve limits, cutoffs, work bounds).
class bounds_error : public error {
public:
    using error::error;
};

/// Mathematically invalid argument (weight too small, non-unit root, zero parameter).
class domain_error : public error {
public:
    using error::error;
};

/// Operation was given fewer terms or parameters than it needs.
class arity_error : public error {
public:
    using error::error;
};

/// Input data lacks entries the operation requires (missing primes, short coverage).
class incomplete_input_error : public error {
public:
    using error::error;
};

/// Local data requested at a prime of bad reduction.
class bad_reduction_error : public error {
public:
    using error::error;
};

/// Malformed input file; message carries the file name and line number.
class parse_error : public error {
public:
    using error::error;
};

/// An internal cross-check failed and results would be unreliable.
class consistency_error : public error {
public:
    using error::error;
};

} // namespace lfkit
