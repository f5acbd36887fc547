#pragma once

#include <stdexcept>
#include <string>

namespace tridist {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Triangle inequality violated, or the shape is numerically flat.
class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

// Angle triple is non-positive or does not sum to a straight angle.
class InvalidAngles : public Error {
public:
    using Error::Error;
};

// Argument lies outside the function's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// An empirical distribution was requested from zero samples.
class EmptySample : public Error {
public:
    using Error::Error;
};

// A piecewise function or named distribution failed its build-time checks.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// A function expected to be a CDF fails range/monotonicity/endpoint probes.
class NotACdf : public Error {
public:
    using Error::Error;
};

// A triangle does not have the shape a special-case formula requires.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// The requested combination (e.g. general concave pair) has no exact method.
class UnsupportedConfiguration : public Error {
public:
    using Error::Error;
};

// Scale factor for a distribution must be strictly positive.
class InvalidScale : public Error {
public:
    using Error::Error;
};

// Malformed textual input (triangle spec, CSV table, CLI argument payload).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace tridist
