#pragma once

#include <stdexcept>
#include <string>

namespace tropix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class NotPointed : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

class SupportViolation : public Error {
public:
    using Error::Error;
};

class NonTransverse : public Error {
public:
    using Error::Error;
};

class StratumMismatch : public Error {
public:
    using Error::Error;
};

/// The resultant vanishes identically: the fiber is not finite.
class InfiniteFiber : public Error {
public:
    using Error::Error;
};

/// x- and y-valuations of the roots cannot be paired without guessing.
class PairingAmbiguity : public Error {
public:
    using Error::Error;
};

} // namespace tropix
