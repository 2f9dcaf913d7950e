#pragma once

#include <stdexcept>
#include <string>

namespace nsjack {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different variable counts.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a Laurent polynomial at a zero coordinate.
class PoleError : public Error {
public:
    using Error::Error;
};

/// The partial order was queried on compositions of different weight.
class OrderError : public Error {
public:
    using Error::Error;
};

/// Parameter outside the supported range (alpha <= 0, non-integer k, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A denominator [c]_eta vanished while building a series.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A linear system that should be solvable was singular.
class SingularBasisError : public Error {
public:
    using Error::Error;
};

/// Internal inconsistency: an exact division left a remainder, an
/// overdetermined system was inconsistent, etc.  Always a bug.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

/// A harmonic component was not annihilated by the Laplacian.
class DecompositionError : public Error {
public:
    using Error::Error;
};

} // namespace nsjack
