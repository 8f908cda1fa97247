#pragma once

#include <stdexcept>
#include <string>

namespace nuosc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// The parametric constants need a square root of a negative number.
class ComplexBranch : public Error
{
  public:
    using Error::Error;
};

class NoSignChange : public Error
{
  public:
    using Error::Error;
};

class NonConvergence : public Error
{
  public:
    using Error::Error;
};

/// The finite-difference step vanishes at working precision.
class DegenerateStep : public Error
{
  public:
    using Error::Error;
};

/// Requested eigenvalues are closer together than the bisection can resolve.
class GridTooCoarse : public Error
{
  public:
    using Error::Error;
};

class NoConvergenceUnderRefinement : public Error
{
  public:
    using Error::Error;
};

class IndexError : public Error
{
  public:
    using Error::Error;
};

/// Malformed input file or command-line configuration.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

class IOError : public Error
{
  public:
    using Error::Error;
};

} // namespace nuosc
