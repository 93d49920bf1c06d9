#ifndef CALG_ERROR_HPP
#define CALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace calg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (shape, field, degree, parse).
class InputError : public Error
{
public:
	using Error::Error;
};

/// Division by zero, mixed fields and similar misuse of scalars.
class ArithmeticError : public Error
{
public:
	using Error::Error;
};

/// A construction was asked to run on inputs that fail its hypotheses.
class HypothesisError : public Error
{
public:
	using Error::Error;
};

} // namespace calg

#endif
