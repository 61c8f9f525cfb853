#ifndef MAXVEM_ERROR_HPP
#define MAXVEM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maxvem
{

// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

// Raised by the PMESH reader; carries the 1-based line number of the offending line
// (0 when the problem is only detectable after the whole file has been read).
class ParseError : public Error
{
public:
  ParseError(int line, const std::string &what);
  int line() const { return line_; }

private:
  int line_;
};

class GeometryError : public Error
{
public:
  using Error::Error;
};

// A factorization or local moment system could not be inverted.
class SingularError : public Error
{
public:
  using Error::Error;
};

// Dense diagnostics refuse to materialize operators above their size limit.
class SizeError : public Error
{
public:
  using Error::Error;
};

class NumericalError : public Error
{
public:
  using Error::Error;
};

}  // namespace maxvem

#endif  // MAXVEM_ERROR_HPP
