#include "maxvem/error.hpp"

namespace maxvem
{

ParseError::ParseError(int line, const std::string &what)
  : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

}  // namespace maxvem
