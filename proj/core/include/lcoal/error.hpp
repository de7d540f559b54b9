#ifndef LCOAL_ERROR_HPP
#define LCOAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcoal
{

enum class ErrorKind
{
  SyntaxError,
  ZeroWeight,
  DuplicateArc,
  UnknownVertex,
  UnknownLabel,
  DuplicateLabel,
  EmptyBasis,
  BasisMismatch,
  Singular,
  InvalidGraph,
  NotMarkov,
  ShadowNameClash,
  AmbiguousSupport,
  NotYbeSolution,
  IndexOutOfRange,
  ArityMismatch,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; callers switch on
// kind() rather than on a class hierarchy.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind),
      detail_(detail)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }
  const std::string &detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace lcoal

#endif  // LCOAL_ERROR_HPP
