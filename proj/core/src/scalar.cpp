#include "lcoal/scalar.hpp"

#include <cctype>
#include <string>

#include "lcoal/error.hpp"

namespace lcoal
{

namespace
{

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-')
  {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::SyntaxError, "malformed number '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  Scalar value(n, d);
  value.canonicalize();
  if (negative)
    value = -value;
  return value;
}

std::string format_scalar(const Scalar &value)
{
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace lcoal
