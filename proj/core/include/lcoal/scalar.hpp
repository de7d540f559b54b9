#ifndef LCOAL_SCALAR_HPP
#define LCOAL_SCALAR_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lcoal
{

// Exact rational scalar. gmpxx keeps every arithmetic result in lowest terms with a
// positive denominator; parse_scalar() canonicalizes text input the same way.
using Scalar = mpq_class;

// Accepts "n", "-n", "p/q" and "-p/q" with decimal digits. Throws Error(SyntaxError) on
// anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

// Integer when the denominator is 1, otherwise "p/q".
std::string format_scalar(const Scalar &value);

inline bool is_zero(const Scalar &value) { return sgn(value) == 0; }

}  // namespace lcoal

#endif  // LCOAL_SCALAR_HPP
