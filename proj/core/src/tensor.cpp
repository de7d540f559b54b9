#include "lcoal/tensor.hpp"

#include "lcoal/error.hpp"

namespace lcoal
{

std::size_t arity(const TensorN &t)
{
  if (t.empty())
    return 0;
  const std::size_t n = t.terms().front().first.size();
  for (const auto &[key, c] : t.terms())
    if (key.size() != n)
      throw Error(ErrorKind::ArityMismatch, "tensor terms have different numbers of legs");
  return n;
}

}  // namespace lcoal
