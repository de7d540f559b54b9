#ifndef LCOAL_TEST_ORACLES_HPP
#define LCOAL_TEST_ORACLES_HPP

// Reference computations that avoid the library's sparse tensor machinery. They work on
// dense matrices built straight from the defining formulas and are only meant for small
// dimensions.

#include <cstdint>
#include <map>
#include <vector>

#include "lcoal/lcoal.hpp"

namespace lcoal::testing
{

using DenseQ = std::vector<std::vector<Scalar>>;

inline DenseQ dense_identity(std::size_t n)
{
  DenseQ m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

inline DenseQ dense_multiply(const DenseQ &a, const DenseQ &b)
{
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  DenseQ out(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
    {
      if (sgn(a[i][l]) == 0)
        continue;
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(b[l][j]) != 0)
          out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

inline DenseQ kronecker(const DenseQ &a, const DenseQ &b)
{
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  DenseQ out(n * m, std::vector<Scalar>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(a[i][j]) != 0)
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t l = 0; l < m; ++l)
            out[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return out;
}

// Swap matrix on W (x) W: row (q, p) <- column (p, q).
inline DenseQ dense_flip(std::size_t d)
{
  DenseQ t(d * d, std::vector<Scalar>(d * d));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      t[q * d + p][p * d + q] = 1;
  return t;
}

// c(A, B) = tau (A (x) B) as a d^2 x d^2 matrix, built by matrix products only.
inline DenseQ dense_cross(const DenseQ &a, const DenseQ &b)
{
  return dense_multiply(dense_flip(a.size()), kronecker(a, b));
}

// (R (x) I)(I (x) R)(R (x) I) == (I (x) R)(R (x) I)(I (x) R) by dense matrix products.
inline bool dense_ybe_holds(const DenseQ &r)
{
  std::size_t d = 0;
  while (d * d < r.size())
    ++d;
  const DenseQ id = dense_identity(d);
  const DenseQ r12 = kronecker(r, id);
  const DenseQ r23 = kronecker(id, r);
  return dense_multiply(r12, dense_multiply(r23, r12)) == dense_multiply(r23, dense_multiply(r12, r23));
}

// Graph-side L-cocommutativity: every vertex has the same weighted in- and out-neighbours.
inline bool graph_in_equals_out(const WeightedDigraph &g)
{
  for (Index v = 0; v < g.vertex_count(); ++v)
  {
    std::map<Index, Scalar> out, in;
    for (const auto &a : g.arcs())
    {
      if (a.src == v)
        out[a.dst] = a.weight;
      if (a.dst == v)
        in[a.src] = a.weight;
    }
    if (out != in)
      return false;
  }
  return true;
}

}  // namespace lcoal::testing

#endif  // LCOAL_TEST_ORACLES_HPP
