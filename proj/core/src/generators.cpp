#include "lcoal/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcoal/error.hpp"

namespace lcoal
{

Scalar random_nonzero_scalar(Rng &rng, int bound, int max_denominator, bool allow_negative)
{
  std::uniform_int_distribution<int> den_dist(1, std::max(1, max_denominator));
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(allow_negative ? -bound * den : 1, bound * den);
  int num = 0;
  while (num == 0)
    num = num_dist(rng);
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

namespace
{

std::vector<std::string> vertex_names(unsigned n)
{
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i)
    names.push_back("v" + std::to_string(i));
  return names;
}

// Spanning cycle plus random extra arcs, as (src, dst) pairs without duplicates.
std::vector<std::pair<Index, Index>> random_arc_set(Rng &rng, unsigned n, double p)
{
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (unsigned i = 0; i < n; ++i)
    present[order[i]][order[(i + 1) % n]] = true;
  std::bernoulli_distribution extra(p);
  for (unsigned s = 0; s < n; ++s)
    for (unsigned d = 0; d < n; ++d)
      if (!present[s][d] && extra(rng))
        present[s][d] = true;
  std::vector<std::pair<Index, Index>> arcs;
  for (Index s = 0; s < n; ++s)
    for (Index d = 0; d < n; ++d)
      if (present[s][d])
        arcs.emplace_back(s, d);
  return arcs;
}

unsigned random_size(Rng &rng, const GraphShape &shape)
{
  std::uniform_int_distribution<unsigned> dist(std::max(1u, shape.min_vertices),
                                               std::max(shape.min_vertices, shape.max_vertices));
  return dist(rng);
}

}  // namespace

WeightedDigraph random_graph(Rng &rng, const GraphShape &shape)
{
  const unsigned n = random_size(rng, shape);
  std::vector<Arc> arcs;
  for (const auto &[s, d] : random_arc_set(rng, n, shape.extra_arc_probability))
    arcs.push_back({s, d,
                    random_nonzero_scalar(rng, shape.weight_bound, shape.max_denominator,
                                          shape.allow_negative)});
  return WeightedDigraph(vertex_names(n), std::move(arcs));
}

WeightedDigraph random_stochastic_graph(Rng &rng, const GraphShape &shape)
{
  const unsigned n = random_size(rng, shape);
  const auto pairs = random_arc_set(rng, n, shape.extra_arc_probability);
  std::vector<int> out_degree(n, 0);
  for (const auto &[s, d] : pairs)
    ++out_degree[s];
  std::vector<Arc> arcs;
  for (const auto &[s, d] : pairs)
    arcs.push_back({s, d, Scalar(1, out_degree[s])});
  return WeightedDigraph(vertex_names(n), std::move(arcs));
}

LinearEndo random_automorphism(Rng &rng, const BasisPtr &basis, int bound)
{
  std::uniform_int_distribution<int> entry(-bound, bound);
  const std::size_t n = basis->size();
  for (;;)
  {
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
    for (auto &row : rows)
      for (auto &x : row)
        x = entry(rng);
    LinearEndo f = from_dense(basis, rows);
    try
    {
      invert(f);
      return f;
    }
    catch (const Error &e)
    {
      if (e.kind() != ErrorKind::Singular)
        throw;
    }
  }
}

std::pair<LinearEndo, LinearEndo> random_commuting_pair(Rng &rng, const BasisPtr &basis)
{
  std::uniform_int_distribution<int> coef(-3, 3);
  const LinearEndo id = LinearEndo::identity(basis);
  for (;;)
  {
    const LinearEndo m = random_automorphism(rng, basis, 2);
    const LinearEndo m2 = compose(m, m);
    auto poly = [&](int c0, int c1, int c2) {
      std::vector<FreeVector> cols;
      for (Index i = 0; i < id.dim(); ++i)
        cols.push_back(Scalar(c0) * id.column(i) + Scalar(c1) * m.column(i) +
                       Scalar(c2) * m2.column(i));
      return LinearEndo(basis, std::move(cols));
    };
    LinearEndo a = poly(coef(rng), coef(rng), coef(rng));
    LinearEndo b = poly(coef(rng), coef(rng), coef(rng));
    try
    {
      invert(a);
      invert(b);
      return {std::move(a), std::move(b)};
    }
    catch (const Error &e)
    {
      if (e.kind() != ErrorKind::Singular)
        throw;
    }
  }
}

BasisPtr numbered_basis(std::size_t dim, const char *prefix)
{
  std::vector<BasisLabel> labels;
  for (std::size_t i = 0; i < dim; ++i)
    labels.push_back({LabelKind::Vertex, prefix + std::to_string(i)});
  return Basis::make(std::move(labels));
}

}  // namespace lcoal
