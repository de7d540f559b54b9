#ifndef LCOAL_GENERATORS_HPP
#define LCOAL_GENERATORS_HPP

// Seeded random instances for property checks and benchmarks.

#include <cstdint>
#include <random>

#include "lcoal/graph.hpp"
#include "lcoal/linear_endo.hpp"

namespace lcoal
{

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 1009;

struct GraphShape
{
  unsigned min_vertices = 2;
  unsigned max_vertices = 8;
  // Probability of each arc beyond the spanning cycle that rules out sinks and sources.
  double extra_arc_probability = 0.3;
  int weight_bound = 10;       // weights in [-bound, bound]
  int max_denominator = 5;
  bool allow_negative = true;
};

// Nonzero rational p/q with |p/q| <= bound and 1 <= q <= max_denominator.
Scalar random_nonzero_scalar(Rng &rng, int bound, int max_denominator, bool allow_negative = true);

// Vertices v0 .. v{n-1}. A random cyclic permutation guarantees every vertex both an
// in-arc and an out-arc, so the result always passes validate_no_sink_no_source.
WeightedDigraph random_graph(Rng &rng, const GraphShape &shape = {});

// Same, but every vertex's out-weights are equal positive fractions summing to 1.
WeightedDigraph random_stochastic_graph(Rng &rng, const GraphShape &shape = {});

// Dense random map with small integer entries in [-bound, bound], retried until invertible.
LinearEndo random_automorphism(Rng &rng, const BasisPtr &basis, int bound = 3);

// A commuting pair built as two polynomials (with random coefficients) in one random
// automorphism, retried until both are invertible.
std::pair<LinearEndo, LinearEndo> random_commuting_pair(Rng &rng, const BasisPtr &basis);

// Basis x0 .. x{dim-1}.
BasisPtr numbered_basis(std::size_t dim, const char *prefix = "x");

}  // namespace lcoal

#endif  // LCOAL_GENERATORS_HPP
