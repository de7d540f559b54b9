#ifndef LCOAL_GRAPH_HPP
#define LCOAL_GRAPH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lcoal/basis.hpp"
#include "lcoal/scalar.hpp"

namespace lcoal
{

struct Arc
{
  Index src = 0;
  Index dst = 0;
  Scalar weight;

  friend bool operator==(const Arc &, const Arc &) = default;
};

// Finite weighted directed graph. Vertices keep their declaration order; arcs are stored
// sorted by (src, dst) with at most one arc per pair and a nonzero weight on each.
class WeightedDigraph
{
public:
  // Throws UnknownVertex, DuplicateArc, ZeroWeight, DuplicateLabel, EmptyBasis, and
  // SyntaxError for a vertex name that is not an identifier.
  WeightedDigraph(std::vector<std::string> vertices, std::vector<Arc> arcs);

  const std::vector<std::string> &vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Arc> &arcs() const noexcept { return arcs_; }

  // Indices into arcs(), in increasing order.
  const std::vector<std::size_t> &out_arcs(Index v) const { return out_.at(v); }
  const std::vector<std::size_t> &in_arcs(Index v) const { return in_.at(v); }

  // Throws UnknownVertex.
  Index vertex_index(std::string_view name) const;

  friend bool operator==(const WeightedDigraph &a, const WeightedDigraph &b)
  {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Graph file format:
//   # comment
//   vertices: a b c d        optional, pins the vertex order
//   a -> b                   weight 1
//   a -> c -3/4
// Without a vertices line the order is first mention. Throws SyntaxError, ZeroWeight,
// DuplicateArc, UnknownVertex (arc endpoint missing from an explicit vertices line).
WeightedDigraph parse_graph(std::string_view text);

// Always writes a vertices line, then arcs in (src, dst) order, weight omitted when 1.
std::string format_graph(const WeightedDigraph &g);

// Plain-text dot export of the graph, arcs labelled with their weights.
std::string format_dot(const WeightedDigraph &g);

struct ValidationReport
{
  std::vector<Index> sinks;    // no outgoing arc
  std::vector<Index> sources;  // no incoming arc

  bool valid() const noexcept { return sinks.empty() && sources.empty(); }
};

// Finite graphs are automatically locally finite and row-finite, so only sinks and
// sources are reported.
ValidationReport validate_no_sink_no_source(const WeightedDigraph &g);

// True iff every vertex has nonnegative out-weights summing to 1.
bool is_row_stochastic(const WeightedDigraph &g);

// Same graph with vertices listed in `order` (a permutation of the vertex names).
WeightedDigraph reorder_vertices(const WeightedDigraph &g, const std::vector<std::string> &order);

}  // namespace lcoal

#endif  // LCOAL_GRAPH_HPP
