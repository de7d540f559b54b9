#include "lcoal/graph.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "lcoal/error.hpp"
#include "lcoal/text_format.hpp"

namespace lcoal
{

WeightedDigraph::WeightedDigraph(std::vector<std::string> vertices, std::vector<Arc> arcs)
  : vertices_(std::move(vertices)), arcs_(std::move(arcs))
{
  if (vertices_.empty())
    throw Error(ErrorKind::EmptyBasis, "graph has no vertices");
  std::unordered_map<std::string, Index> names;
  for (Index i = 0; i < vertices_.size(); ++i)
  {
    if (!is_identifier(vertices_[i]))
      throw Error(ErrorKind::SyntaxError, "invalid vertex name '" + vertices_[i] + "'");
    if (!names.emplace(vertices_[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "vertex '" + vertices_[i] + "' declared twice");
  }
  for (const auto &a : arcs_)
  {
    if (a.src >= vertices_.size() || a.dst >= vertices_.size())
      throw Error(ErrorKind::UnknownVertex, "arc endpoint outside the vertex list");
    if (is_zero(a.weight))
      throw Error(ErrorKind::ZeroWeight,
                  "arc " + vertices_[a.src] + " -> " + vertices_[a.dst] + " has weight 0");
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc &x, const Arc &y) {
    return std::tie(x.src, x.dst) < std::tie(y.src, y.dst);
  });
  for (std::size_t i = 1; i < arcs_.size(); ++i)
    if (arcs_[i].src == arcs_[i - 1].src && arcs_[i].dst == arcs_[i - 1].dst)
      throw Error(ErrorKind::DuplicateArc,
                  "arc " + vertices_[arcs_[i].src] + " -> " + vertices_[arcs_[i].dst] + " given twice");

  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i)
  {
    out_[arcs_[i].src].push_back(i);
    in_[arcs_[i].dst].push_back(i);
  }
}

Index WeightedDigraph::vertex_index(std::string_view name) const
{
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end())
    throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
  return static_cast<Index>(it - vertices_.begin());
}

WeightedDigraph parse_graph(std::string_view text)
{
  const auto lines = clean_lines(text);
  std::vector<std::string> vertices;
  std::unordered_map<std::string, Index> index;
  bool pinned = false;
  auto declare = [&](const std::string &name, const std::string &where) -> Index {
    if (!is_identifier(name))
      throw Error(ErrorKind::SyntaxError, where + "invalid vertex name '" + name + "'");
    auto it = index.find(name);
    if (it != index.end())
      return it->second;
    if (pinned)
      throw Error(ErrorKind::UnknownVertex, where + "vertex '" + name + "' is not in the vertices line");
    const auto i = static_cast<Index>(vertices.size());
    vertices.push_back(name);
    index.emplace(name, i);
    return i;
  };

  std::vector<Arc> arcs;
  for (std::size_t n = 0; n < lines.size(); ++n)
  {
    const std::string &line = lines[n];
    if (line.empty())
      continue;
    const std::string where = "line " + std::to_string(n + 1) + ": ";
    if (line.rfind("vertices:", 0) == 0)
    {
      if (pinned || !arcs.empty())
        throw Error(ErrorKind::SyntaxError, where + "the vertices line must come first and only once");
      for (const auto &name : split_whitespace(std::string_view(line).substr(9)))
      {
        if (index.count(name))
          throw Error(ErrorKind::DuplicateLabel, where + "vertex '" + name + "' listed twice");
        declare(name, where);
      }
      pinned = true;
      continue;
    }
    const auto tokens = split_whitespace(line);
    if ((tokens.size() != 3 && tokens.size() != 4) || tokens[1] != "->")
      throw Error(ErrorKind::SyntaxError, where + "expected '<src> -> <dst> [<weight>]'");
    Scalar weight = 1;
    if (tokens.size() == 4)
    {
      try
      {
        weight = parse_scalar(tokens[3]);
      }
      catch (const Error &e)
      {
        throw Error(ErrorKind::SyntaxError, where + e.detail());
      }
    }
    if (is_zero(weight))
      throw Error(ErrorKind::ZeroWeight, where + "arc " + tokens[0] + " -> " + tokens[2] + " has weight 0");
    const Index s = declare(tokens[0], where);
    const Index d = declare(tokens[2], where);
    for (const auto &a : arcs)
      if (a.src == s && a.dst == d)
        throw Error(ErrorKind::DuplicateArc, where + "arc " + tokens[0] + " -> " + tokens[2] + " given twice");
    arcs.push_back({s, d, weight});
  }
  if (vertices.empty())
    throw Error(ErrorKind::SyntaxError, "graph text declares no vertices");
  return WeightedDigraph(std::move(vertices), std::move(arcs));
}

std::string format_graph(const WeightedDigraph &g)
{
  std::string out = "vertices:";
  for (const auto &v : g.vertices())
    out += " " + v;
  out += "\n";
  for (const auto &a : g.arcs())
  {
    out += g.vertices()[a.src] + " -> " + g.vertices()[a.dst];
    if (a.weight != 1)
      out += " " + format_scalar(a.weight);
    out += "\n";
  }
  return out;
}

std::string format_dot(const WeightedDigraph &g)
{
  std::string out = "digraph support {\n";
  for (const auto &v : g.vertices())
    out += "  " + v + ";\n";
  for (const auto &a : g.arcs())
    out += "  " + g.vertices()[a.src] + " -> " + g.vertices()[a.dst] + " [label=\"" +
           format_scalar(a.weight) + "\"];\n";
  out += "}\n";
  return out;
}

ValidationReport validate_no_sink_no_source(const WeightedDigraph &g)
{
  ValidationReport report;
  for (Index v = 0; v < g.vertex_count(); ++v)
  {
    if (g.out_arcs(v).empty())
      report.sinks.push_back(v);
    if (g.in_arcs(v).empty())
      report.sources.push_back(v);
  }
  return report;
}

bool is_row_stochastic(const WeightedDigraph &g)
{
  for (Index v = 0; v < g.vertex_count(); ++v)
  {
    Scalar sum = 0;
    for (std::size_t i : g.out_arcs(v))
    {
      if (sgn(g.arcs()[i].weight) < 0)
        return false;
      sum += g.arcs()[i].weight;
    }
    if (sum != 1)
      return false;
  }
  return true;
}

WeightedDigraph reorder_vertices(const WeightedDigraph &g, const std::vector<std::string> &order)
{
  if (order.size() != g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "reordering must list every vertex exactly once");
  std::vector<Index> position(g.vertex_count());
  std::vector<bool> used(g.vertex_count(), false);
  for (Index i = 0; i < order.size(); ++i)
  {
    const Index old = g.vertex_index(order[i]);
    if (used[old])
      throw Error(ErrorKind::DuplicateLabel, "vertex '" + order[i] + "' listed twice");
    used[old] = true;
    position[old] = i;
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const auto &a : g.arcs())
    arcs.push_back({position[a.src], position[a.dst], a.weight});
  return WeightedDigraph(order, std::move(arcs));
}

}  // namespace lcoal
