#include "lcoal/coalgebra.hpp"

#include <map>
#include <unordered_map>

#include "lcoal/error.hpp"
#include "lcoal/text_format.hpp"

namespace lcoal
{

namespace
{

void check_coproduct(const Coproduct &c, std::size_t dim, const char *which)
{
  if (c.size() != dim)
    throw Error(ErrorKind::IndexOutOfRange, std::string(which) + " coproduct is not total on the basis");
  for (const auto &t : c)
    for (const auto &[k, coef] : t.terms())
      if (k[0] >= dim || k[1] >= dim)
        throw Error(ErrorKind::UnknownLabel, std::string(which) + " coproduct leaves the basis");
}

// sum c * outer(x) (x) y over terms c x(x)y of t
Tensor3 expand_first_leg(const Tensor2 &t, const Coproduct &outer)
{
  TermBuffer<Triple> out;
  for (const auto &[k, c] : t.terms())
    for (const auto &[p, d] : outer[k[0]].terms())
      out.add(Triple{p[0], p[1], k[1]}, c * d);
  return out.finish();
}

// sum c * x (x) outer(y) over terms c x(x)y of t
Tensor3 expand_second_leg(const Tensor2 &t, const Coproduct &outer)
{
  TermBuffer<Triple> out;
  for (const auto &[k, c] : t.terms())
    for (const auto &[p, d] : outer[k[1]].terms())
      out.add(Triple{k[0], p[0], p[1]}, c * d);
  return out.finish();
}

}  // namespace

LCoalgebra::LCoalgebra(BasisPtr basis, Coproduct right, Coproduct left)
  : basis_(std::move(basis)), right_(std::move(right)), left_(std::move(left))
{
  if (!basis_)
    throw Error(ErrorKind::EmptyBasis, "coalgebra without a basis");
  check_coproduct(right_, basis_->size(), "right");
  check_coproduct(left_, basis_->size(), "left");
}

LCoalgebra markov_from_graph(const WeightedDigraph &g)
{
  const auto report = validate_no_sink_no_source(g);
  if (!report.valid())
  {
    std::string detail = "graph has";
    for (Index v : report.sinks)
      detail += " sink " + g.vertices()[v];
    for (Index v : report.sources)
      detail += " source " + g.vertices()[v];
    throw Error(ErrorKind::InvalidGraph, detail);
  }

  std::vector<BasisLabel> labels;
  for (const auto &v : g.vertices())
    labels.push_back({LabelKind::Vertex, v});
  auto basis = Basis::make(std::move(labels));

  Coproduct right(g.vertex_count());
  Coproduct left(g.vertex_count());
  for (Index v = 0; v < g.vertex_count(); ++v)
  {
    TermBuffer<Pair> r;
    for (std::size_t i : g.out_arcs(v))
      r.add(Pair{v, g.arcs()[i].dst}, g.arcs()[i].weight);
    right[v] = r.finish();

    TermBuffer<Pair> l;
    for (std::size_t i : g.in_arcs(v))
      l.add(Pair{g.arcs()[i].src, v}, g.arcs()[i].weight);
    left[v] = l.finish();
  }
  return LCoalgebra(std::move(basis), std::move(right), std::move(left));
}

bool has_markov_shape(const LCoalgebra &c)
{
  for (Index v = 0; v < c.dim(); ++v)
  {
    for (const auto &[k, coef] : c.right(v).terms())
      if (k[0] != v)
        return false;
    for (const auto &[k, coef] : c.left(v).terms())
      if (k[1] != v)
        return false;
  }
  return true;
}

BreakingCheck check_breaking_equation(const LCoalgebra &c)
{
  for (Index v = 0; v < c.dim(); ++v)
  {
    Tensor3 lhs = expand_first_leg(c.right(v), c.left());
    Tensor3 rhs = expand_second_leg(c.left(v), c.right());
    if (!(lhs == rhs))
      return BreakingCheck{false, v, std::move(lhs), std::move(rhs)};
  }
  return {};
}

BreakingCheck check_coassociativity(const BasisPtr &basis, const Coproduct &delta)
{
  check_coproduct(delta, basis->size(), "input");
  for (Index v = 0; v < delta.size(); ++v)
  {
    Tensor3 lhs = expand_first_leg(delta[v], delta);
    Tensor3 rhs = expand_second_leg(delta[v], delta);
    if (!(lhs == rhs))
      return BreakingCheck{false, v, std::move(lhs), std::move(rhs)};
  }
  return {};
}

CocommutativityReport is_L_cocommutative(const LCoalgebra &c)
{
  CocommutativityReport report;
  for (Index v = 0; v < c.dim(); ++v)
  {
    Tensor2 defect = c.right(v) - flip(c.left(v));
    if (!defect.empty())
      report.defects.emplace_back(v, std::move(defect));
  }
  return report;
}

bool is_degenerate(const LCoalgebra &c)
{
  return c.right() == c.left();
}

bool verify_counit(const LCoalgebra &c, const CounitCandidate &eps)
{
  if (eps.values.size() != c.dim())
    throw Error(ErrorKind::IndexOutOfRange, "counit candidate is not total on the basis");
  const bool right = eps.side == CounitSide::Right;
  for (Index v = 0; v < c.dim(); ++v)
  {
    TermBuffer<Index> image;
    const Tensor2 &t = right ? c.right(v) : c.left(v);
    for (const auto &[k, coef] : t.terms())
    {
      if (right)
        image.add(k[0], coef * eps.values[k[1]]);
      else
        image.add(k[1], coef * eps.values[k[0]]);
    }
    if (!(image.finish() == FreeVector::unit(v)))
      return false;
  }
  return true;
}

WeightedDigraph geometric_support(const LCoalgebra &c)
{
  const Basis &basis = *c.basis();
  std::map<Pair, Scalar> weights;
  auto collect = [&](const Coproduct &cop, const char *which) {
    for (Index v = 0; v < cop.size(); ++v)
      for (const auto &[k, coef] : cop[v].terms())
      {
        auto [it, inserted] = weights.emplace(k, coef);
        if (!inserted && it->second != coef)
          throw Error(ErrorKind::AmbiguousSupport,
                      "arc " + basis.name(k[0]) + " -> " + basis.name(k[1]) + " has weight " +
                          format_scalar(it->second) + " and weight " + format_scalar(coef) +
                          " (in " + which + " " + basis.name(v) + ")");
      }
  };
  collect(c.right(), "delta");
  collect(c.left(), "tilde");

  std::vector<std::string> vertices;
  for (const auto &l : basis.labels())
    vertices.push_back(l.name);
  std::vector<Arc> arcs;
  arcs.reserve(weights.size());
  for (const auto &[k, w] : weights)
    arcs.push_back({k[0], k[1], w});
  return WeightedDigraph(std::move(vertices), std::move(arcs));
}

LCoalgebra markovize(const BasisPtr &basis, const Coproduct &delta)
{
  check_coproduct(delta, basis->size(), "input");
  Coproduct right(delta.size());
  Coproduct left(delta.size());
  for (Index v = 0; v < delta.size(); ++v)
  {
    TermBuffer<Pair> r;
    TermBuffer<Pair> l;
    for (const auto &[k, coef] : delta[v].terms())
    {
      l.add(Pair{k[0], v}, coef);
      r.add(Pair{v, k[1]}, coef);
    }
    right[v] = r.finish();
    left[v] = l.finish();
  }
  return LCoalgebra(basis, std::move(right), std::move(left));
}

CoalgebraText parse_coalgebra(std::string_view text)
{
  struct Line
  {
    bool is_delta;
    std::string label;
    std::vector<RawTerm> terms;
  };
  std::vector<Line> parsed;
  std::vector<std::string> names;
  std::unordered_map<std::string, bool> known;
  bool pinned = false;

  const auto lines = clean_lines(text);
  auto mention = [&](const std::string &name, const std::string &where) {
    if (known.count(name))
      return;
    if (pinned)
      throw Error(ErrorKind::UnknownLabel, where + "label '" + name + "' is not in the basis line");
    known.emplace(name, true);
    names.push_back(name);
  };

  for (std::size_t n = 0; n < lines.size(); ++n)
  {
    const std::string &line = lines[n];
    if (line.empty())
      continue;
    const std::string where = "line " + std::to_string(n + 1) + ": ";
    if (line.rfind("basis:", 0) == 0)
    {
      if (pinned || !parsed.empty())
        throw Error(ErrorKind::SyntaxError, where + "the basis line must come first and only once");
      for (const auto &name : split_whitespace(std::string_view(line).substr(6)))
      {
        if (known.count(name))
          throw Error(ErrorKind::DuplicateLabel, where + "label '" + name + "' listed twice");
        mention(name, where);
      }
      pinned = true;
      continue;
    }
    const auto eq = line.find('=');
    const auto head = split_whitespace(std::string_view(line).substr(0, eq == std::string::npos ? 0 : eq));
    if (eq == std::string::npos || head.size() != 2 || (head[0] != "delta" && head[0] != "tilde"))
      throw Error(ErrorKind::SyntaxError, where + "expected 'delta <label> = ...' or 'tilde <label> = ...'");
    Line entry{head[0] == "delta", head[1], {}};
    try
    {
      entry.terms = parse_formal_sum(std::string_view(line).substr(eq + 1));
    }
    catch (const Error &e)
    {
      throw Error(e.kind(), where + e.detail());
    }
    mention(entry.label, where);
    for (const auto &t : entry.terms)
    {
      if (t.legs.size() != 2)
        throw Error(ErrorKind::SyntaxError, where + "coproduct terms need exactly two legs");
      for (const auto &leg : t.legs)
        mention(leg, where);
    }
    parsed.push_back(std::move(entry));
  }
  if (names.empty())
    throw Error(ErrorKind::SyntaxError, "coalgebra text declares no labels");

  CoalgebraText out;
  out.basis = Basis::from_names(names);
  out.delta.assign(names.size(), Tensor2{});
  out.tilde.assign(names.size(), Tensor2{});
  std::vector<bool> seen_delta(names.size(), false);
  std::vector<bool> seen_tilde(names.size(), false);
  for (const auto &entry : parsed)
  {
    const Index v = out.basis->index_of(entry.label);
    auto &seen = entry.is_delta ? seen_delta : seen_tilde;
    if (seen[v])
      throw Error(ErrorKind::SyntaxError, std::string(entry.is_delta ? "delta " : "tilde ") +
                                              entry.label + " given twice");
    seen[v] = true;
    (entry.is_delta ? out.delta : out.tilde)[v] = resolve_tensor2(entry.terms, *out.basis);
    ++(entry.is_delta ? out.delta_lines : out.tilde_lines);
  }
  return out;
}

std::string format_coalgebra(const LCoalgebra &c)
{
  const Basis &basis = *c.basis();
  std::string out = "basis:";
  for (const auto &l : basis.labels())
    out += " " + l.name;
  out += "\n";
  for (Index v = 0; v < c.dim(); ++v)
    out += "delta " + basis.name(v) + " = " + format_tensor2(c.right(v), basis) + "\n";
  for (Index v = 0; v < c.dim(); ++v)
    out += "tilde " + basis.name(v) + " = " + format_tensor2(c.left(v), basis) + "\n";
  return out;
}

}  // namespace lcoal
