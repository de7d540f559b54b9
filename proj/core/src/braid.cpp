#include "lcoal/braid.hpp"

#include <cctype>
#include <random>

#include "lcoal/error.hpp"
#include "lcoal/text_format.hpp"

namespace lcoal
{

BraidWord parse_braid_word(std::string_view text, unsigned strands)
{
  if (strands < 2)
    throw Error(ErrorKind::IndexOutOfRange, "braids need at least 2 strands");
  BraidWord w{strands, {}};
  for (const auto &tok : split_whitespace(text))
  {
    std::string_view body = tok;
    int sign = 1;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1")
    {
      sign = -1;
      body.remove_suffix(3);
    }
    if (body.size() < 2 || body.front() != 's')
      throw Error(ErrorKind::SyntaxError, "expected 's<k>' or 's<k>^-1', got '" + tok + "'");
    body.remove_prefix(1);
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::SyntaxError, "expected 's<k>' or 's<k>^-1', got '" + tok + "'");
    if (body.size() > 9)
      throw Error(ErrorKind::IndexOutOfRange, "generator index in '" + tok + "' is too large");
    const auto k = static_cast<unsigned>(std::stoul(std::string(body)));
    if (k == 0 || k >= strands)
      throw Error(ErrorKind::IndexOutOfRange, "generator '" + tok + "' needs 1 <= k <= " +
                                                  std::to_string(strands - 1));
    w.letters.push_back({k, sign});
  }
  return w;
}

std::string format_braid_word(const BraidWord &w)
{
  std::string out;
  for (const auto &l : w.letters)
  {
    if (!out.empty())
      out += " ";
    out += "s" + std::to_string(l.index) + (l.sign < 0 ? "^-1" : "");
  }
  return out;
}

BraidWord formal_inverse(const BraidWord &w)
{
  BraidWord inv{w.strands, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    inv.letters.push_back({it->index, -it->sign});
  return inv;
}

BraidWord concatenate(const BraidWord &a, const BraidWord &b)
{
  if (a.strands != b.strands)
    throw Error(ErrorKind::ArityMismatch, "braid words on different numbers of strands");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

TwoTensorEndo invert_two_tensor_generic(const TwoTensorEndo &r)
{
  const LinearEndo inverse = invert(to_product_endo(r));
  const auto n = static_cast<Index>(r.dim());
  std::vector<Tensor2> action;
  action.reserve(inverse.dim());
  for (const auto &col : inverse.columns())
  {
    TermBuffer<Pair> t;
    for (const auto &[k, c] : col.terms())
      t.add(Pair{k / n, k % n}, c);
    action.push_back(t.finish());
  }
  return TwoTensorEndo::dense(r.basis(), std::move(action));
}

TwoTensorEndo invert_two_tensor(const TwoTensorEndo &r)
{
  return std::visit(
      [&](const auto &f) -> TwoTensorEndo {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, form::Tau>)
          return tau(r.basis());
        else if constexpr (std::is_same_v<F, form::Hat1>)
          return hat2(f.psi_inverse, f.psi);
        else if constexpr (std::is_same_v<F, form::Hat2>)
          return hat1(f.psi_inverse, f.psi);
        else if constexpr (std::is_same_v<F, form::Cross>)
          return cross_map(invert(f.b), invert(f.a));
        else
          return invert_two_tensor_generic(r);
      },
      r.factored());
}

BraidRepresentation BraidRepresentation::from_r_matrix(TwoTensorEndo r, Parallelism par)
{
  const YbeResult check = verify_ybe(r, par);
  if (!check.holds)
  {
    const Basis &b = *r.basis();
    const Triple &t = check.counterexample->triple;
    throw Error(ErrorKind::NotYbeSolution, "Yang-Baxter equation fails at " + b.name(t[0]) +
                                               " (x) " + b.name(t[1]) + " (x) " + b.name(t[2]));
  }
  return unchecked(std::move(r));
}

BraidRepresentation BraidRepresentation::unchecked(TwoTensorEndo r)
{
  TwoTensorEndo inverse = invert_two_tensor(r);
  return BraidRepresentation(std::move(r), std::move(inverse));
}

TensorN apply_generator(const BraidRepresentation &rep, unsigned index, int sign,
                        const TensorN &state)
{
  if (state.empty())
    return state;
  const std::size_t n = arity(state);
  if (index == 0)
    throw Error(ErrorKind::IndexOutOfRange, "generators are numbered from 1");
  if (n < 2 || index + 1 > n)
    throw Error(ErrorKind::ArityMismatch, "generator s" + std::to_string(index) +
                                              " does not act on a " + std::to_string(n) +
                                              "-fold tensor");
  const TwoTensorEndo &r = sign < 0 ? rep.r_inverse() : rep.r();
  const std::size_t i = index - 1;
  TermBuffer<Word> out;
  for (const auto &[key, c] : state.terms())
  {
    for (const auto &[p, d] : r(key[i], key[i + 1]).terms())
    {
      Word k = key;
      k[i] = p[0];
      k[i + 1] = p[1];
      out.add(std::move(k), c * d);
    }
  }
  return out.finish();
}

TensorN evaluate_word(const BraidRepresentation &rep, const BraidWord &w, const TensorN &state)
{
  if (!state.empty() && arity(state) != w.strands)
    throw Error(ErrorKind::ArityMismatch, "state has " + std::to_string(arity(state)) +
                                              " legs but the word acts on " +
                                              std::to_string(w.strands) + " strands");
  TensorN current = state;
  for (const auto &l : w.letters)
    current = apply_generator(rep, l.index, l.sign, current);
  return current;
}

namespace
{

struct Relation
{
  BraidWord lhs;
  BraidWord rhs;
  std::string text;
};

std::vector<Relation> relations_for(unsigned n)
{
  std::vector<Relation> out;
  auto word = [n](std::initializer_list<BraidLetter> letters) { return BraidWord{n, letters}; };
  auto add = [&](BraidWord l, BraidWord r) {
    std::string text = format_braid_word(l) + " = " + (r.letters.empty() ? "id" : format_braid_word(r));
    out.push_back({std::move(l), std::move(r), std::move(text)});
  };
  for (unsigned i = 1; i + 1 < n; ++i)
    add(word({{i, 1}, {i + 1, 1}, {i, 1}}), word({{i + 1, 1}, {i, 1}, {i + 1, 1}}));
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = i + 2; j < n; ++j)
      add(word({{i, 1}, {j, 1}}), word({{j, 1}, {i, 1}}));
  for (unsigned i = 1; i < n; ++i)
  {
    add(word({{i, 1}, {i, -1}}), word({}));
    add(word({{i, -1}, {i, 1}}), word({}));
  }
  return out;
}

}  // namespace

BraidReport verify_braid_relations(const BraidRepresentation &rep, unsigned strands,
                                   const BraidCheckOptions &options)
{
  if (strands < 2)
    throw Error(ErrorKind::IndexOutOfRange, "braids need at least 2 strands");
  const std::size_t dim = rep.r().dim();

  // dim^n, saturating just above the cap
  std::size_t total = 1;
  bool over_cap = false;
  for (unsigned k = 0; k < strands && !over_cap; ++k)
  {
    total *= dim;
    over_cap = total > options.exhaustive_cap;
  }

  BraidReport report;
  report.strands = strands;
  report.seed = options.seed;
  report.sampled = over_cap;

  std::vector<Word> samples;
  if (over_cap)
  {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(dim - 1));
    samples.resize(options.samples, Word(strands));
    for (auto &w : samples)
      for (auto &x : w)
        x = pick(rng);
  }
  const std::size_t count = over_cap ? samples.size() : total;
  report.tensors_checked = count;

  auto basis_tensor = [&](std::size_t i) {
    if (over_cap)
      return samples[i];
    Word w(strands);
    for (std::size_t k = strands; k-- > 0;)
    {
      w[k] = static_cast<Index>(i % dim);
      i /= dim;
    }
    return w;
  };

  const Basis &basis = *rep.basis();
  for (const auto &rel : relations_for(strands))
  {
    const auto failure = first_failure(count, options.par, [&](std::size_t i) {
      const TensorN state = TensorN::unit(basis_tensor(i));
      return evaluate_word(rep, rel.lhs, state) == evaluate_word(rep, rel.rhs, state);
    });
    if (failure)
    {
      report.holds = false;
      report.lines.push_back(rel.text + ": FAIL at " +
                             format_tensorn(TensorN::unit(basis_tensor(*failure)), basis));
    }
    else
    {
      report.lines.push_back(rel.text + ": ok");
    }
  }
  return report;
}

TwoTensorEndo companion_r_matrix(const CompanionCoalgebra &c, Side side, int hat)
{
  const LinearEndo &psi = side == Side::Left ? c.psi_left() : c.psi_right();
  const LinearEndo &phi = side == Side::Left ? c.phi_left() : c.phi_right();
  if (hat == 1)
    return hat1(psi, phi);
  if (hat == 2)
    return hat2(psi, phi);
  throw Error(ErrorKind::IndexOutOfRange, "hat must be 1 or 2");
}

TwoRepresentations two_representations(const WeightedDigraph &g, Parallelism par)
{
  CompanionCoalgebra companion = build_companion(markov_from_graph(g));
  auto left = BraidRepresentation::from_r_matrix(companion_r_matrix(companion, Side::Left, 1), par);
  auto right = BraidRepresentation::from_r_matrix(companion_r_matrix(companion, Side::Right, 1), par);
  const bool distinct = !(companion.psi_left() == companion.psi_right());
  return TwoRepresentations{std::move(companion), std::move(left), std::move(right), distinct};
}

}  // namespace lcoal
