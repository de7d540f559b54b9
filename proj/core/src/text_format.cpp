#include "lcoal/text_format.hpp"

#include <cctype>
#include <sstream>

#include "lcoal/error.hpp"

namespace lcoal
{

namespace
{

constexpr std::string_view tensor_separator = "(x)";

bool starts_numeric(std::string_view s)
{
  return !s.empty() && std::isdigit(static_cast<unsigned char>(s.front()));
}

std::string trim(std::string_view s)
{
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

// "2*a", "1/2*a*b" or "a" -> coefficient and label; `sign` is folded in.
std::pair<Scalar, std::string> split_coefficient(std::string_view token, int sign)
{
  Scalar coef = sign;
  if (starts_numeric(token))
  {
    const auto star = token.find('*');
    if (star == std::string_view::npos)
      throw Error(ErrorKind::SyntaxError, "coefficient '" + std::string(token) + "' without a label");
    coef *= parse_scalar(token.substr(0, star));
    token.remove_prefix(star + 1);
  }
  if (token.empty() || starts_numeric(token) || token == "+" || token == "-" ||
      token == tensor_separator)
    throw Error(ErrorKind::SyntaxError, "expected a label, got '" + std::string(token) + "'");
  return {coef, std::string(token)};
}

std::string coefficient_prefix(const Scalar &c, bool first)
{
  std::string out;
  const bool negative = sgn(c) < 0;
  if (first)
    out = negative ? "-" : "";
  else
    out = negative ? " - " : " + ";
  const Scalar mag = abs(c);
  if (mag != 1)
    out += format_scalar(mag) + "*";
  return out;
}

template <class Key, class LegWriter>
std::string format_sum(const Tensor<Key> &t, LegWriter &&legs)
{
  if (t.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[key, c] : t.terms())
  {
    out += coefficient_prefix(c, first);
    out += legs(key);
    first = false;
  }
  return out;
}

std::string join_legs(const Basis &basis, const Index *begin, const Index *end)
{
  std::string out;
  for (const Index *it = begin; it != end; ++it)
  {
    if (it != begin)
      out += " (x) ";
    out += basis.name(*it);
  }
  return out;
}

}  // namespace

bool is_identifier(std::string_view text)
{
  if (text.empty())
    return false;
  const auto head = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(head) || head == '_'))
    return false;
  for (char ch : text)
  {
    const auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_'))
      return false;
  }
  return true;
}

std::vector<std::string> split_whitespace(std::string_view text)
{
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

std::vector<std::string> clean_lines(std::string_view text)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size())
  {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    out.push_back(trim(line));
    start = end + 1;
  }
  return out;
}

std::vector<RawTerm> parse_formal_sum(std::string_view text)
{
  const auto tokens = split_whitespace(text);
  if (tokens.empty())
    throw Error(ErrorKind::SyntaxError, "empty expression");
  if (tokens.size() == 1 && tokens.front() == "0")
    return {};

  std::vector<RawTerm> terms;
  std::size_t pos = 0;
  bool expect_term = true;
  int sign = 1;
  while (pos < tokens.size())
  {
    const std::string &tok = tokens[pos];
    if (!expect_term)
    {
      if (tok != "+" && tok != "-")
        throw Error(ErrorKind::SyntaxError, "expected '+' or '-' before '" + tok + "'");
      sign = tok == "-" ? -1 : 1;
      expect_term = true;
      ++pos;
      continue;
    }
    if (tok == "-" && terms.empty() && sign == 1 && pos == 0)
    {
      sign = -1;
      ++pos;
      continue;
    }
    std::string_view first = tok;
    int term_sign = sign;
    if (first.size() > 1 && first.front() == '-')
    {
      term_sign = -term_sign;
      first.remove_prefix(1);
    }
    auto [coef, leg] = split_coefficient(first, term_sign);
    RawTerm term{coef, {leg}};
    ++pos;
    while (pos + 1 < tokens.size() && tokens[pos] == tensor_separator)
    {
      const std::string &next = tokens[pos + 1];
      if (next == "+" || next == "-" || next == tensor_separator || starts_numeric(next))
        throw Error(ErrorKind::SyntaxError, "expected a label after '(x)', got '" + next + "'");
      term.legs.push_back(next);
      pos += 2;
    }
    if (pos < tokens.size() && tokens[pos] == tensor_separator)
      throw Error(ErrorKind::SyntaxError, "dangling '(x)'");
    terms.push_back(std::move(term));
    expect_term = false;
    sign = 1;
  }
  if (expect_term)
    throw Error(ErrorKind::SyntaxError, "expression ends with an operator");
  return terms;
}

namespace
{

void require_legs(const RawTerm &t, std::size_t n)
{
  if (t.legs.size() != n)
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " tensor legs, got " +
                                              std::to_string(t.legs.size()));
}

}  // namespace

FreeVector resolve_vector(const std::vector<RawTerm> &terms, const Basis &basis)
{
  TermBuffer<Index> out;
  for (const auto &t : terms)
  {
    require_legs(t, 1);
    out.add(basis.index_of(t.legs[0]), t.coefficient);
  }
  return out.finish();
}

Tensor2 resolve_tensor2(const std::vector<RawTerm> &terms, const Basis &basis)
{
  TermBuffer<Pair> out;
  for (const auto &t : terms)
  {
    require_legs(t, 2);
    out.add(Pair{basis.index_of(t.legs[0]), basis.index_of(t.legs[1])}, t.coefficient);
  }
  return out.finish();
}

TensorN resolve_tensorn(const std::vector<RawTerm> &terms, const Basis &basis)
{
  TermBuffer<Word> out;
  const std::size_t n = terms.empty() ? 0 : terms.front().legs.size();
  for (const auto &t : terms)
  {
    require_legs(t, n);
    Word key;
    key.reserve(n);
    for (const auto &leg : t.legs)
      key.push_back(basis.index_of(leg));
    out.add(std::move(key), t.coefficient);
  }
  return out.finish();
}

std::string format_vector(const FreeVector &v, const Basis &basis)
{
  return format_sum(v, [&](Index i) { return basis.name(i); });
}

std::string format_tensor2(const Tensor2 &t, const Basis &basis)
{
  return format_sum(t, [&](const Pair &k) { return join_legs(basis, k.data(), k.data() + 2); });
}

std::string format_tensor3(const Tensor3 &t, const Basis &basis)
{
  return format_sum(t, [&](const Triple &k) { return join_legs(basis, k.data(), k.data() + 3); });
}

std::string format_tensorn(const TensorN &t, const Basis &basis)
{
  return format_sum(t, [&](const Word &k) { return join_legs(basis, k.data(), k.data() + k.size()); });
}

std::string format_matrix(const LinearEndo &f)
{
  const Basis &basis = *f.basis();
  std::string out = "basis:";
  for (const auto &l : basis.labels())
    out += " " + l.name;
  out += "\n";
  for (Index i = 0; i < f.dim(); ++i)
    out += "col " + basis.name(i) + " = " + format_vector(f.column(i), basis) + "\n";
  return out;
}

LinearEndo parse_matrix(std::string_view text)
{
  const auto lines = clean_lines(text);
  BasisPtr basis;
  std::vector<FreeVector> cols;
  std::vector<bool> seen;
  for (std::size_t n = 0; n < lines.size(); ++n)
  {
    const std::string &line = lines[n];
    if (line.empty())
      continue;
    const std::string where = "line " + std::to_string(n + 1) + ": ";
    if (!basis)
    {
      if (line.rfind("basis:", 0) != 0)
        throw Error(ErrorKind::SyntaxError, where + "expected 'basis:' header");
      auto names = split_whitespace(std::string_view(line).substr(6));
      basis = Basis::from_names(names);
      cols.assign(basis->size(), FreeVector{});
      seen.assign(basis->size(), false);
      continue;
    }
    const auto eq = line.find('=');
    if (line.rfind("col ", 0) != 0 || eq == std::string::npos)
      throw Error(ErrorKind::SyntaxError, where + "expected 'col <label> = <sum>'");
    const std::string label = trim(std::string_view(line).substr(4, eq - 4));
    const Index i = basis->index_of(label);
    if (seen[i])
      throw Error(ErrorKind::SyntaxError, where + "column '" + label + "' given twice");
    seen[i] = true;
    try
    {
      cols[i] = resolve_vector(parse_formal_sum(std::string_view(line).substr(eq + 1)), *basis);
    }
    catch (const Error &e)
    {
      throw Error(e.kind(), where + e.detail());
    }
  }
  if (!basis)
    throw Error(ErrorKind::SyntaxError, "missing 'basis:' header");
  return LinearEndo(std::move(basis), std::move(cols));
}

}  // namespace lcoal
