#include "lcoal/ybe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lcoal/error.hpp"

namespace lcoal
{

namespace
{

Tensor2 factored_image(const TwoTensorForm &form, Index x, Index y)
{
  return std::visit(
      [&](const auto &f) -> Tensor2 {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, form::Tau>)
          return Tensor2::unit(Pair{y, x});
        else if constexpr (std::is_same_v<F, form::Hat1>)
          return tensor_product(f.psi(y), FreeVector::unit(x));
        else if constexpr (std::is_same_v<F, form::Hat2>)
          return tensor_product(FreeVector::unit(y), f.psi(x));
        else if constexpr (std::is_same_v<F, form::Cross>)
          return tensor_product(f.b(y), f.a(x));
        else
          throw Error(ErrorKind::BasisMismatch, "dense maps have no factored formula");
      },
      form);
}

TwoTensorEndo from_form(BasisPtr basis, TwoTensorForm form)
{
  const auto n = static_cast<Index>(basis->size());
  std::vector<Tensor2> action;
  action.reserve(std::size_t(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      action.push_back(factored_image(form, x, y));
  return make_two_tensor(std::move(basis), std::move(action), std::move(form));
}

void lhs_rhs(const TwoTensorEndo &r, const Triple &t, Tensor3 &lhs, Tensor3 &rhs)
{
  const auto [x, y, z] = t;
  {
    TermBuffer<Triple> s;
    for (const auto &[k, c] : r(x, y).terms())
      s.add(Triple{k[0], k[1], z}, c);
    lhs = apply_first_pair(r, apply_last_pair(r, s.finish()));
  }
  {
    TermBuffer<Triple> s;
    for (const auto &[k, c] : r(y, z).terms())
      s.add(Triple{x, k[0], k[1]}, c);
    rhs = apply_last_pair(r, apply_first_pair(r, s.finish()));
  }
}

// R scaled by the least common multiple D of its denominators, as machine integers. Both
// sides of YBE are cubic in R, so D R satisfies it exactly when R does.
using IntImage = std::vector<std::vector<std::pair<Pair, std::int64_t>>>;
using IntTerms = std::vector<std::pair<Triple, std::int64_t>>;

std::optional<IntImage> integer_scaling(const TwoTensorEndo &r)
{
  mpz_class d = 1;
  for (const auto &t : r.action())
    for (const auto &[k, c] : t.terms())
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  IntImage out;
  out.reserve(r.action().size());
  for (const auto &t : r.action())
  {
    auto &img = out.emplace_back();
    img.reserve(t.size());
    for (const auto &[k, c] : t.terms())
    {
      const mpz_class v = c.get_num() * (d / c.get_den());
      if (!v.fits_slong_p())
        return std::nullopt;
      img.emplace_back(k, static_cast<std::int64_t>(v.get_si()));
    }
  }
  return out;
}

// Sorts and merges like terms; false on overflow.
bool canonicalize(IntTerms &t)
{
  std::sort(t.begin(), t.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();)
  {
    const Triple key = t[i].first;
    std::int64_t sum = 0;
    for (; i < t.size() && t[i].first == key; ++i)
      if (__builtin_add_overflow(sum, t[i].second, &sum))
        return false;
    if (sum != 0)
      t[out++] = {key, sum};
  }
  t.resize(out);
  return true;
}

bool apply_int(const IntImage &r, std::size_t n, const IntTerms &in, bool first_pair, IntTerms &out)
{
  out.clear();
  for (const auto &[k, c] : in)
  {
    const auto &img = first_pair ? r[k[0] * n + k[1]] : r[k[1] * n + k[2]];
    for (const auto &[p, d] : img)
    {
      std::int64_t m = 0;
      if (__builtin_mul_overflow(c, d, &m))
        return false;
      out.emplace_back(first_pair ? Triple{p[0], p[1], k[2]} : Triple{k[0], p[0], p[1]}, m);
    }
  }
  return canonicalize(out);
}

// nullopt when an intermediate value leaves the int64 range.
std::optional<bool> int_ybe_holds(const IntImage &r, std::size_t n, const Triple &t)
{
  thread_local IntTerms a, b, c, d;
  const auto [x, y, z] = t;
  a.clear();
  for (const auto &[p, v] : r[x * n + y])
    a.emplace_back(Triple{p[0], p[1], z}, v);
  if (!apply_int(r, n, a, false, b) || !apply_int(r, n, b, true, c))
    return std::nullopt;
  a.clear();
  for (const auto &[p, v] : r[y * n + z])
    a.emplace_back(Triple{x, p[0], p[1]}, v);
  if (!apply_int(r, n, a, true, b) || !apply_int(r, n, b, false, d))
    return std::nullopt;
  return c == d;
}

}  // namespace

TwoTensorEndo make_two_tensor(BasisPtr basis, std::vector<Tensor2> action, TwoTensorForm form)
{
  return TwoTensorEndo(std::move(basis), std::move(action), std::move(form));
}

TwoTensorEndo::TwoTensorEndo(BasisPtr basis, std::vector<Tensor2> action, TwoTensorForm form)
  : basis_(std::move(basis)), action_(std::move(action)), form_(std::move(form))
{
  if (!basis_)
    throw Error(ErrorKind::EmptyBasis, "two-tensor map without a basis");
  dim_ = basis_->size();
  if (action_.size() != dim_ * dim_)
    throw Error(ErrorKind::IndexOutOfRange, "expected " + std::to_string(dim_ * dim_) +
                                                " pair images, got " + std::to_string(action_.size()));
  for (const auto &t : action_)
    for (const auto &[k, c] : t.terms())
      if (k[0] >= dim_ || k[1] >= dim_)
        throw Error(ErrorKind::UnknownLabel, "pair image leaves the basis");
}

TwoTensorEndo TwoTensorEndo::dense(BasisPtr basis, std::vector<Tensor2> action)
{
  return TwoTensorEndo(std::move(basis), std::move(action), form::Dense{});
}

Tensor2 TwoTensorEndo::apply(const Tensor2 &t) const
{
  TermBuffer<Pair> out;
  for (const auto &[k, c] : t.terms())
  {
    if (k[0] >= dim_ || k[1] >= dim_)
      throw Error(ErrorKind::UnknownLabel, "argument leaves the basis");
    for (const auto &[p, d] : (*this)(k[0], k[1]).terms())
      out.add(p, c * d);
  }
  return out.finish();
}

bool TwoTensorEndo::factored_form_agrees() const
{
  if (std::holds_alternative<form::Dense>(form_))
    return true;
  for (Index x = 0; x < dim_; ++x)
    for (Index y = 0; y < dim_; ++y)
      if (!(factored_image(form_, x, y) == (*this)(x, y)))
        return false;
  return true;
}

TwoTensorEndo tau(BasisPtr basis)
{
  return from_form(std::move(basis), form::Tau{});
}

TwoTensorEndo hat1(const LinearEndo &psi)
{
  LinearEndo inverse = invert(psi);
  return from_form(psi.basis(), form::Hat1{psi, std::move(inverse)});
}

TwoTensorEndo hat2(const LinearEndo &psi)
{
  LinearEndo inverse = invert(psi);
  return from_form(psi.basis(), form::Hat2{psi, std::move(inverse)});
}

namespace
{

void require_inverse(const LinearEndo &psi, const LinearEndo &inverse)
{
  require_same_basis(psi.basis(), inverse.basis(), "hat map");
  if (!compose(psi, inverse).is_identity() || !compose(inverse, psi).is_identity())
    throw Error(ErrorKind::Singular, "supplied inverse does not invert the automorphism");
}

}  // namespace

TwoTensorEndo hat1(const LinearEndo &psi, const LinearEndo &inverse)
{
  require_inverse(psi, inverse);
  return from_form(psi.basis(), form::Hat1{psi, inverse});
}

TwoTensorEndo hat2(const LinearEndo &psi, const LinearEndo &inverse)
{
  require_inverse(psi, inverse);
  return from_form(psi.basis(), form::Hat2{psi, inverse});
}

TwoTensorEndo cross_map(const LinearEndo &a, const LinearEndo &b)
{
  require_same_basis(a.basis(), b.basis(), "cross_map");
  return from_form(a.basis(), form::Cross{a, b});
}

TwoTensorEndo compose(const TwoTensorEndo &r, const TwoTensorEndo &s)
{
  require_same_basis(r.basis(), s.basis(), "compose");
  std::vector<Tensor2> action;
  action.reserve(s.action().size());
  for (const auto &t : s.action())
    action.push_back(r.apply(t));
  return TwoTensorEndo::dense(r.basis(), std::move(action));
}

Tensor3 apply_first_pair(const TwoTensorEndo &r, const Tensor3 &t)
{
  TermBuffer<Triple> out;
  for (const auto &[k, c] : t.terms())
    for (const auto &[p, d] : r(k[0], k[1]).terms())
      out.add(Triple{p[0], p[1], k[2]}, c * d);
  return out.finish();
}

Tensor3 apply_last_pair(const TwoTensorEndo &r, const Tensor3 &t)
{
  TermBuffer<Triple> out;
  for (const auto &[k, c] : t.terms())
    for (const auto &[p, d] : r(k[1], k[2]).terms())
      out.add(Triple{k[0], p[0], p[1]}, c * d);
  return out.finish();
}

YbeResult verify_ybe(const TwoTensorEndo &r, Parallelism par, YbeArithmetic arithmetic)
{
  const std::size_t n = r.dim();
  const std::size_t count = n * n * n;
  auto triple_at = [n](std::size_t i) {
    return Triple{static_cast<Index>(i / (n * n)), static_cast<Index>((i / n) % n),
                  static_cast<Index>(i % n)};
  };
  const std::optional<IntImage> scaled =
      arithmetic == YbeArithmetic::Auto ? integer_scaling(r) : std::nullopt;
  const auto failure = first_failure(count, par, [&](std::size_t i) {
    const Triple t = triple_at(i);
    if (scaled)
      if (const auto holds = int_ybe_holds(*scaled, n, t))
        return *holds;
    Tensor3 lhs, rhs;
    lhs_rhs(r, t, lhs, rhs);
    return lhs == rhs;
  });

  YbeResult result;
  if (!failure)
  {
    result.triples_checked = count;
    return result;
  }
  result.holds = false;
  result.triples_checked = *failure + 1;
  YbeCounterexample cex;
  cex.triple = triple_at(*failure);
  lhs_rhs(r, cex.triple, cex.lhs, cex.rhs);
  result.counterexample = std::move(cex);
  return result;
}

bool commutator_is_zero(const LinearEndo &a, const LinearEndo &b)
{
  require_same_basis(a.basis(), b.basis(), "commutator");
  return compose(a, b) == compose(b, a);
}

CrossComposition compose_cross(const LinearEndo &p1, const LinearEndo &p2, const LinearEndo &p3,
                               const LinearEndo &p4)
{
  require_same_basis(p1.basis(), p2.basis(), "compose_cross");
  require_same_basis(p1.basis(), p3.basis(), "compose_cross");
  require_same_basis(p1.basis(), p4.basis(), "compose_cross");
  TwoTensorEndo lhs = compose(tau(p1.basis()), compose(cross_map(p1, p2), cross_map(p3, p4)));
  TwoTensorEndo rhs = cross_map(compose(p2, p3), compose(p1, p4));
  const bool equal = lhs == rhs;
  return CrossComposition{std::move(lhs), std::move(rhs), equal};
}

std::optional<LinearEndo> recover_hat1_automorphism(const TwoTensorEndo &r)
{
  const auto n = static_cast<Index>(r.dim());
  std::vector<FreeVector> cols(n);
  for (Index y = 0; y < n; ++y)
  {
    TermBuffer<Index> col;
    for (const auto &[k, c] : r(0, y).terms())
    {
      if (k[1] != 0)
        return std::nullopt;
      col.add(k[0], c);
    }
    cols[y] = col.finish();
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (!(r(x, y) == tensor_product(cols[y], FreeVector::unit(x))))
        return std::nullopt;
  return LinearEndo(r.basis(), std::move(cols));
}

LinearEndo to_product_endo(const TwoTensorEndo &r)
{
  const auto n = static_cast<Index>(r.dim());
  std::vector<FreeVector> cols;
  cols.reserve(r.action().size());
  for (const auto &t : r.action())
  {
    TermBuffer<Index> col;
    for (const auto &[k, c] : t.terms())
      col.add(k[0] * n + k[1], c);
    cols.push_back(col.finish());
  }
  return LinearEndo(Basis::product_of(*r.basis()), std::move(cols));
}

TwoTensorEndo from_product_endo(const LinearEndo &f)
{
  const Basis &product = *f.basis();
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(product.size()))));
  if (n * n != product.size())
    throw Error(ErrorKind::SyntaxError, "product basis size is not a square");

  auto split = [&](Index i) {
    const std::string &name = product.name(i);
    const auto star = name.find('*');
    if (star == std::string::npos || name.find('*', star + 1) != std::string::npos)
      throw Error(ErrorKind::SyntaxError, "product label '" + name + "' is not of the form x*y");
    return std::pair{name.substr(0, star), name.substr(star + 1)};
  };
  std::vector<std::string> names;
  for (Index j = 0; j < n; ++j)
    names.push_back(split(j).second);
  BasisPtr basis = Basis::from_names(names);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (split(static_cast<Index>(i * n + j)) != std::pair{names[i], names[j]})
        throw Error(ErrorKind::SyntaxError,
                    "product basis is not in row-major order at '" + product.name(i * n + j) + "'");

  std::vector<Tensor2> action;
  action.reserve(f.dim());
  for (const auto &col : f.columns())
  {
    TermBuffer<Pair> t;
    for (const auto &[k, c] : col.terms())
      t.add(Pair{static_cast<Index>(k / n), static_cast<Index>(k % n)}, c);
    action.push_back(t.finish());
  }
  return TwoTensorEndo::dense(std::move(basis), std::move(action));
}

std::string format_sparse(const TwoTensorEndo &r)
{
  const Basis &b = *r.basis();
  const auto n = static_cast<Index>(r.dim());
  std::string out;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (const auto &[k, c] : r(x, y).terms())
        out += b.name(k[0]) + "*" + b.name(k[1]) + " " + b.name(x) + "*" + b.name(y) + " " +
               format_scalar(c) + "\n";
  return out;
}

}  // namespace lcoal
