#include "lcoal/linear_endo.hpp"

#include <string>

#include "lcoal/error.hpp"

namespace lcoal
{

namespace
{

void check_support(const FreeVector &v, std::size_t dim, const char *what)
{
  if (!v.empty() && v.terms().back().first >= dim)
    throw Error(ErrorKind::UnknownLabel,
                std::string(what) + " has a term outside the basis (index " +
                    std::to_string(v.terms().back().first) + ")");
}

}  // namespace

LinearEndo::LinearEndo(BasisPtr basis, std::vector<FreeVector> columns)
  : basis_(std::move(basis)), columns_(std::move(columns))
{
  if (!basis_)
    throw Error(ErrorKind::EmptyBasis, "linear map without a basis");
  if (columns_.size() != basis_->size())
    throw Error(ErrorKind::IndexOutOfRange, "expected " + std::to_string(basis_->size()) +
                                                " columns, got " + std::to_string(columns_.size()));
  for (const auto &c : columns_)
    check_support(c, columns_.size(), "column");
}

LinearEndo LinearEndo::identity(BasisPtr basis)
{
  std::vector<FreeVector> cols;
  cols.reserve(basis->size());
  for (Index i = 0; i < basis->size(); ++i)
    cols.push_back(FreeVector::unit(i));
  return LinearEndo(std::move(basis), std::move(cols));
}

FreeVector LinearEndo::operator()(const FreeVector &v) const
{
  check_support(v, columns_.size(), "argument");
  TermBuffer<Index> out;
  for (const auto &[i, c] : v.terms())
    for (const auto &[j, d] : columns_[i].terms())
      out.add(j, c * d);
  return out.finish();
}

bool LinearEndo::is_identity() const
{
  for (Index i = 0; i < columns_.size(); ++i)
    if (!(columns_[i] == FreeVector::unit(i)))
      return false;
  return true;
}

FreeVector apply(const LinearEndo &f, const FreeVector &v)
{
  return f(v);
}

LinearEndo compose(const LinearEndo &f, const LinearEndo &g)
{
  require_same_basis(f.basis(), g.basis(), "compose");
  std::vector<FreeVector> cols;
  cols.reserve(g.dim());
  for (const auto &c : g.columns())
    cols.push_back(f(c));
  return LinearEndo(f.basis(), std::move(cols));
}

LinearEndo subtract(const LinearEndo &f, const LinearEndo &g)
{
  require_same_basis(f.basis(), g.basis(), "subtract");
  std::vector<FreeVector> cols;
  cols.reserve(f.dim());
  for (Index i = 0; i < f.dim(); ++i)
    cols.push_back(f.column(i) - g.column(i));
  return LinearEndo(f.basis(), std::move(cols));
}

std::vector<std::vector<Scalar>> to_dense(const LinearEndo &f)
{
  const std::size_t n = f.dim();
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
  for (Index c = 0; c < n; ++c)
    for (const auto &[r, v] : f.column(c).terms())
      rows[r][c] = v;
  return rows;
}

LinearEndo from_dense(BasisPtr basis, const std::vector<std::vector<Scalar>> &rows)
{
  const std::size_t n = basis->size();
  if (rows.size() != n)
    throw Error(ErrorKind::IndexOutOfRange, "dense matrix has the wrong number of rows");
  std::vector<TermBuffer<Index>> cols(n);
  for (Index r = 0; r < n; ++r)
  {
    if (rows[r].size() != n)
      throw Error(ErrorKind::IndexOutOfRange, "dense matrix row has the wrong length");
    for (Index c = 0; c < n; ++c)
      cols[c].add(r, rows[r][c]);
  }
  std::vector<FreeVector> out;
  out.reserve(n);
  for (auto &c : cols)
    out.push_back(c.finish());
  return LinearEndo(std::move(basis), std::move(out));
}

LinearEndo invert(const LinearEndo &f)
{
  const std::size_t n = f.dim();
  auto a = to_dense(f);
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col)
  {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a[pivot][col]))
      ++pivot;
    if (pivot == n)
      throw Error(ErrorKind::Singular, "map is not invertible (rank deficient at column " +
                                           std::to_string(col) + ")");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);

    const Scalar scale = 1 / a[col][col];
    for (std::size_t c = 0; c < n; ++c)
    {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r)
    {
      if (r == col || is_zero(a[r][col]))
        continue;
      const Scalar factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c)
      {
        if (!is_zero(a[col][c]))
          a[r][c] -= factor * a[col][c];
        if (!is_zero(inv[col][c]))
          inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return from_dense(f.basis(), inv);
}

}  // namespace lcoal
