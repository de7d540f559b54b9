#ifndef LCOAL_LINEAR_ENDO_HPP
#define LCOAL_LINEAR_ENDO_HPP

#include <vector>

#include "lcoal/basis.hpp"
#include "lcoal/tensor.hpp"

namespace lcoal
{

// Linear endomorphism of the free vector space on a basis, stored column by column: the
// column at index i is the image of basis element i.
class LinearEndo
{
public:
  // Throws IndexOutOfRange if the column count differs from the basis size and
  // UnknownLabel if a column has support outside the basis.
  LinearEndo(BasisPtr basis, std::vector<FreeVector> columns);

  static LinearEndo identity(BasisPtr basis);

  const BasisPtr &basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return columns_.size(); }
  const FreeVector &column(Index i) const { return columns_.at(i); }
  const std::vector<FreeVector> &columns() const noexcept { return columns_; }

  FreeVector operator()(const FreeVector &v) const;
  FreeVector operator()(Index i) const { return columns_.at(i); }

  bool is_identity() const;

  friend bool operator==(const LinearEndo &a, const LinearEndo &b)
  {
    return same_basis(a.basis_, b.basis_) && a.columns_ == b.columns_;
  }

private:
  BasisPtr basis_;
  std::vector<FreeVector> columns_;
};

// Throws UnknownLabel when v has a term outside f's basis.
FreeVector apply(const LinearEndo &f, const FreeVector &v);

// (f o g)(x) = f(g(x)). Throws BasisMismatch.
LinearEndo compose(const LinearEndo &f, const LinearEndo &g);

// f - g, used for commutators. Throws BasisMismatch.
LinearEndo subtract(const LinearEndo &f, const LinearEndo &g);

// Exact Gauss-Jordan elimination. The pivot in each column is the first row at or below the
// diagonal holding a nonzero entry. Throws Singular.
LinearEndo invert(const LinearEndo &f);

// Dense row-major copy, entry (r, c) = coefficient of basis r in column c.
std::vector<std::vector<Scalar>> to_dense(const LinearEndo &f);
LinearEndo from_dense(BasisPtr basis, const std::vector<std::vector<Scalar>> &rows);

}  // namespace lcoal

#endif  // LCOAL_LINEAR_ENDO_HPP
