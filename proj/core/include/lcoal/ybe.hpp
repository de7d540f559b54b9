#ifndef LCOAL_YBE_HPP
#define LCOAL_YBE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcoal/linear_endo.hpp"
#include "lcoal/parallel.hpp"
#include "lcoal/tensor.hpp"

namespace lcoal
{

namespace form
{
struct Tau
{
};
// x(x)y -> psi(y) (x) x
struct Hat1
{
  LinearEndo psi;
  LinearEndo psi_inverse;
};
// x(x)y -> y (x) psi(x)
struct Hat2
{
  LinearEndo psi;
  LinearEndo psi_inverse;
};
// c(A, B): x(x)y -> B(y) (x) A(x)
struct Cross
{
  LinearEndo a;
  LinearEndo b;
};
struct Dense
{
};
}  // namespace form

using TwoTensorForm = std::variant<form::Tau, form::Hat1, form::Hat2, form::Cross, form::Dense>;

class TwoTensorEndo;
TwoTensorEndo make_two_tensor(BasisPtr basis, std::vector<Tensor2> action, TwoTensorForm form);

// Endomorphism of W (x) W, stored extensionally as the image of every basis pair (x, y)
// at position x * dim + y. Maps built by tau/hat1/hat2/cross_map also remember the
// factored formula they came from.
class TwoTensorEndo
{
public:
  // Throws IndexOutOfRange unless there are dim^2 images, UnknownLabel on stray indices.
  static TwoTensorEndo dense(BasisPtr basis, std::vector<Tensor2> action);

  const BasisPtr &basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return dim_; }
  const TwoTensorForm &factored() const noexcept { return form_; }

  const Tensor2 &operator()(Index x, Index y) const { return action_[x * dim_ + y]; }
  const std::vector<Tensor2> &action() const noexcept { return action_; }
  Tensor2 apply(const Tensor2 &t) const;

  // Recomputes the factored formula on every basis pair and compares with the stored
  // action. Always true for Dense.
  bool factored_form_agrees() const;

  // Extensional equality; the factored tag is ignored.
  friend bool operator==(const TwoTensorEndo &a, const TwoTensorEndo &b)
  {
    return same_basis(a.basis_, b.basis_) && a.action_ == b.action_;
  }

private:
  friend TwoTensorEndo make_two_tensor(BasisPtr, std::vector<Tensor2>, TwoTensorForm);

  TwoTensorEndo(BasisPtr basis, std::vector<Tensor2> action, TwoTensorForm form);

  BasisPtr basis_;
  std::size_t dim_ = 0;
  std::vector<Tensor2> action_;
  TwoTensorForm form_;
};

TwoTensorEndo tau(BasisPtr basis);

// hat1(psi) = tau (id (x) psi), hat2(psi) = tau (psi (x) id). Throws Singular unless psi is
// an automorphism.
TwoTensorEndo hat1(const LinearEndo &psi);
TwoTensorEndo hat2(const LinearEndo &psi);

// Same, with the inverse supplied (e.g. the explicit phi maps of a companion). Throws
// Singular if `inverse` is not a two-sided inverse of psi.
TwoTensorEndo hat1(const LinearEndo &psi, const LinearEndo &inverse);
TwoTensorEndo hat2(const LinearEndo &psi, const LinearEndo &inverse);

// c(A, B) = tau (A (x) B). Throws BasisMismatch.
TwoTensorEndo cross_map(const LinearEndo &a, const LinearEndo &b);

// (r o s) computed extensionally; the result is Dense. Throws BasisMismatch.
TwoTensorEndo compose(const TwoTensorEndo &r, const TwoTensorEndo &s);

// (R (x) id) and (id (x) R) acting factor-locally on a 3-tensor.
Tensor3 apply_first_pair(const TwoTensorEndo &r, const Tensor3 &t);
Tensor3 apply_last_pair(const TwoTensorEndo &r, const Tensor3 &t);

struct YbeCounterexample
{
  Triple triple{};
  Tensor3 lhs;  // (R (x) id)(id (x) R)(R (x) id) x(x)y(x)z
  Tensor3 rhs;  // (id (x) R)(R (x) id)(id (x) R) x(x)y(x)z
};

struct YbeResult
{
  bool holds = true;
  std::size_t triples_checked = 0;
  // Lexicographically first failing basis triple.
  std::optional<YbeCounterexample> counterexample;
};

// Auto clears denominators and works in 64-bit integers, redoing a triple in rationals
// whenever a value would overflow. Rational always uses rationals. Both are exact.
enum class YbeArithmetic
{
  Auto,
  Rational,
};

// Exhaustive check over all dim^3 basis triples. The verdict and counterexample do not
// depend on the job count or the arithmetic.
YbeResult verify_ybe(const TwoTensorEndo &r, Parallelism par = {},
                     YbeArithmetic arithmetic = YbeArithmetic::Auto);

// AB == BA. Throws BasisMismatch.
bool commutator_is_zero(const LinearEndo &a, const LinearEndo &b);

struct CrossComposition
{
  TwoTensorEndo lhs;  // tau o c(p1, p2) o c(p3, p4)
  TwoTensorEndo rhs;  // c(p2 p3, p1 p4)
  bool equal = false;
};

CrossComposition compose_cross(const LinearEndo &p1, const LinearEndo &p2, const LinearEndo &p3,
                               const LinearEndo &p4);

// Reads psi back off hat1(psi): psi(y) is the first leg of R(x_0, y). nullopt when R is not
// of the form x(x)y -> f(y) (x) x for any linear f.
std::optional<LinearEndo> recover_hat1_automorphism(const TwoTensorEndo &r);

// The same map as a LinearEndo on the product basis "x*y", for matrix export and generic
// inversion, and back.
LinearEndo to_product_endo(const TwoTensorEndo &r);
// Throws SyntaxError unless the basis is a full row-major product basis.
TwoTensorEndo from_product_endo(const LinearEndo &f);

// "row col value" lines over product labels, in column-major term order.
std::string format_sparse(const TwoTensorEndo &r);

}  // namespace lcoal

#endif  // LCOAL_YBE_HPP
