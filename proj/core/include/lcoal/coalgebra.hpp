#ifndef LCOAL_COALGEBRA_HPP
#define LCOAL_COALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcoal/basis.hpp"
#include "lcoal/graph.hpp"
#include "lcoal/tensor.hpp"

namespace lcoal
{

// A coproduct given extensionally: entry i is the image of basis element i in W (x) W.
using Coproduct = std::vector<Tensor2>;

// Vector space with a right coproduct (delta) and a left coproduct (tilde). Neither the
// breaking equation nor the Markov shape is assumed; both are checked on demand.
class LCoalgebra
{
public:
  // Throws IndexOutOfRange if a coproduct is not total on the basis and UnknownLabel if a
  // term leaves the basis.
  LCoalgebra(BasisPtr basis, Coproduct right, Coproduct left);

  const BasisPtr &basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return right_.size(); }
  const Tensor2 &right(Index v) const { return right_.at(v); }
  const Tensor2 &left(Index v) const { return left_.at(v); }
  const Coproduct &right() const noexcept { return right_; }
  const Coproduct &left() const noexcept { return left_; }

  friend bool operator==(const LCoalgebra &a, const LCoalgebra &b)
  {
    return same_basis(a.basis_, b.basis_) && a.right_ == b.right_ && a.left_ == b.left_;
  }

private:
  BasisPtr basis_;
  Coproduct right_;
  Coproduct left_;
};

// delta(v) = sum over out-arcs (v, k, w) of w v(x)k and tilde(v) = sum over in-arcs
// (j, v, w) of w j(x)v, so the left weight of an arc is its source's weight for it.
// Throws InvalidGraph when the graph has a sink or a source.
LCoalgebra markov_from_graph(const WeightedDigraph &g);

// Right terms all have first leg v and left terms all have second leg v.
bool has_markov_shape(const LCoalgebra &c);

struct BreakingCheck
{
  bool holds = true;
  std::optional<Index> label;  // first failing basis label
  Tensor3 lhs;                 // (tilde (x) id) delta at that label
  Tensor3 rhs;                 // (id (x) delta) tilde at that label
};

// (tilde (x) id) delta = (id (x) delta) tilde, checked on every basis label in order.
BreakingCheck check_breaking_equation(const LCoalgebra &c);

// (delta (x) id) delta = (id (x) delta) delta for a single coproduct; used by markovize's
// optional coassociativity requirement. lhs/rhs are filled at the first failing label.
BreakingCheck check_coassociativity(const BasisPtr &basis, const Coproduct &delta);

struct CocommutativityReport
{
  // Every label v with a nonzero (delta - tau tilde) v, in basis order, with that difference.
  std::vector<std::pair<Index, Tensor2>> defects;

  bool cocommutative() const noexcept { return defects.empty(); }
};

CocommutativityReport is_L_cocommutative(const LCoalgebra &c);

// delta == tilde pointwise.
bool is_degenerate(const LCoalgebra &c);

enum class CounitSide
{
  Right,
  Left,
};

struct CounitCandidate
{
  std::vector<Scalar> values;  // one per basis label
  CounitSide side = CounitSide::Right;

  static CounitCandidate constant(std::size_t dim, Scalar value, CounitSide side)
  {
    return CounitCandidate{std::vector<Scalar>(dim, value), side};
  }
};

// Right: (id (x) eps) delta = id. Left: (eps (x) id) tilde = id. Throws IndexOutOfRange if
// the candidate is not total on the basis.
bool verify_counit(const LCoalgebra &c, const CounitCandidate &eps);

// Arcs x -> y for every term lambda x(x)y of either coproduct, weighted by lambda. Throws
// AmbiguousSupport when one pair occurs with two different coefficients.
WeightedDigraph geometric_support(const LCoalgebra &c);

// Per term c x(x)y of delta(v): c x(x)v goes to the new left coproduct of v and c v(x)y
// to the new right one, with like terms merged. The input need not be coassociative.
LCoalgebra markovize(const BasisPtr &basis, const Coproduct &delta);

// Coalgebra file format:
//   # comment
//   basis: a b c d                   optional, pins the basis order
//   delta a = a (x) a + 2*a (x) b
//   tilde a = a (x) a + c (x) a
// Without a basis line the basis is the order of first mention. Labels with no line get
// the zero coproduct.
struct CoalgebraText
{
  BasisPtr basis;
  Coproduct delta;
  Coproduct tilde;
  std::size_t delta_lines = 0;
  std::size_t tilde_lines = 0;
};

// Throws SyntaxError, UnknownLabel (label missing from an explicit basis line).
CoalgebraText parse_coalgebra(std::string_view text);

// basis line, then delta and tilde lines in basis order.
std::string format_coalgebra(const LCoalgebra &c);

}  // namespace lcoal

#endif  // LCOAL_COALGEBRA_HPP
