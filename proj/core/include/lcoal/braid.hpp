#ifndef LCOAL_BRAID_HPP
#define LCOAL_BRAID_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcoal/companion.hpp"
#include "lcoal/graph.hpp"
#include "lcoal/parallel.hpp"
#include "lcoal/ybe.hpp"

namespace lcoal
{

struct BraidLetter
{
  unsigned index = 1;  // generator s_index, 1 <= index <= strands - 1
  int sign = 1;        // +1 or -1

  friend bool operator==(const BraidLetter &, const BraidLetter &) = default;
};

struct BraidWord
{
  unsigned strands = 2;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord &, const BraidWord &) = default;
};

// Whitespace-separated tokens "s<k>" and "s<k>^-1". Throws SyntaxError, and
// IndexOutOfRange when k is 0 or k >= strands (or strands < 2).
BraidWord parse_braid_word(std::string_view text, unsigned strands);
std::string format_braid_word(const BraidWord &w);

// w followed by this word acts as the identity.
BraidWord formal_inverse(const BraidWord &w);
BraidWord concatenate(const BraidWord &a, const BraidWord &b);

// Inverse of an R-matrix. Factored forms use closed forms:
//   tau^-1 = tau, hat1(psi)^-1 = hat2(psi^-1), hat2(psi)^-1 = hat1(psi^-1),
//   c(A, B)^-1 = c(B^-1, A^-1)
// and Dense maps fall back to elimination on the product basis. Throws Singular.
TwoTensorEndo invert_two_tensor(const TwoTensorEndo &r);

// Same, always through generic elimination; kept for cross-checking the closed forms.
TwoTensorEndo invert_two_tensor_generic(const TwoTensorEndo &r);

// s_i acts on W^(x)n as id^(i-1) (x) R (x) id^(n-i-1); s_i^-1 uses R^-1.
class BraidRepresentation
{
public:
  // Verifies YBE first; throws NotYbeSolution with the failing triple otherwise, and
  // Singular if R is not invertible.
  static BraidRepresentation from_r_matrix(TwoTensorEndo r, Parallelism par = {});

  // Skips the YBE check. Meant for negative controls: relations may then fail.
  static BraidRepresentation unchecked(TwoTensorEndo r);

  const TwoTensorEndo &r() const noexcept { return r_; }
  const TwoTensorEndo &r_inverse() const noexcept { return r_inv_; }
  const BasisPtr &basis() const noexcept { return r_.basis(); }

private:
  BraidRepresentation(TwoTensorEndo r, TwoTensorEndo r_inv)
    : r_(std::move(r)), r_inv_(std::move(r_inv))
  {
  }

  TwoTensorEndo r_;
  TwoTensorEndo r_inv_;
};

// Applies the generator to factors (index, index + 1) of every term. Throws ArityMismatch
// when the state's arity is below 2 or index + 1 exceeds it.
TensorN apply_generator(const BraidRepresentation &rep, unsigned index, int sign,
                        const TensorN &state);

// Leftmost letter acts first. Throws ArityMismatch unless the state has w.strands legs
// (the zero state is accepted).
TensorN evaluate_word(const BraidRepresentation &rep, const BraidWord &w, const TensorN &state);

struct BraidCheckOptions
{
  // Relations are checked on every basis n-tensor when dim^n is at most this; otherwise
  // on `samples` seeded random basis tensors.
  std::size_t exhaustive_cap = 100000;
  std::size_t samples = 1000;
  std::uint64_t seed = 1009;
  Parallelism par;
};

struct BraidReport
{
  bool holds = true;
  bool sampled = false;
  unsigned strands = 0;
  std::size_t tensors_checked = 0;
  std::uint64_t seed = 0;
  // One entry per relation instance, e.g. "s1 s2 s1 = s2 s1 s2: ok" or
  // "s1 s3 = s3 s1: FAIL at a (x) b (x) c (x) d".
  std::vector<std::string> lines;
};

// Checks s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}, s_i s_j = s_j s_i for |i - j| >= 2 and
// s_i s_i^-1 = id on basis n-tensors. Throws IndexOutOfRange for n < 2.
BraidReport verify_braid_relations(const BraidRepresentation &rep, unsigned strands,
                                   const BraidCheckOptions &options = {});

struct TwoRepresentations
{
  CompanionCoalgebra companion;
  BraidRepresentation left;   // from hat1(psi_left)
  BraidRepresentation right;  // from hat1(psi_right)
  bool distinct = false;      // psi_left != psi_right
};

// Builds the companion of the graph's Markov L-coalgebra and one representation per side.
// Throws InvalidGraph.
TwoRepresentations two_representations(const WeightedDigraph &g, Parallelism par = {});

// R-matrix hat1/hat2 of psi_left/psi_right of a companion.
TwoTensorEndo companion_r_matrix(const CompanionCoalgebra &c, Side side, int hat);

}  // namespace lcoal

#endif  // LCOAL_BRAID_HPP
