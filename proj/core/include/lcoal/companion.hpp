#ifndef LCOAL_COMPANION_HPP
#define LCOAL_COMPANION_HPP

#include <string>
#include <vector>

#include "lcoal/coalgebra.hpp"
#include "lcoal/linear_endo.hpp"

namespace lcoal
{

// Which coproduct an automorphism is read from: Left uses the tilde (in-neighbour)
// weights, Right the delta (out-neighbour) weights.
enum class Side
{
  Left,
  Right,
};

// The four explicit automorphisms of the doubled space. "left" maps are built from the
// weighted in-neighbourhoods (the tilde weights), "right" maps from the out-neighbourhoods.
struct CompanionMaps
{
  LinearEndo psi_left;
  LinearEndo phi_left;
  LinearEndo psi_right;
  LinearEndo phi_right;
};

// Companion G_* = G (+) H of a Markov L-coalgebra G over the basis
// v_1 .. v_n h_1 .. h_n, where h_i is named h_<v_i>:
//
//   tilde_* v_i = tilde v_i + h_i (x) v_i      tilde_* h_i = v_i (x) h_i - h_i (x) h_i
//   delta_* v_i = delta v_i + v_i (x) h_i      delta_* h_i = h_i (x) v_i - h_i (x) h_i
//
// With W_i the weighted in-neighbour sum of v_i (the first legs of tilde v_i):
//
//   psi_left:  v_i -> W_i + h_i               h_i -> W_i + h_i + v_i
//   phi_left:  v_i -> h_i - v_i               h_i -> sum_k w_k (v_k - h_k) + v_i
//
// and psi_right/phi_right use the out-neighbour sums (second legs of delta v_i) instead.
class CompanionCoalgebra
{
public:
  const LCoalgebra &base() const noexcept { return base_; }
  const LCoalgebra &full() const noexcept { return full_; }
  const CompanionMaps &maps() const noexcept { return maps_; }
  const LinearEndo &psi_left() const noexcept { return maps_.psi_left; }
  const LinearEndo &phi_left() const noexcept { return maps_.phi_left; }
  const LinearEndo &psi_right() const noexcept { return maps_.psi_right; }
  const LinearEndo &phi_right() const noexcept { return maps_.phi_right; }

  std::size_t base_dim() const noexcept { return base_.dim(); }
  Index vertex(Index i) const noexcept { return i; }
  Index shadow(Index i) const noexcept { return static_cast<Index>(base_.dim()) + i; }

private:
  friend CompanionCoalgebra build_companion(const LCoalgebra &);

  CompanionCoalgebra(LCoalgebra base, LCoalgebra full, CompanionMaps maps)
    : base_(std::move(base)), full_(std::move(full)), maps_(std::move(maps))
  {
  }

  LCoalgebra base_;
  LCoalgebra full_;
  CompanionMaps maps_;
};

// Throws NotMarkov when `base` lacks Markov shape or already contains Shadow labels, and
// ShadowNameClash when a vertex is already called h_<other vertex>.
CompanionCoalgebra build_companion(const LCoalgebra &base);

struct FactorizationReport
{
  // One line per failing identity, e.g. "tilde_* h_a != -phi_left(a) (x) h_a".
  std::vector<std::string> failures;

  bool holds() const noexcept { return failures.empty(); }
};

// Checks on every i:
//   tilde_* v_i = psi_left(v_i) (x) v_i        tilde_* h_i = -phi_left(v_i) (x) h_i
//   delta_* v_i = v_i (x) psi_right(v_i)       delta_* h_i = h_i (x) -phi_right(v_i)
FactorizationReport verify_factorization(const LCoalgebra &full, const CompanionMaps &maps);
FactorizationReport verify_factorization(const CompanionCoalgebra &c);

}  // namespace lcoal

#endif  // LCOAL_COMPANION_HPP
