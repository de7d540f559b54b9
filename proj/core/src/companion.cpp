#include "lcoal/companion.hpp"

#include "lcoal/error.hpp"
#include "lcoal/text_format.hpp"

namespace lcoal
{

namespace
{

// Weighted neighbour sums read off the coproducts: first legs of tilde v (in-neighbours)
// or second legs of delta v (out-neighbours).
std::vector<FreeVector> neighbour_sums(const LCoalgebra &base, Side side)
{
  std::vector<FreeVector> sums;
  sums.reserve(base.dim());
  for (Index v = 0; v < base.dim(); ++v)
  {
    TermBuffer<Index> s;
    const Tensor2 &t = side == Side::Left ? base.left(v) : base.right(v);
    for (const auto &[k, c] : t.terms())
      s.add(side == Side::Left ? k[0] : k[1], c);
    sums.push_back(s.finish());
  }
  return sums;
}

std::pair<LinearEndo, LinearEndo> automorphisms(const BasisPtr &doubled,
                                                const std::vector<FreeVector> &sums)
{
  const auto n = static_cast<Index>(sums.size());
  auto h = [n](Index i) { return n + i; };

  std::vector<FreeVector> psi(2 * n);
  std::vector<FreeVector> phi(2 * n);
  for (Index i = 0; i < n; ++i)
  {
    // psi: v_i -> W_i + h_i, h_i -> W_i + h_i + v_i
    psi[i] = sums[i] + FreeVector::unit(h(i));
    psi[h(i)] = psi[i] + FreeVector::unit(i);

    // phi: v_i -> h_i - v_i, h_i -> sum_k w_k (v_k - h_k) + v_i
    phi[i] = FreeVector::unit(h(i)) - FreeVector::unit(i);
    TermBuffer<Index> img;
    for (const auto &[k, w] : sums[i].terms())
    {
      img.add(k, w);
      img.add(h(k), -w);
    }
    img.add(i, 1);
    phi[h(i)] = img.finish();
  }
  return {LinearEndo(doubled, std::move(psi)), LinearEndo(doubled, std::move(phi))};
}

}  // namespace

CompanionCoalgebra build_companion(const LCoalgebra &base)
{
  if (base.basis()->has_shadows())
    throw Error(ErrorKind::NotMarkov, "companion of a coalgebra with shadow labels is not defined");
  if (!has_markov_shape(base))
    throw Error(ErrorKind::NotMarkov, "coproducts do not have Markov shape");

  BasisPtr doubled = Basis::companion_of(*base.basis());
  const auto n = static_cast<Index>(base.dim());
  Coproduct right(2 * n);
  Coproduct left(2 * n);
  for (Index i = 0; i < n; ++i)
  {
    const Index h = n + i;
    right[i] = base.right(i) + Tensor2::unit(Pair{i, h});
    right[h] = Tensor2::from_terms({{Pair{h, i}, Scalar(1)}, {Pair{h, h}, Scalar(-1)}});
    left[i] = base.left(i) + Tensor2::unit(Pair{h, i});
    left[h] = Tensor2::from_terms({{Pair{i, h}, Scalar(1)}, {Pair{h, h}, Scalar(-1)}});
  }
  LCoalgebra full(doubled, std::move(right), std::move(left));

  auto [psi_l, phi_l] = automorphisms(doubled, neighbour_sums(base, Side::Left));
  auto [psi_r, phi_r] = automorphisms(doubled, neighbour_sums(base, Side::Right));
  return CompanionCoalgebra(base, std::move(full),
                            CompanionMaps{std::move(psi_l), std::move(phi_l), std::move(psi_r),
                                          std::move(phi_r)});
}

FactorizationReport verify_factorization(const LCoalgebra &full, const CompanionMaps &maps)
{
  FactorizationReport report;
  if (full.dim() % 2 != 0)
  {
    report.failures.push_back("companion basis has odd dimension");
    return report;
  }
  for (const LinearEndo *m : {&maps.psi_left, &maps.phi_left, &maps.psi_right, &maps.phi_right})
    if (!same_basis(m->basis(), full.basis()))
    {
      report.failures.push_back("automorphism lives on a different basis");
      return report;
    }

  const Basis &basis = *full.basis();
  const auto n = static_cast<Index>(full.dim() / 2);
  for (Index i = 0; i < n; ++i)
  {
    const Index h = n + i;
    const FreeVector v_i = FreeVector::unit(i);
    const FreeVector h_i = FreeVector::unit(h);
    const std::string &vn = basis.name(i);
    const std::string &hn = basis.name(h);

    if (!(full.left(i) == tensor_product(maps.psi_left(i), v_i)))
      report.failures.push_back("tilde_* " + vn + " != psi_left(" + vn + ") (x) " + vn);
    if (!(full.left(h) == tensor_product(-maps.phi_left(i), h_i)))
      report.failures.push_back("tilde_* " + hn + " != -phi_left(" + vn + ") (x) " + hn);
    if (!(full.right(i) == tensor_product(v_i, maps.psi_right(i))))
      report.failures.push_back("delta_* " + vn + " != " + vn + " (x) psi_right(" + vn + ")");
    if (!(full.right(h) == tensor_product(h_i, -maps.phi_right(i))))
      report.failures.push_back("delta_* " + hn + " != " + hn + " (x) -phi_right(" + vn + ")");
  }
  return report;
}

FactorizationReport verify_factorization(const CompanionCoalgebra &c)
{
  return verify_factorization(c.full(), c.maps());
}

}  // namespace lcoal
