#ifndef LCOAL_TENSOR_HPP
#define LCOAL_TENSOR_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "lcoal/basis.hpp"
#include "lcoal/scalar.hpp"

namespace lcoal
{

using Pair = std::array<Index, 2>;
using Triple = std::array<Index, 3>;
using Word = std::vector<Index>;

// Finite formal linear combination of basis keys. Terms are kept sorted by key with no
// zero coefficients, so equality is plain term-list equality and does not depend on the
// order in which terms were produced.
template <class Key>
class Tensor
{
public:
  using key_type = Key;
  using Term = std::pair<Key, Scalar>;

  Tensor() = default;

  static Tensor from_terms(std::vector<Term> terms)
  {
    Tensor t;
    t.terms_ = std::move(terms);
    t.canonicalize();
    return t;
  }

  static Tensor unit(Key key, Scalar coefficient = 1)
  {
    Tensor t;
    if (!is_zero(coefficient))
      t.terms_.emplace_back(std::move(key), std::move(coefficient));
    return t;
  }

  const std::vector<Term> &terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Key &key) const
  {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term &t, const Key &k) { return t.first < k; });
    if (it != terms_.end() && it->first == key)
      return it->second;
    return Scalar(0);
  }

  Tensor &operator+=(const Tensor &other) { return merge(other, 1); }
  Tensor &operator-=(const Tensor &other) { return merge(other, -1); }

  Tensor &operator*=(const Scalar &factor)
  {
    if (is_zero(factor))
      terms_.clear();
    else
      for (auto &t : terms_)
        t.second *= factor;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor &b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
  friend Tensor operator*(const Scalar &s, Tensor a) { return a *= s; }
  friend Tensor operator*(Tensor a, const Scalar &s) { return a *= s; }
  friend bool operator==(const Tensor &a, const Tensor &b) { return a.terms_ == b.terms_; }

private:
  void canonicalize()
  {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term &a, const Term &b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();)
    {
      std::size_t j = i + 1;
      Scalar sum = std::move(terms_[i].second);
      while (j < terms_.size() && terms_[j].first == terms_[i].first)
        sum += terms_[j++].second;
      if (!is_zero(sum))
      {
        if (out != i)
          terms_[out].first = std::move(terms_[i].first);
        terms_[out].second = std::move(sum);
        ++out;
      }
      i = j;
    }
    terms_.resize(out);
  }

  Tensor &merge(const Tensor &other, int sign)
  {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end())
    {
      if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first))
      {
        merged.push_back(std::move(*a++));
      }
      else if (a == terms_.end() || b->first < a->first)
      {
        merged.emplace_back(b->first, sign > 0 ? b->second : Scalar(-b->second));
        ++b;
      }
      else
      {
        Scalar sum = sign > 0 ? Scalar(a->second + b->second) : Scalar(a->second - b->second);
        if (!is_zero(sum))
          merged.emplace_back(std::move(a->first), std::move(sum));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  std::vector<Term> terms_;
};

using FreeVector = Tensor<Index>;
using Tensor2 = Tensor<Pair>;
using Tensor3 = Tensor<Triple>;
// Tensors of runtime arity, used for braid states on W^(x)n.
using TensorN = Tensor<Word>;

// Collects terms in any order and produces a canonical tensor once at the end. Cheaper
// than repeated += when building large sums.
template <class Key>
class TermBuffer
{
public:
  void add(Key key, Scalar coefficient)
  {
    if (!is_zero(coefficient))
      terms_.emplace_back(std::move(key), std::move(coefficient));
  }
  void reserve(std::size_t n) { terms_.reserve(n); }
  Tensor<Key> finish() { return Tensor<Key>::from_terms(std::move(terms_)); }

private:
  std::vector<typename Tensor<Key>::Term> terms_;
};

inline Tensor2 tensor_product(const FreeVector &x, const FreeVector &y)
{
  TermBuffer<Pair> out;
  out.reserve(x.size() * y.size());
  for (const auto &[i, a] : x.terms())
    for (const auto &[j, b] : y.terms())
      out.add(Pair{i, j}, a * b);
  return out.finish();
}

// tau(x (x) y) = y (x) x
inline Tensor2 flip(const Tensor2 &t)
{
  TermBuffer<Pair> out;
  out.reserve(t.size());
  for (const auto &[k, c] : t.terms())
    out.add(Pair{k[1], k[0]}, c);
  return out.finish();
}

// Arity of the terms of a runtime-arity tensor; 0 for the zero tensor. Throws
// ArityMismatch when terms disagree.
std::size_t arity(const TensorN &t);

}  // namespace lcoal

#endif  // LCOAL_TENSOR_HPP
