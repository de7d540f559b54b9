#include "lcoal/basis.hpp"

#include <algorithm>

#include "lcoal/error.hpp"

namespace lcoal
{

Basis::Basis(std::vector<BasisLabel> labels) : labels_(std::move(labels))
{
  if (labels_.empty())
    throw Error(ErrorKind::EmptyBasis, "a basis needs at least one label");
  lookup_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i)
    if (!lookup_.emplace(labels_[i].name, i).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels_[i].name + "' occurs twice");
}

BasisPtr Basis::make(std::vector<BasisLabel> labels)
{
  return BasisPtr(new Basis(std::move(labels)));
}

BasisPtr Basis::from_names(const std::vector<std::string> &names)
{
  std::vector<BasisLabel> labels;
  labels.reserve(names.size());
  for (const auto &n : names)
    labels.push_back({LabelKind::Vertex, n});

  const std::size_t half = names.size() / 2;
  bool companion_shaped = half > 0 && names.size() % 2 == 0;
  for (std::size_t i = 0; companion_shaped && i < half; ++i)
    companion_shaped = names[half + i] == shadow_name(names[i]);
  if (companion_shaped)
    for (std::size_t i = half; i < names.size(); ++i)
      labels[i].kind = LabelKind::Shadow;
  return make(std::move(labels));
}

BasisPtr Basis::companion_of(const Basis &base)
{
  if (base.has_shadows())
    throw Error(ErrorKind::NotMarkov, "the input already contains shadow labels");
  std::vector<BasisLabel> labels = base.labels_;
  for (const auto &l : base.labels_)
  {
    std::string s = shadow_name(l.name);
    if (base.find(s))
      throw Error(ErrorKind::ShadowNameClash,
                  "vertex '" + s + "' collides with the shadow of '" + l.name + "'");
    labels.push_back({LabelKind::Shadow, std::move(s)});
  }
  return make(std::move(labels));
}

BasisPtr Basis::product_of(const Basis &base)
{
  std::vector<BasisLabel> labels;
  labels.reserve(base.size() * base.size());
  for (const auto &x : base.labels_)
    for (const auto &y : base.labels_)
      labels.push_back({LabelKind::Vertex, x.name + "*" + y.name});
  return make(std::move(labels));
}

std::optional<Index> Basis::find(std::string_view name) const
{
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

Index Basis::index_of(std::string_view name) const
{
  if (auto i = find(name))
    return *i;
  throw Error(ErrorKind::UnknownLabel, "label '" + std::string(name) + "' is not in the basis");
}

bool Basis::has_shadows() const noexcept
{
  return std::any_of(labels_.begin(), labels_.end(),
                     [](const BasisLabel &l) { return l.kind == LabelKind::Shadow; });
}

bool same_basis(const BasisPtr &a, const BasisPtr &b)
{
  return a == b || (a && b && *a == *b);
}

void require_same_basis(const BasisPtr &a, const BasisPtr &b, std::string_view context)
{
  if (!same_basis(a, b))
    throw Error(ErrorKind::BasisMismatch, std::string(context) + ": operands live on different bases");
}

std::string shadow_name(std::string_view vertex_name)
{
  return "h_" + std::string(vertex_name);
}

}  // namespace lcoal
