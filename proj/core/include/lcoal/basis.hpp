#ifndef LCOAL_BASIS_HPP
#define LCOAL_BASIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lcoal
{

using Index = std::uint32_t;

enum class LabelKind
{
  Vertex,
  Shadow,
};

struct BasisLabel
{
  LabelKind kind = LabelKind::Vertex;
  std::string name;

  friend bool operator==(const BasisLabel &, const BasisLabel &) = default;
};

class Basis;
using BasisPtr = std::shared_ptr<const Basis>;

// An ordered, immutable list of uniquely named basis labels. Every vector, tensor and map
// in the library refers to basis elements by their position in one of these.
class Basis
{
public:
  // Throws EmptyBasis for an empty list and DuplicateLabel for a repeated name.
  static BasisPtr make(std::vector<BasisLabel> labels);

  // All labels are Vertex labels, except that a list of the form
  //   x_1 .. x_n h_x_1 .. h_x_n
  // is recognised as a companion basis and its second half marked Shadow.
  static BasisPtr from_names(const std::vector<std::string> &names);

  // Vertex labels of `base` followed by one Shadow label h_<name> per vertex, in the same
  // order. Throws NotMarkov if `base` already holds Shadow labels and ShadowNameClash if a
  // generated shadow name collides with an existing vertex name.
  static BasisPtr companion_of(const Basis &base);

  // Labels "x*y" in row-major order, used for matrices of maps on W (x) W.
  static BasisPtr product_of(const Basis &base);

  std::size_t size() const noexcept { return labels_.size(); }
  const BasisLabel &label(Index i) const { return labels_.at(i); }
  const std::string &name(Index i) const { return labels_.at(i).name; }
  const std::vector<BasisLabel> &labels() const noexcept { return labels_; }

  std::optional<Index> find(std::string_view name) const;
  // Throws UnknownLabel.
  Index index_of(std::string_view name) const;

  bool has_shadows() const noexcept;

  friend bool operator==(const Basis &a, const Basis &b) { return a.labels_ == b.labels_; }

private:
  explicit Basis(std::vector<BasisLabel> labels);

  std::vector<BasisLabel> labels_;
  std::unordered_map<std::string, Index> lookup_;
};

// Two basis pointers describe the same space when they are identical or equal by value.
bool same_basis(const BasisPtr &a, const BasisPtr &b);

// Throws BasisMismatch naming `context` when same_basis() fails.
void require_same_basis(const BasisPtr &a, const BasisPtr &b, std::string_view context);

std::string shadow_name(std::string_view vertex_name);

}  // namespace lcoal

#endif  // LCOAL_BASIS_HPP
