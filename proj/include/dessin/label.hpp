#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dessin {

enum class Color : std::uint8_t { White, Black };

// A ground-set member. Base labels are positive integers; reroute derives
// children tagged white or black (3 -> 3W, 3B; 3W -> 3WW, 3WB, ...).
//
// The tag path is packed two bits per level, most significant level first,
// with 01 = white, 10 = black and 00 = end. Comparing (base, path) as integers
// then orders a label before its children and white children before black.
class ElementLabel {
 public:
  static constexpr int kMaxDepth = 16;

  constexpr ElementLabel() = default;

  static ElementLabel base(std::uint32_t index);
  // Parses "12", "3B", "3WB". Throws DomainError on malformed text.
  static ElementLabel parse(std::string_view text);

  ElementLabel child(Color color) const;
  ElementLabel white() const { return child(Color::White); }
  ElementLabel black() const { return child(Color::Black); }

  std::uint32_t base_index() const { return base_; }
  int depth() const;
  bool is_base() const { return path_ == 0; }
  Color tag(int level) const;
  ElementLabel parent() const;
  // True when this label is other or one of its descendants.
  bool descends_from(const ElementLabel& other) const;

  std::string to_string() const;

  friend constexpr auto operator<=>(const ElementLabel&, const ElementLabel&) = default;

 private:
  constexpr ElementLabel(std::uint32_t base, std::uint32_t path) : base_(base), path_(path) {}

  std::uint32_t base_ = 0;
  std::uint32_t path_ = 0;
};

// Ordered, duplicate-free, nonempty set of labels. Elements are addressed by
// their index in sorted order; permutations store images as indices.
class GroundSet {
 public:
  explicit GroundSet(std::vector<ElementLabel> elements);

  // {1, ..., n}
  static std::shared_ptr<const GroundSet> range(std::uint32_t n);

  std::size_t size() const { return elements_.size(); }
  const ElementLabel& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<ElementLabel>& elements() const { return elements_; }

  std::optional<std::size_t> find(const ElementLabel& label) const;
  // Throws DomainError when label is not a member.
  std::size_t index_of(const ElementLabel& label) const;
  bool contains(const ElementLabel& label) const { return find(label).has_value(); }

  bool operator==(const GroundSet& other) const { return elements_ == other.elements_; }

 private:
  std::vector<ElementLabel> elements_;
  bool contiguous_ = false;  // exactly {1..n}
};

using GroundPtr = std::shared_ptr<const GroundSet>;

bool same_ground(const GroundPtr& a, const GroundPtr& b);

}  // namespace dessin
