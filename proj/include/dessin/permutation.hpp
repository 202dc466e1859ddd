#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dessin/label.hpp"

namespace dessin {

using Cycle = std::vector<ElementLabel>;
using Arc = std::vector<ElementLabel>;

// Bijection of a ground set. Images are stored by index; the disjoint cycle
// decomposition is computed once at construction. Values are immutable.
class Permutation {
 public:
  // image[i] is the index of the image of ground[i]. Throws StructuralError
  // if image is not a bijection of {0..n-1}.
  Permutation(GroundPtr ground, std::vector<std::uint32_t> image);

  static Permutation identity(GroundPtr ground);
  // Cycles must be disjoint; unmentioned elements are fixed.
  static Permutation from_cycles(GroundPtr ground, const std::vector<Cycle>& cycles);

  const GroundPtr& ground_ptr() const { return ground_; }
  const GroundSet& ground() const { return *ground_; }
  std::size_t size() const { return image_.size(); }

  ElementLabel operator()(const ElementLabel& x) const;
  std::uint32_t at(std::uint32_t i) const { return image_[i]; }
  const std::vector<std::uint32_t>& images() const { return image_; }

  Permutation inverse() const;

  std::size_t num_cycles() const { return cycle_start_.size() - 1; }
  // Canonical decomposition: each cycle starts at its minimum label, cycles
  // ordered by minimum, fixed points included.
  std::vector<Cycle> cycles() const;
  Cycle cycle_of(const ElementLabel& x) const;

  // Index-level orbit queries.
  std::uint32_t orbit_id(std::uint32_t i) const { return orbit_[i]; }
  std::uint32_t orbit_length(std::uint32_t i) const;
  // Index of the smallest element in the orbit of i.
  std::uint32_t orbit_min(std::uint32_t i) const { return order_[cycle_start_[orbit_[i]]]; }
  bool same_orbit_at(std::uint32_t i, std::uint32_t j) const { return orbit_[i] == orbit_[j]; }
  // Forward steps from i to j; requires same orbit.
  std::uint32_t distance(std::uint32_t i, std::uint32_t j) const;
  // True iff k lies on the arc from i to j (k in (i, j] along the cycle).
  // False when k is in another orbit. Requires i, j in the same orbit.
  bool arc_contains_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  std::vector<std::uint32_t> cycle_lengths() const;

  bool is_identity() const;
  std::string to_string() const;

  // Mapping equality over equal ground sets.
  bool operator==(const Permutation& other) const;

 private:
  GroundPtr ground_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> orbit_;        // index -> cycle number
  std::vector<std::uint32_t> position_;     // index -> offset within its cycle
  std::vector<std::uint32_t> order_;        // indices listed cycle by cycle
  std::vector<std::uint32_t> cycle_start_;  // offsets into order_, one past the end last
};

// (p * q)(e) = p(q(e)). Throws StructuralError on a ground-set mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
// s * p * s^-1
Permutation conjugate(const Permutation& p, const Permutation& s);
Permutation transposition(const GroundPtr& ground, const ElementLabel& a, const ElementLabel& b);

std::vector<Cycle> cycle_decomposition(const Permutation& p);
std::size_t num_cycles(const Permutation& p);
Permutation cycle_to_mapping(const Cycle& c, const GroundPtr& ground);

// x = x0, x1 = p(x0), ..., xn = y with n minimal. Throws DomainError if x and
// y lie in different orbits.
std::vector<ElementLabel> minimal_sequence(const Permutation& p, const ElementLabel& x,
                                           const ElementLabel& y);
// minimal_sequence without its first element; empty when x == y.
Arc arc(const Permutation& p, const ElementLabel& x, const ElementLabel& y);
bool arc_contains(const Permutation& p, const ElementLabel& x, const ElementLabel& y,
                  const ElementLabel& z);
bool same_orbit(const Permutation& p, const ElementLabel& x, const ElementLabel& y);

std::string format_cycle(const Cycle& c);

}  // namespace dessin
