#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessin/permutation.hpp"

namespace dessin {

// (white, black) on a shared ground set. The product white * black is
// computed once and reused by every classifier.
class PermutationPair {
 public:
  PermutationPair(Permutation white, Permutation black);

  const Permutation& white() const { return white_; }
  const Permutation& black() const { return black_; }
  const Permutation& product() const { return product_; }
  const GroundSet& ground() const { return white_.ground(); }
  const GroundPtr& ground_ptr() const { return white_.ground_ptr(); }
  std::size_t size() const { return white_.size(); }

  std::uint32_t index_of(const ElementLabel& x) const {
    return static_cast<std::uint32_t>(ground().index_of(x));
  }

  bool operator==(const PermutationPair& other) const {
    return white_ == other.white_ && black_ == other.black_;
  }

 private:
  Permutation white_;
  Permutation black_;
  Permutation product_;
};

// Both texts share one inferred ground set (see infer_ground).
PermutationPair parse_pair(std::string_view white, std::string_view black,
                           std::optional<std::uint32_t> degree = std::nullopt);

enum class TypeClass { U, N, P1, P2, P3, P4 };
enum class ExceptionalClass { None, Tame1A, Tame1B, Tame2, Wild };
enum class GenusEffect { Raising, Lowering, Preserving };

std::string to_string(TypeClass t);
std::string to_string(ExceptionalClass e);
std::string to_string(GenusEffect g);
inline bool is_type_p(TypeClass t) { return t != TypeClass::U && t != TypeClass::N; }
inline bool is_tame(ExceptionalClass e) {
  return e == ExceptionalClass::Tame1A || e == ExceptionalClass::Tame1B || e == ExceptionalClass::Tame2;
}

struct PairReport {
  int chi = 0;
  int genus = 0;
  std::size_t nu_white = 0;
  std::size_t nu_black = 0;
  std::size_t nu_product = 0;
  bool transitive = false;

  // "key: value" lines in field order.
  std::string to_text() const;
  std::string to_json() const;

  bool operator==(const PairReport&) const = default;
};

// chi = nu(white) + nu(black) - |E| + nu(white * black)
int euler_characteristic(const PermutationPair& pair);
// 1 - chi / 2
int synthetic_genus(const PermutationPair& pair);
// Orbits of the group generated by white and black, via union-find.
std::size_t num_group_orbits(const PermutationPair& pair);
bool is_transitive(const PermutationPair& pair);
PairReport analyze(const PermutationPair& pair);

// Classifiers relative to (a, b), a != b. The _at variants take ground-set
// indices. All throw DomainError when a == b.
TypeClass classify_type(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);
TypeClass classify_type_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b);

ExceptionalClass classify_exceptional(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);
ExceptionalClass classify_exceptional_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b);

GenusEffect genus_effect(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);
GenusEffect genus_effect_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b);

// Product orbits meeting e and white(e): one cycle iff e borders one face.
std::vector<Cycle> faces_of_edge(const PermutationPair& pair, const ElementLabel& e);

// Removes e from both permutations by splicing its predecessor to its
// successor. Throws DegenerateError when |E| = 1.
PermutationPair delete_edge(const PermutationPair& pair, const ElementLabel& e);

// e, black(e), product(e), black(product(e)), ... until the walk returns to e.
// Length is twice the size of the product orbit of e.
std::vector<ElementLabel> boundary_walk(const PermutationPair& pair, const ElementLabel& e);

// Restriction of the pair to the subset of ground elements given, which must
// be a union of group orbits.
PermutationPair restrict_pair(const PermutationPair& pair, const std::vector<ElementLabel>& elements);
// The group orbits, each sorted, in order of their minimum.
std::vector<std::vector<ElementLabel>> group_orbits(const PermutationPair& pair);

std::string format_pair(const PermutationPair& pair);

}  // namespace dessin
