#include "dessin/permutation.hpp"

#include "dessin/errors.hpp"

namespace dessin {

namespace {

void require_same_ground(const Permutation& p, const Permutation& q) {
  if (!same_ground(p.ground_ptr(), q.ground_ptr())) {
    throw StructuralError("permutations act on different ground sets");
  }
}

std::uint32_t index_in(const Permutation& p, const ElementLabel& x) {
  return static_cast<std::uint32_t>(p.ground().index_of(x));
}

}  // namespace

Permutation::Permutation(GroundPtr ground, std::vector<std::uint32_t> image)
    : ground_(std::move(ground)), image_(std::move(image)) {
  const std::size_t n = image_.size();
  if (!ground_ || ground_->size() != n) {
    throw StructuralError("image size does not match the ground set");
  }
  constexpr std::uint32_t kUnset = ~0u;
  orbit_.assign(n, kUnset);
  position_.resize(n);
  order_.reserve(n);
  cycle_start_.reserve(n + 1);
  std::vector<bool> hit(n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (image_[i] >= n || hit[image_[i]]) throw StructuralError("mapping is not a bijection");
    hit[image_[i]] = true;
  }
  for (std::uint32_t start = 0; start < n; ++start) {
    if (orbit_[start] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(cycle_start_.size());
    cycle_start_.push_back(static_cast<std::uint32_t>(order_.size()));
    std::uint32_t pos = 0;
    std::uint32_t x = start;
    do {
      orbit_[x] = id;
      position_[x] = pos++;
      order_.push_back(x);
      x = image_[x];
    } while (x != start);
  }
  cycle_start_.push_back(static_cast<std::uint32_t>(order_.size()));
}

Permutation Permutation::identity(GroundPtr ground) {
  std::vector<std::uint32_t> image(ground->size());
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = i;
  return Permutation(std::move(ground), std::move(image));
}

Permutation Permutation::from_cycles(GroundPtr ground, const std::vector<Cycle>& cycles) {
  const std::size_t n = ground->size();
  std::vector<std::uint32_t> image(n);
  std::vector<bool> seen(n, false);
  for (std::uint32_t i = 0; i < n; ++i) image[i] = i;
  for (const auto& c : cycles) {
    if (c.empty()) throw StructuralError("empty cycle");
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto i = static_cast<std::uint32_t>(ground->index_of(c[k]));
      if (seen[i]) throw StructuralError("element " + c[k].to_string() + " appears in more than one cycle position");
      seen[i] = true;
      image[i] = static_cast<std::uint32_t>(ground->index_of(c[(k + 1) % c.size()]));
    }
  }
  return Permutation(std::move(ground), std::move(image));
}

ElementLabel Permutation::operator()(const ElementLabel& x) const {
  return (*ground_)[image_[index_in(*this, x)]];
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(ground_, std::move(inv));
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  out.reserve(num_cycles());
  for (std::size_t c = 0; c + 1 < cycle_start_.size(); ++c) {
    Cycle cycle;
    for (std::uint32_t k = cycle_start_[c]; k < cycle_start_[c + 1]; ++k) {
      cycle.push_back((*ground_)[order_[k]]);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Cycle Permutation::cycle_of(const ElementLabel& x) const {
  std::uint32_t c = orbit_[index_in(*this, x)];
  Cycle cycle;
  for (std::uint32_t k = cycle_start_[c]; k < cycle_start_[c + 1]; ++k) {
    cycle.push_back((*ground_)[order_[k]]);
  }
  return cycle;
}

std::uint32_t Permutation::orbit_length(std::uint32_t i) const {
  std::uint32_t c = orbit_[i];
  return cycle_start_[c + 1] - cycle_start_[c];
}

std::uint32_t Permutation::distance(std::uint32_t i, std::uint32_t j) const {
  if (orbit_[i] != orbit_[j]) throw DomainError("elements lie in different orbits");
  std::uint32_t len = orbit_length(i);
  return (position_[j] + len - position_[i]) % len;
}

bool Permutation::arc_contains_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  if (orbit_[k] != orbit_[i]) return false;
  std::uint32_t dk = distance(i, k);
  return dk != 0 && dk <= distance(i, j);
}

std::vector<std::uint32_t> Permutation::cycle_lengths() const {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c + 1 < cycle_start_.size(); ++c) out.push_back(cycle_start_[c + 1] - cycle_start_[c]);
  return out;
}

bool Permutation::is_identity() const { return num_cycles() == size(); }

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles()) out += format_cycle(c);
  return out;
}

bool Permutation::operator==(const Permutation& other) const {
  return same_ground(ground_, other.ground_) && image_ == other.image_;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_ground(p, q);
  std::vector<std::uint32_t> image(p.size());
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = p.at(q.at(i));
  return Permutation(p.ground_ptr(), std::move(image));
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
  require_same_ground(p, s);
  // s p s^-1 sends s(x) to s(p(x)).
  std::vector<std::uint32_t> image(p.size());
  for (std::uint32_t x = 0; x < image.size(); ++x) image[s.at(x)] = s.at(p.at(x));
  return Permutation(p.ground_ptr(), std::move(image));
}

Permutation transposition(const GroundPtr& ground, const ElementLabel& a, const ElementLabel& b) {
  if (a == b) throw DomainError("a transposition needs two distinct elements");
  return Permutation::from_cycles(ground, {{a, b}});
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) { return p.cycles(); }

std::size_t num_cycles(const Permutation& p) { return p.num_cycles(); }

Permutation cycle_to_mapping(const Cycle& c, const GroundPtr& ground) {
  for (const auto& x : c) {
    if (!ground->contains(x)) throw DomainError("cycle element " + x.to_string() + " is outside the ground set");
  }
  return Permutation::from_cycles(ground, {c});
}

std::vector<ElementLabel> minimal_sequence(const Permutation& p, const ElementLabel& x,
                                           const ElementLabel& y) {
  std::uint32_t i = index_in(p, x);
  std::uint32_t j = index_in(p, y);
  if (!p.same_orbit_at(i, j)) {
    throw DomainError(x.to_string() + " and " + y.to_string() + " lie in different orbits");
  }
  std::vector<ElementLabel> seq{x};
  for (std::uint32_t k = i; k != j;) {
    k = p.at(k);
    seq.push_back(p.ground()[k]);
  }
  return seq;
}

Arc arc(const Permutation& p, const ElementLabel& x, const ElementLabel& y) {
  auto seq = minimal_sequence(p, x, y);
  return Arc(seq.begin() + 1, seq.end());
}

bool arc_contains(const Permutation& p, const ElementLabel& x, const ElementLabel& y,
                  const ElementLabel& z) {
  std::uint32_t i = index_in(p, x);
  std::uint32_t j = index_in(p, y);
  if (!p.same_orbit_at(i, j)) {
    throw DomainError(x.to_string() + " and " + y.to_string() + " lie in different orbits");
  }
  return p.arc_contains_at(i, j, index_in(p, z));
}

bool same_orbit(const Permutation& p, const ElementLabel& x, const ElementLabel& y) {
  return p.same_orbit_at(index_in(p, x), index_in(p, y));
}

std::string format_cycle(const Cycle& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += c[k].to_string();
  }
  return out + ")";
}

}  // namespace dessin
