#include "dessin/label.hpp"

#include <algorithm>
#include <charconv>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

constexpr std::uint32_t kWhiteBits = 1;
constexpr std::uint32_t kBlackBits = 2;

std::uint32_t level_bits(std::uint32_t path, int level) {
  return (path >> (30 - 2 * level)) & 3u;
}

}  // namespace

ElementLabel ElementLabel::base(std::uint32_t index) {
  if (index == 0) throw DomainError("element labels are positive integers");
  return ElementLabel(index, 0);
}

ElementLabel ElementLabel::parse(std::string_view text) {
  std::size_t digits = 0;
  while (digits < text.size() && text[digits] >= '0' && text[digits] <= '9') ++digits;
  if (digits == 0) throw DomainError("label must start with a decimal integer: '" + std::string(text) + "'");
  std::uint32_t index = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + digits, index);
  if (ec != std::errc() || ptr != text.data() + digits) {
    throw DomainError("label index out of range: '" + std::string(text) + "'");
  }
  ElementLabel label = base(index);
  for (std::size_t i = digits; i < text.size(); ++i) {
    if (text[i] == 'W') {
      label = label.white();
    } else if (text[i] == 'B') {
      label = label.black();
    } else {
      throw DomainError("unexpected character in label: '" + std::string(text) + "'");
    }
  }
  return label;
}

int ElementLabel::depth() const {
  int d = 0;
  while (d < kMaxDepth && level_bits(path_, d) != 0) ++d;
  return d;
}

ElementLabel ElementLabel::child(Color color) const {
  int d = depth();
  if (d >= kMaxDepth) throw DomainError("label derivation depth exceeded for " + to_string());
  std::uint32_t bits = color == Color::White ? kWhiteBits : kBlackBits;
  return ElementLabel(base_, path_ | (bits << (30 - 2 * d)));
}

Color ElementLabel::tag(int level) const {
  if (level < 0 || level >= depth()) throw DomainError("tag level out of range");
  return level_bits(path_, level) == kWhiteBits ? Color::White : Color::Black;
}

ElementLabel ElementLabel::parent() const {
  int d = depth();
  if (d == 0) throw DomainError("base label has no parent");
  return ElementLabel(base_, path_ & ~(3u << (30 - 2 * (d - 1))));
}

bool ElementLabel::descends_from(const ElementLabel& other) const {
  if (base_ != other.base_) return false;
  int d = other.depth();
  if (d == 0) return true;
  std::uint32_t mask = ~0u << (32 - 2 * d);
  return (path_ & mask) == other.path_;
}

std::string ElementLabel::to_string() const {
  std::string out = std::to_string(base_);
  for (int level = 0, d = depth(); level < d; ++level) {
    out.push_back(level_bits(path_, level) == kWhiteBits ? 'W' : 'B');
  }
  return out;
}

GroundSet::GroundSet(std::vector<ElementLabel> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("ground set must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw DomainError("ground set contains a duplicate label");
  }
  contiguous_ = true;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!elements_[i].is_base() || elements_[i].base_index() != i + 1) {
      contiguous_ = false;
      break;
    }
  }
}

std::shared_ptr<const GroundSet> GroundSet::range(std::uint32_t n) {
  std::vector<ElementLabel> elements;
  elements.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) elements.push_back(ElementLabel::base(i));
  return std::make_shared<const GroundSet>(std::move(elements));
}

std::optional<std::size_t> GroundSet::find(const ElementLabel& label) const {
  if (contiguous_) {
    if (label.is_base() && label.base_index() >= 1 && label.base_index() <= elements_.size()) {
      return label.base_index() - 1;
    }
    return std::nullopt;
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
  if (it == elements_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t GroundSet::index_of(const ElementLabel& label) const {
  auto i = find(label);
  if (!i) throw DomainError("label " + label.to_string() + " is not in the ground set");
  return *i;
}

bool same_ground(const GroundPtr& a, const GroundPtr& b) {
  return a == b || *a == *b;
}

}  // namespace dessin
