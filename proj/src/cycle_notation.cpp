#include "dessin/cycle_notation.hpp"

#include <algorithm>
#include <cctype>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  int line() const { return line_; }
  int column() const { return column_; }
  std::size_t pos() const { return pos_; }
  std::string_view slice(std::size_t from) const { return text_.substr(from, pos_ - from); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

ElementLabel scan_label(Scanner& s, std::optional<std::uint32_t> degree) {
  int line = s.line();
  int column = s.column();
  std::size_t from = s.pos();
  while (!s.done() && is_digit(s.peek())) s.advance();
  while (!s.done() && (s.peek() == 'W' || s.peek() == 'B')) s.advance();
  ElementLabel label;
  try {
    label = ElementLabel::parse(s.slice(from));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line, column);
  }
  if (degree && label.base_index() > *degree) {
    throw ParseError("element " + label.to_string() + " exceeds degree " + std::to_string(*degree), line, column);
  }
  return label;
}

}  // namespace

std::vector<Cycle> parse_cycle_groups(std::string_view text, std::optional<std::uint32_t> degree) {
  Scanner s(text);
  std::vector<Cycle> groups;
  std::vector<ElementLabel> seen;
  s.skip_space();
  if (s.done()) s.fail("expected at least one cycle group");
  while (!s.done()) {
    if (s.peek() != '(') s.fail(std::string("expected '(' but found '") + s.peek() + "'");
    s.advance();
    Cycle group;
    bool need_element = true;  // after '(' or ','
    bool after_comma = false;
    for (;;) {
      s.skip_space();
      if (s.done()) s.fail("unterminated cycle group");
      char c = s.peek();
      if (c == ')') {
        if (group.empty()) s.fail("empty cycle group");
        if (after_comma) s.fail("trailing comma in cycle group");
        s.advance();
        break;
      }
      if (c == ',') {
        if (need_element) s.fail("unexpected ','");
        need_element = true;
        after_comma = true;
        s.advance();
        continue;
      }
      if (!is_digit(c)) s.fail(std::string("unexpected character '") + c + "'");
      int line = s.line();
      int column = s.column();
      ElementLabel label = scan_label(s, degree);
      if (std::find(seen.begin(), seen.end(), label) != seen.end()) {
        throw ParseError("element " + label.to_string() + " appears more than once", line, column);
      }
      seen.push_back(label);
      group.push_back(label);
      need_element = false;
      after_comma = false;
    }
    groups.push_back(std::move(group));
    s.skip_space();
  }
  return groups;
}

GroundPtr infer_ground(const std::vector<std::vector<Cycle>>& inputs, std::optional<std::uint32_t> degree) {
  std::vector<ElementLabel> mentioned;
  std::uint32_t n = 0;
  for (const auto& cycles : inputs) {
    for (const auto& c : cycles) {
      for (const auto& x : c) {
        mentioned.push_back(x);
        n = std::max(n, x.base_index());
      }
    }
  }
  if (degree) {
    if (n > *degree) throw DomainError("element " + std::to_string(n) + " exceeds degree " + std::to_string(*degree));
    n = *degree;
  }
  std::sort(mentioned.begin(), mentioned.end());
  mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());
  std::vector<ElementLabel> elements = mentioned;
  for (std::uint32_t k = 1; k <= n; ++k) {
    auto base = ElementLabel::base(k);
    bool covered = std::any_of(mentioned.begin(), mentioned.end(),
                               [&](const ElementLabel& x) { return x.descends_from(base); });
    if (!covered) elements.push_back(base);
  }
  if (elements.empty()) throw DomainError("empty ground set");
  return std::make_shared<const GroundSet>(std::move(elements));
}

Permutation parse_permutation(std::string_view text, std::optional<std::uint32_t> degree) {
  auto cycles = parse_cycle_groups(text, degree);
  auto ground = infer_ground({cycles}, degree);
  return Permutation::from_cycles(std::move(ground), cycles);
}

std::string format_permutation(const Permutation& p) { return p.to_string(); }

}  // namespace dessin
