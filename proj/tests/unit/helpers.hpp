#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dessin/cycle_notation.hpp"
#include "dessin/pair.hpp"

namespace testing_helpers {

using namespace dessin;

inline ElementLabel L(const char* text) { return ElementLabel::parse(text); }

inline Permutation perm(const char* text, std::optional<std::uint32_t> degree = std::nullopt) {
  return parse_permutation(text, degree);
}

inline PermutationPair pair_of(const char* white, const char* black,
                               std::optional<std::uint32_t> degree = std::nullopt) {
  return parse_pair(white, black, degree);
}

inline std::vector<ElementLabel> labels(std::initializer_list<const char*> items) {
  std::vector<ElementLabel> out;
  for (const char* s : items) out.push_back(L(s));
  return out;
}

// Small independent model of permutations on {1..n}: 1-based image maps built
// straight from cycle lists. Used to derive expected values without going
// through the library.
struct Brute {
  int n;
  std::vector<int> img;  // img[x] for x in 1..n

  static Brute from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Brute p{n, std::vector<int>(n + 1)};
    for (int x = 1; x <= n; ++x) p.img[x] = x;
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) p.img[c[i]] = c[(i + 1) % c.size()];
    }
    return p;
  }

  int operator()(int x) const { return img[x]; }

  // (this * q)(x) = this(q(x))
  Brute after(const Brute& q) const {
    Brute r{n, std::vector<int>(n + 1)};
    for (int x = 1; x <= n; ++x) r.img[x] = img[q.img[x]];
    return r;
  }

  int cycles() const {
    std::vector<bool> seen(n + 1, false);
    int c = 0;
    for (int x = 1; x <= n; ++x) {
      if (seen[x]) continue;
      ++c;
      for (int y = x; !seen[y]; y = img[y]) seen[y] = true;
    }
    return c;
  }
};

inline int brute_chi(const Brute& w, const Brute& b) { return w.cycles() + b.cycles() - w.n + w.after(b).cycles(); }

inline bool brute_transitive(const Brute& w, const Brute& b) {
  std::set<int> seen{1};
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 1; y <= w.n; ++y) {
      if (w(x) == y || b(x) == y || w(y) == x || b(y) == x) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
  }
  return static_cast<int>(seen.size()) == w.n;
}

}  // namespace testing_helpers
