#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dessin/pair.hpp"

namespace dessin {

// Orbit closure of one element under white, black and their inverses. Shares
// no code with the graph model.
bool is_transitive_oracle(const PermutationPair& pair);

// Every permutation of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::uint32_t n);

using TupleVisitor = std::function<void(const PermutationPair&, const ElementLabel&, const ElementLabel&)>;

// Every (white, black) in S_n x S_n and every ordered pair of distinct (a, b),
// white-major in lexicographic order. Throws DomainError unless
// 2 <= degree <= cap.
void enumerate_pairs(std::uint32_t degree, const TupleVisitor& visit, std::uint32_t cap = 5);
std::uint64_t expected_tuple_count(std::uint32_t degree);

enum class Mutant { None, SwapNP1 };

struct VerifyOptions {
  std::uint32_t degree = 4;
  unsigned threads = 1;
  std::uint32_t max_degree = 5;  // exhaustive up to here
  std::uint64_t samples = 2000;  // random pairs above max_degree
  std::uint64_t seed = 1;
  Mutant mutant = Mutant::None;
};

struct Counterexample {
  std::uint64_t index = 0;  // position in the tuple stream
  std::string white;
  std::string black;
  std::string a;
  std::string b;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<Counterexample> first;
};

// Counted but never a failure.
struct Observation {
  std::string name;
  std::uint64_t seen = 0;
  std::uint64_t held = 0;
};

struct VerificationReport {
  std::uint32_t degree = 0;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t cases_checked = 0;
  std::vector<CheckResult> checks;
  std::vector<std::uint64_t> branch_row_coverage;  // parallel to branch_table()
  std::uint64_t tame_transitive_witnesses = 0;
  std::uint64_t tame_nontransitive_witnesses = 0;
  std::vector<Observation> observations;

  bool all_passed() const;
  std::uint64_t total_failures() const;
  const CheckResult& check(const std::string& name) const;
  bool all_rows_covered() const;
  std::string to_json() const;
};

VerificationReport verify_all(const VerifyOptions& options);
VerificationReport verify_all(std::uint32_t degree);

// Every pair on at most max_edges edges with one product cycle and genus 0
// (a plane tree), conjugated by every s in S_n: transitive iff one product
// cycle.
struct TreeCaseReport {
  std::uint32_t max_edges = 0;
  std::uint64_t trees = 0;
  std::uint64_t conjugations = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  std::string to_json() const;
};

TreeCaseReport verify_tree_case(std::uint32_t max_edges);

}  // namespace dessin
