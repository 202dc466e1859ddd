#pragma once

#include <utility>
#include <vector>

#include "dessin/pair.hpp"

// Line-by-line port of the reference MAGMA routines. Permutations are 1-based
// image vectors (entry 0 unused) and act on the right, so x^(p*q) = q(p(x)).
// Kept deliberately naive: it is the cross-check for the main library.
namespace dessin::appendix {

using Perm = std::vector<int>;
using Seq = std::vector<int>;

int degree(const Perm& p);
Perm identity(int n);
// x^(p*q): apply p first.
Perm mul(const Perm& p, const Perm& q);
// The cycle of p through a, starting at a.
Seq cycle(const Perm& p, int a);
std::vector<Seq> cycle_decomposition(const Perm& p);
bool contains(const Seq& s, int x);
// 1-based position of x in s, 0 when absent.
int position(const Seq& s, int x);

Seq make_cycle_coercible(const Seq& cycle, int n);
int compute_genus(const Perm& white, const Perm& black);
// Returns (W, B) on n+1 points; n+1 plays aB and a plays aW.
std::pair<Perm, Perm> reroute(const Perm& white, const Perm& black, int a, int b);
Seq compute_arc(const Perm& g, int a, int b);

bool is_type_u(const Perm& white, const Perm& black, int a, int b);
bool is_type_n(const Perm& white, const Perm& black, int a, int b);
bool is_type_p(const Perm& white, const Perm& black, int a, int b);
bool is_type_p1(const Perm& white, const Perm& black, int a, int b);
bool is_type_p2(const Perm& white, const Perm& black, int a, int b);
bool is_type_p3(const Perm& white, const Perm& black, int a, int b);
bool is_type_p4(const Perm& white, const Perm& black, int a, int b);

bool is_tame_exceptional_1b(const Perm& white, const Perm& black, int a, int b);
bool is_tame_exceptional_1a(const Perm& white, const Perm& black, int a, int b);
bool is_tame_exceptional_2(const Perm& white, const Perm& black, int a, int b);
bool is_tame_exceptional(const Perm& white, const Perm& black, int a, int b);
bool is_wild_exceptional(const Perm& white, const Perm& black, int a, int b);
bool is_exceptional(const Perm& white, const Perm& black, int a, int b);

bool is_genus_raising(const Perm& white, const Perm& black, int a, int b);
bool is_genus_lowering(const Perm& white, const Perm& black, int a, int b);
bool is_genus_preserving(const Perm& white, const Perm& black, int a, int b);

// Adapters. Ground index i maps to integer i + 1.
std::pair<Perm, Perm> to_appendix(const PermutationPair& pair);
// Relabels the output of reroute(..., a, b) on pair's ground: a -> aW,
// n+1 -> aB.
PermutationPair from_appendix_reroute(const PermutationPair& pair, const ElementLabel& a, const Perm& white,
                                      const Perm& black);
// First matching type predicate, in the order U, N, P1, P2, P3, P4.
TypeClass type_of(const Perm& white, const Perm& black, int a, int b);
// Tame 1A before 1B, then Tame 2, then Wild.
ExceptionalClass exceptional_of(const Perm& white, const Perm& black, int a, int b);
GenusEffect genus_effect_of(const Perm& white, const Perm& black, int a, int b);

}  // namespace dessin::appendix
