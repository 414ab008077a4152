#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcube/hypercube.hpp"

namespace qcube {

/// A walk in Q_n described by its starting vertex plus the sequence of flip
/// directions taken at each step. The vertex sequence is always derived,
/// never stored.
struct PathWord {
  int n = 1;
  int base = 0;
  std::vector<int> indices;

  bool operator==(const PathWord&) const = default;
};

/// A path word together with a sign in {+1, -1}. In canonical form the
/// index sequence is nondecreasing.
struct SignedWord {
  int sign = 1;
  PathWord word;

  bool operator==(const SignedWord&) const = default;
};

void validate(const PathWord& w);

/// Vertex reached after applying the flips of w in order.
int endpoint(const PathWord& w);

/// The full vertex sequence of w, length indices.size() + 1.
std::vector<int> vertex_sequence(const PathWord& w);

/// True iff every direction occurs an even number of times, equivalently
/// endpoint(w) == w.base.
bool is_loop(const PathWord& w);

/// Sorts the indices nondecreasing by adjacent transpositions and tracks the
/// sign: each swap of two unequal adjacent indices contributes a factor -1,
/// swaps of equal indices never happen. The algebra element of w equals
/// sign times the element of the canonical word.
SignedWord canonicalize(const PathWord& w);

/// Path composition; requires endpoint(a) == b.base.
PathWord concat(const PathWord& a, const PathWord& b);

/// For two loops at the same base, the pair (concat(mu,nu), concat(nu,mu)).
/// Their canonical signed words always agree.
std::pair<PathWord, PathWord> loop_commutator_word_pair(const PathWord& mu,
                                                        const PathWord& nu);

std::string to_string(const PathWord& w);

}  // namespace qcube
