#include "qcube/paths.hpp"

#include <sstream>

namespace qcube {

void validate(const PathWord& w) {
  validate_dimension(w.n);
  if (w.base < 0 || w.base >= (1 << w.n)) throw input_error("path base out of range");
  for (int k : w.indices) {
    if (k < 0 || k >= w.n) throw input_error("path index out of range");
  }
}

int endpoint(const PathWord& w) {
  validate(w);
  int x = w.base;
  for (int k : w.indices) x ^= (1 << k);
  return x;
}

std::vector<int> vertex_sequence(const PathWord& w) {
  validate(w);
  std::vector<int> seq;
  seq.reserve(w.indices.size() + 1);
  int x = w.base;
  seq.push_back(x);
  for (int k : w.indices) {
    x ^= (1 << k);
    seq.push_back(x);
  }
  return seq;
}

bool is_loop(const PathWord& w) { return endpoint(w) == w.base; }

SignedWord canonicalize(const PathWord& w) {
  validate(w);
  SignedWord result{1, w};
  auto& seq = result.word.indices;
  // stable bubble sort; equal neighbors are never swapped, so every swap
  // flips the sign
  bool changed = !seq.empty();
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] > seq[i + 1]) {
        std::swap(seq[i], seq[i + 1]);
        result.sign = -result.sign;
        changed = true;
      }
    }
  }
  return result;
}

PathWord concat(const PathWord& a, const PathWord& b) {
  validate(a);
  validate(b);
  if (a.n != b.n) throw input_error("concat: dimension mismatch");
  if (endpoint(a) != b.base) throw input_error("concat: endpoint of first word is not base of second");
  PathWord result{a.n, a.base, a.indices};
  result.indices.insert(result.indices.end(), b.indices.begin(), b.indices.end());
  return result;
}

std::pair<PathWord, PathWord> loop_commutator_word_pair(const PathWord& mu,
                                                        const PathWord& nu) {
  if (mu.n != nu.n || mu.base != nu.base)
    throw input_error("loop_commutator_word_pair: words must share base and dimension");
  if (!is_loop(mu) || !is_loop(nu))
    throw input_error("loop_commutator_word_pair: both words must be loops");
  return {concat(mu, nu), concat(nu, mu)};
}

std::string to_string(const PathWord& w) {
  std::ostringstream os;
  os << "[" << w.base << ";";
  for (int k : w.indices) os << " " << k;
  os << "]";
  return os.str();
}

}  // namespace qcube
