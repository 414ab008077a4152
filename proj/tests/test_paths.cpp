#include <doctest.h>

#include "qcube/linalg.hpp"
#include "qcube/paths.hpp"
#include "qcube/rep.hpp"

using namespace qcube;

TEST_CASE("endpoint") {
  CHECK(endpoint(PathWord{2, 0, {0, 1}}) == 0b11);
  CHECK(endpoint(PathWord{3, 5, {}}) == 5);
  CHECK(endpoint(PathWord{2, 0, {0, 0}}) == 0);
  CHECK_THROWS_AS(endpoint(PathWord{2, 0, {2}}), input_error);
  CHECK_THROWS_AS(endpoint(PathWord{2, 4, {}}), input_error);
}

TEST_CASE("vertex sequence walks the flips") {
  CHECK(vertex_sequence(PathWord{3, 0, {0, 1, 0}}) ==
        std::vector<int>{0b000, 0b001, 0b011, 0b010});
}

TEST_CASE("loops have even direction counts") {
  CHECK(is_loop(PathWord{2, 0, {0, 1, 0, 1}}));
  CHECK(!is_loop(PathWord{2, 0, {0, 1}}));
  CHECK(is_loop(PathWord{3, 6, {}}));

  // parity soundness, exhaustive over short words
  for (int n = 1; n <= 3; ++n) {
    for (int base = 0; base < (1 << n); ++base) {
      std::vector<int> indices;
      // enumerate words of length <= 6 by counting in base n
      for (int len = 0; len <= 6; ++len) {
        long total = 1;
        for (int i = 0; i < len; ++i) total *= n;
        for (long code = 0; code < total; ++code) {
          indices.clear();
          long rest = code;
          for (int i = 0; i < len; ++i) {
            indices.push_back(static_cast<int>(rest % n));
            rest /= n;
          }
          PathWord w{n, base, indices};
          std::array<int, 3> counts{0, 0, 0};
          for (int k : indices) counts[static_cast<std::size_t>(k)]++;
          bool even = true;
          for (int k = 0; k < n; ++k) even = even && counts[static_cast<std::size_t>(k)] % 2 == 0;
          CHECK(is_loop(w) == even);
          CHECK(is_loop(w) == (endpoint(w) == base));
        }
      }
      if (n > 2) break;  // the base plays no role in the count; keep it quick
    }
  }
}

TEST_CASE("canonicalize sorts and tracks the sign") {
  CHECK(canonicalize(PathWord{2, 0, {1, 0}}) == SignedWord{-1, PathWord{2, 0, {0, 1}}});
  CHECK(canonicalize(PathWord{2, 0, {0, 0, 1}}) == SignedWord{1, PathWord{2, 0, {0, 0, 1}}});
  CHECK(canonicalize(PathWord{3, 0, {2, 1, 0}}) == SignedWord{-1, PathWord{3, 0, {0, 1, 2}}});
}

TEST_CASE("canonical sign agrees with the matrix calculus") {
  // numeric cross-check of the frozen signs above
  Rng rng(7);
  Representation rho = canonical_representation(SimplexPoint(rng.simplex_point(3)));
  for (const PathWord& w :
       {PathWord{3, 0, {1, 0}}, PathWord{3, 0, {2, 1, 0}}, PathWord{3, 5, {2, 0, 2, 1}}}) {
    SignedWord canon = canonicalize(w);
    Matrix lhs = evaluate_word(rho, w);
    Matrix rhs = static_cast<double>(canon.sign) * evaluate_word(rho, canon.word);
    CHECK((lhs - rhs).norm() <= 1e-10);
  }
}

TEST_CASE("canonicalize is idempotent with positive sign") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 4);
    PathWord w{n, static_cast<int>(rng.next() % (1ull << n)), {}};
    int len = static_cast<int>(rng.next() % 9);
    for (int i = 0; i < len; ++i)
      w.indices.push_back(static_cast<int>(rng.next() % static_cast<std::uint64_t>(n)));
    SignedWord canon = canonicalize(w);
    CHECK(std::is_sorted(canon.word.indices.begin(), canon.word.indices.end()));
    SignedWord again = canonicalize(canon.word);
    CHECK(again.sign == 1);
    CHECK(again.word == canon.word);
  }
}

TEST_CASE("concat requires matching endpoints") {
  PathWord a{2, 0, {0}};
  PathWord b{2, 1, {1}};
  CHECK(concat(a, b) == PathWord{2, 0, {0, 1}});
  CHECK(concat(a, PathWord{2, 1, {}}) == a);
  CHECK_THROWS_AS(concat(a, PathWord{2, 0, {1}}), input_error);
  CHECK_THROWS_AS(concat(a, PathWord{3, 1, {1}}), input_error);
}

TEST_CASE("loop concatenations commute symbolically") {
  auto [mn, nm] = loop_commutator_word_pair(PathWord{2, 0, {0, 0}}, PathWord{2, 0, {1, 1}});
  SignedWord canon_mn = canonicalize(mn);
  CHECK(canon_mn == canonicalize(nm));
  CHECK(canon_mn == SignedWord{1, PathWord{2, 0, {0, 0, 1, 1}}});

  auto [ab, ba] =
      loop_commutator_word_pair(PathWord{3, 0, {0, 1, 0, 1}}, PathWord{3, 0, {2, 2}});
  CHECK(canonicalize(ab) == canonicalize(ba));

  CHECK_THROWS_AS(loop_commutator_word_pair(PathWord{2, 0, {0}}, PathWord{2, 0, {1, 1}}),
                  input_error);
  CHECK_THROWS_AS(loop_commutator_word_pair(PathWord{2, 0, {0, 0}}, PathWord{2, 1, {0, 0}}),
                  input_error);

  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 4);
    int base = static_cast<int>(rng.next() % (1ull << n));
    auto loop = [&](int half) {
      std::vector<int> idx;
      for (int h = 0; h < half; ++h) {
        int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        idx.push_back(k);
        idx.push_back(k);
      }
      for (std::size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[rng.next() % i]);
      return PathWord{n, base, idx};
    };
    auto [x, y] = loop_commutator_word_pair(loop(1 + static_cast<int>(rng.next() % 3)),
                                            loop(1 + static_cast<int>(rng.next() % 3)));
    CHECK(canonicalize(x) == canonicalize(y));
  }
}
