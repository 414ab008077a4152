#include <doctest.h>

#include <bit>
#include <cmath>

#include "qcube/funcalg.hpp"

using namespace qcube;

TEST_CASE("block structure") {
  BlockStructure diag = block_structure(SimplexPoint({1.0, 0.0}));
  CHECK(diag.blocks == std::vector<std::vector<int>>{{0b00}, {0b11}});

  BlockStructure full = block_structure(SimplexPoint({0.4, 0.6}));
  CHECK(full.blocks == std::vector<std::vector<int>>{{0b00, 0b11}});

  BlockStructure quarters = block_structure(SimplexPoint({0.0, 0.0, 1.0}));
  CHECK(quarters.blocks.size() == 4);
  for (const auto& b : quarters.blocks) CHECK(b.size() == 1);

  // the count law: alpha zeros give 2^alpha blocks of size 2^(n-1-alpha)
  Rng rng(5);
  for (int n = 1; n <= 4; ++n) {
    for (unsigned pattern = 1; pattern < (1u << n); ++pattern) {
      int on = std::popcount(pattern);
      std::vector<double> t(static_cast<std::size_t>(n), 0.0);
      auto interior = rng.simplex_point(on);
      int slot = 0;
      for (int k = 0; k < n; ++k) {
        if ((pattern >> k) & 1) t[static_cast<std::size_t>(k)] = interior[slot++];
      }
      BlockStructure bs = block_structure(SimplexPoint(t));
      int alpha = n - on;
      CHECK(static_cast<int>(bs.blocks.size()) == (1 << alpha));
      for (const auto& b : bs.blocks)
        CHECK(static_cast<int>(b.size()) == (1 << (n - 1 - alpha)));
    }
  }
}

TEST_CASE("near-zero diagnostics") {
  CHECK(diagnose_near_zeros(SimplexPoint({0.0, 1.0})).pass());
  CHECK(!diagnose_near_zeros(SimplexPoint({1e-16, 1.0 - 1e-16})).pass());
}

TEST_CASE("t-block diagonal test") {
  SimplexPoint t({0.7, 0.3, 0.0});
  auto images = fiber_at(t);
  for (const auto& [x, m] : images) CHECK(is_t_block_diagonal(m, t, 1e-12));

  Matrix eye = Matrix::Identity(4, 4);
  CHECK(is_t_block_diagonal(eye, t, 1e-12));
  Matrix ones = Matrix::Ones(4, 4);
  CHECK(!is_t_block_diagonal(ones, t, 1e-12));
  // interior points have a single block, so anything passes
  CHECK(is_t_block_diagonal(ones, SimplexPoint({0.2, 0.3, 0.5}), 1e-12));

  CHECK_THROWS_AS(is_t_block_diagonal(Matrix::Identity(3, 3), t, 1e-12), input_error);
}

TEST_CASE("fibers at the interval recover the classical picture") {
  for (double endpoint : {0.0, 1.0}) {
    auto images = fiber_at(SimplexPoint({endpoint, 1.0 - endpoint}));
    for (const auto& [x, m] : images) {
      CHECK(std::abs(m(0, 1)) <= 1e-15);
      CHECK(std::abs(m(1, 0)) <= 1e-15);
    }
  }
  auto images = fiber_at(SimplexPoint({0.3, 0.7}));
  Matrix q(2, 2);
  double cross = std::sqrt(0.3 * 0.7);
  q << 0.3, cross, cross, 0.7;
  CHECK((images.at(1) - q).norm() <= 1e-14);
}

TEST_CASE("fibers vary continuously along the grid") {
  int res = 20;
  SimplexGrid grid = simplex_grid(2, res);
  double step = 1.0 / res;
  for (std::size_t i = 0; i + 1 < grid.points.size(); ++i) {
    auto a = fiber_at(grid.points[i]);
    auto b = fiber_at(grid.points[i + 1]);
    for (int x = 0; x < 4; ++x) {
      // entries are products of square roots, so Holder-1/2 in the coordinates
      CHECK((a.at(x) - b.at(x)).cwiseAbs().maxCoeff() <= 2.01 * std::sqrt(step));
    }
  }
}

TEST_CASE("generated algebra dimensions") {
  CHECK(generated_algebra_dimension(SimplexPoint({0.5, 0.5})) == 4);
  CHECK(generated_algebra_dimension(SimplexPoint({1.0, 0.0})) == 2);
  CHECK(generated_algebra_dimension(SimplexPoint({0.2, 0.3, 0.5})) == 16);

  // matches the block count law on a small grid
  for (int n = 1; n <= 3; ++n) {
    for (const SimplexPoint& t : simplex_grid(n, 3).points) {
      int expected = 0;
      for (const auto& block : block_structure(t).blocks)
        expected += static_cast<int>(block.size() * block.size());
      CHECK(generated_algebra_dimension(t) == expected);
    }
  }
}

TEST_CASE("simplex grids") {
  SimplexGrid grid = simplex_grid(2, 2);
  REQUIRE(grid.points.size() == 3);
  CHECK(grid.points[0].entries() == std::vector<double>{1.0, 0.0});
  CHECK(grid.points[1].entries() == std::vector<double>{0.5, 0.5});
  CHECK(grid.points[2].entries() == std::vector<double>{0.0, 1.0});

  // stars and bars count, and all vertices present
  auto binomial = [](int a, int b) {
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int n = 1; n <= 4; ++n) {
    for (int res : {1, 2, 5}) {
      SimplexGrid g = simplex_grid(n, res);
      CHECK(static_cast<long>(g.points.size()) == binomial(res + n - 1, n - 1));
      for (int k = 0; k < n; ++k) {
        bool found = false;
        for (const SimplexPoint& t : g.points) {
          bool is_vertex = t[k] == 1.0;
          for (int kk = 0; kk < n && is_vertex; ++kk)
            is_vertex = kk == k || t[kk] == 0.0;
          found = found || is_vertex;
        }
        CHECK(found);
      }
    }
  }
  CHECK_THROWS_AS(simplex_grid(2, 0), input_error);
}

TEST_CASE("signed-word identities hold across the grid") {
  // finite faithfulness evidence: canonical-form identities cannot tell
  // fibers apart anywhere
  Rng rng(73);
  for (int n = 1; n <= 3; ++n) {
    std::vector<PathWord> words;
    for (int i = 0; i < 20; ++i) {
      PathWord w{n, static_cast<int>(rng.next() % (1ull << n)), {}};
      int len = static_cast<int>(rng.next() % 7);
      for (int j = 0; j < len; ++j)
        w.indices.push_back(static_cast<int>(rng.next() % static_cast<std::uint64_t>(n)));
      words.push_back(std::move(w));
    }
    for (const SimplexPoint& t : simplex_grid(n, 3).points) {
      Representation rho = canonical_representation(t);
      for (const PathWord& w : words) {
        SignedWord canon = canonicalize(w);
        Matrix lhs = evaluate_word(rho, w);
        Matrix rhs = static_cast<double>(canon.sign) * evaluate_word(rho, canon.word);
        CHECK((lhs - rhs).norm() <= 1e-10);
      }
    }
  }
}
