#include <doctest.h>

#include <cmath>

#include "qcube/rep.hpp"

using namespace qcube;

namespace {

Matrix outer(const Vector& v) { return v * v.adjoint(); }

EdgeWeighting square_weighting(double s) {
  EdgeWeighting c{2, {}};
  c.set(0b11, 1, std::sqrt(s));
  c.set(0b00, 0, std::sqrt(1.0 - s));
  c.set(0b00, 1, std::sqrt(s));
  c.set(0b11, 0, -std::sqrt(1.0 - s));
  return c;
}

}  // namespace

TEST_CASE("square representation matrices") {
  double t0 = 0.25, t1 = 0.75;
  Representation rho = canonical_representation(SimplexPoint({t0, t1}));
  CHECK(rho.space == std::vector<int>{0b00, 0b11});

  Matrix p0(2, 2), p3(2, 2), p1(2, 2), p2(2, 2);
  double cross = std::sqrt(t0 * t1);
  p0 << 1, 0, 0, 0;
  p3 << 0, 0, 0, 1;
  p1 << t0, cross, cross, t1;
  p2 << t1, -cross, -cross, t0;
  CHECK((rho.image(0b00) - p0).norm() <= 1e-15);
  CHECK((rho.image(0b11) - p3).norm() <= 1e-15);
  CHECK((rho.image(0b01) - p1).norm() <= 1e-15);
  CHECK((rho.image(0b10) - p2).norm() <= 1e-15);
}

TEST_CASE("cube representation columns") {
  double a = 0.5, b = std::sqrt(0.3), c = std::sqrt(0.45);
  Representation rho = canonical_representation(SimplexPoint({a * a, b * b, c * c}));
  CHECK(rho.space == std::vector<int>{0b000, 0b011, 0b101, 0b110});

  Vector psi001(4), psi010(4), psi100(4), psi111(4);
  psi001 << a, b, c, 0;
  psi010 << b, -a, 0, c;
  psi100 << c, 0, -a, -b;
  psi111 << 0, c, -b, a;
  CHECK((rho.image(0b001) - outer(psi001)).norm() <= 1e-15);
  CHECK((rho.image(0b010) - outer(psi010)).norm() <= 1e-15);
  CHECK((rho.image(0b100) - outer(psi100)).norm() <= 1e-15);
  CHECK((rho.image(0b111) - outer(psi111)).norm() <= 1e-15);
}

TEST_CASE("degenerate points") {
  Representation one = canonical_representation(SimplexPoint({1.0}));
  CHECK(one.dim() == 1);
  CHECK(one.image(0)(0, 0) == Complex(1.0));
  CHECK(one.image(1)(0, 0) == Complex(1.0));

  // basis vectors give diagonal 0/1 matrices
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) {
      std::vector<double> t(static_cast<std::size_t>(n), 0.0);
      t[static_cast<std::size_t>(k)] = 1.0;
      Representation rho = canonical_representation(SimplexPoint(t));
      for (const auto& [x, m] : rho.images) {
        CHECK((m - m.diagonal().asDiagonal().toDenseMatrix()).norm() <= 1e-15);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          double d = m(i, i).real();
          CHECK((d == 0.0 || d == 1.0));
        }
      }
    }
  }
}

TEST_CASE("inadmissible weightings are rejected with the report") {
  EdgeWeighting bad{2, {}};
  double r = 1.0 / std::sqrt(2.0);
  bad.set(0b00, 0, r);
  bad.set(0b00, 1, r);
  bad.set(0b11, 0, r);
  bad.set(0b11, 1, r);
  CHECK_THROWS_AS(induced_representation(bad), input_error);
}

TEST_CASE("representation invariants at random points") {
  Rng rng(41);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      Representation rho = canonical_representation(SimplexPoint(rng.simplex_point(n)));
      Report report = verify_representation(rho, 1e-12);
      CHECK(report.pass());
    }
  }
}

TEST_CASE("word evaluation") {
  Rng rng(43);
  Representation rho = canonical_representation(SimplexPoint(rng.simplex_point(3)));

  SUBCASE("empty word gives the vertex image") {
    for (int x = 0; x < 8; ++x)
      CHECK((evaluate_word(rho, PathWord{3, x, {}}) - rho.image(x)).norm() == 0.0);
  }

  SUBCASE("a connecting path yields a single nonzero entry") {
    // walk from 000 to 110 through the interior support
    Matrix m = evaluate_word(rho, PathWord{3, 0b000, {0, 1, 0, 2}});
    CHECK(std::abs(m(0, 3)) > 1e-6);
    for (Eigen::Index r = 0; r < 4; ++r) {
      for (Eigen::Index c = 0; c < 4; ++c) {
        if (r == 0 && c == 3) continue;
        CHECK(std::abs(m(r, c)) <= 1e-12);
      }
    }
  }

  SUBCASE("dimension mismatch is an input error") {
    CHECK_THROWS_AS(evaluate_word(rho, PathWord{2, 0, {0}}), input_error);
  }
}

TEST_CASE("decomposition into irreducible blocks") {
  Rng rng(47);

  SUBCASE("interior points are irreducible") {
    for (int n = 1; n <= 4; ++n) {
      auto blocks = decompose(canonical_weighting(SimplexPoint(rng.simplex_point(n))));
      REQUIRE(blocks.size() == 1);
      CHECK(blocks.front().rep.dim() == (1 << (n - 1)));
      CHECK(blocks.front().irreducible);
      CHECK(blocks.front().algebra_dimension == (1 << (n - 1)) * (1 << (n - 1)));
    }
  }

  SUBCASE("matching points split into singleton blocks") {
    auto blocks = decompose(canonical_weighting(SimplexPoint({1.0, 0.0})));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].rep.dim() == 1);
    CHECK(blocks[1].rep.dim() == 1);
    CHECK(blocks[0].component == std::vector<int>{0b00, 0b01});
    CHECK(blocks[1].component == std::vector<int>{0b10, 0b11});
  }

  SUBCASE("one vanishing direction halves the cube") {
    double s = 0.4;
    auto blocks = decompose(canonical_weighting(SimplexPoint({0.0, s, 1.0 - s})));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].rep.space == std::vector<int>{0b000, 0b110});
    CHECK(blocks[1].rep.space == std::vector<int>{0b011, 0b101});
    CHECK(blocks[0].rep.dim() == 2);
    CHECK(blocks[1].rep.dim() == 2);
  }

  SUBCASE("blocks reassemble the full representation") {
    SimplexPoint t({0.0, 0.35, 0.65, 0.0});
    EdgeWeighting c = canonical_weighting(t);
    Representation full = induced_representation(c);
    auto blocks = decompose(c);
    std::map<int, std::pair<std::size_t, int>> where;  // vertex -> (block, offset)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int i = 0; i < blocks[b].rep.dim(); ++i)
        where[blocks[b].rep.space[static_cast<std::size_t>(i)]] = {b, i};
    }
    for (int x = 0; x < 16; ++x) {
      Matrix rebuilt = Matrix::Zero(full.dim(), full.dim());
      for (int r = 0; r < full.dim(); ++r) {
        for (int cc = 0; cc < full.dim(); ++cc) {
          auto [br, ir] = where.at(full.space[static_cast<std::size_t>(r)]);
          auto [bc, ic] = where.at(full.space[static_cast<std::size_t>(cc)]);
          if (br == bc) rebuilt(r, cc) = blocks[br].rep.image(x)(ir, ic);
        }
      }
      CHECK((rebuilt - full.image(x)).norm() <= 1e-12);
    }
  }
}

TEST_CASE("simplex point recovery") {
  Rng rng(53);
  SUBCASE("exact on canonical weightings") {
    for (int n = 1; n <= 4; ++n) {
      SimplexPoint t(rng.simplex_point(n));
      SimplexPoint r = recover_simplex_point(canonical_weighting(t));
      for (int k = 0; k < n; ++k) CHECK(std::abs(r[k] - t[k]) <= 1e-15);
    }
  }
  SUBCASE("gauge invariant") {
    SimplexPoint t(rng.simplex_point(3));
    PhaseGauge lambda;
    for (int x = 0; x < 8; ++x) lambda[x] = rng.unit_phase();
    SimplexPoint r = recover_simplex_point(apply_gauge(canonical_weighting(t), lambda));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(r[k] - t[k]) <= 1e-15);
  }
  SUBCASE("square weighting") {
    SimplexPoint r = recover_simplex_point(square_weighting(0.3));
    CHECK(r[0] == doctest::Approx(0.7));
    CHECK(r[1] == doctest::Approx(0.3));
  }
  SUBCASE("vanishing edges are rejected") {
    CHECK_THROWS_AS(recover_simplex_point(canonical_weighting(SimplexPoint({1.0, 0.0}))),
                    input_error);
  }
}

TEST_CASE("gauge fixing") {
  Rng rng(59);

  SUBCASE("canonical weightings need no correction") {
    for (int n = 1; n <= 4; ++n) {
      SimplexPoint t(rng.simplex_point(n));
      GaugeFixResult fix = gauge_fix(canonical_weighting(t));
      CHECK(fix.residual <= 1e-12);
      for (const Edge& e : edges(n))
        CHECK(std::abs(fix.lambda.at(e.i) * fix.lambda.at(e.j) - 1.0) <= 1e-12);
    }
  }

  SUBCASE("random gaugings are reproduced") {
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 25; ++trial) {
        SimplexPoint t(rng.simplex_point(n));
        PhaseGauge lambda;
        for (int x = 0; x < (1 << n); ++x) lambda[x] = rng.unit_phase();
        EdgeWeighting gauged = apply_gauge(canonical_weighting(t), lambda);
        GaugeFixResult fix = gauge_fix(gauged);
        CHECK(fix.residual <= 1e-10);
        for (int k = 0; k < n; ++k) CHECK(std::abs(fix.t[k] - t[k]) <= 1e-12);
      }
    }
  }

  SUBCASE("square weighting") {
    GaugeFixResult fix = gauge_fix(square_weighting(0.3));
    CHECK(fix.residual <= 1e-12);
    CHECK(fix.t[0] == doctest::Approx(0.7));
    CHECK(fix.t[1] == doctest::Approx(0.3));
  }
}

TEST_CASE("classification") {
  Rng rng(61);

  SUBCASE("full support matches gauge fixing") {
    SimplexPoint t(rng.simplex_point(3));
    PhaseGauge lambda;
    for (int x = 0; x < 8; ++x) lambda[x] = rng.unit_phase();
    EdgeWeighting c = apply_gauge(canonical_weighting(t), lambda);
    auto blocks = classify(c);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks.front().component.size() == 8);
    CHECK(blocks.front().residual <= 1e-10);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(blocks.front().t[k] - t[k]) <= 1e-12);
  }

  SUBCASE("perfect matchings classify to basis vectors") {
    for (int n = 2; n <= 4; ++n) {
      for (int k = 0; k < n; ++k) {
        std::vector<double> t(static_cast<std::size_t>(n), 0.0);
        t[static_cast<std::size_t>(k)] = 1.0;
        auto blocks = classify(canonical_weighting(SimplexPoint(t)));
        CHECK(blocks.size() == (1u << (n - 1)));
        for (const auto& block : blocks) {
          CHECK(block.component.size() == 2);
          for (int kk = 0; kk < n; ++kk)
            CHECK(block.t[kk] == doctest::Approx(kk == k ? 1.0 : 0.0));
          CHECK(block.residual <= 1e-12);
        }
      }
    }
  }

  SUBCASE("embedded and gauged components are recovered with inserted zeros") {
    for (int trial = 0; trial < 20; ++trial) {
      int n = 3 + static_cast<int>(rng.next() % 2);
      int ell = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
      int sign = (rng.next() % 2) ? +1 : -1;
      SimplexPoint s(rng.simplex_point(n - 1));
      EdgeWeighting inner = canonical_weighting(s);
      PhaseGauge lambda;
      for (int x = 0; x < (1 << (n - 1)); ++x) lambda[x] = rng.unit_phase();
      EdgeWeighting c = embed_in_halfcube(apply_gauge(inner, lambda), ell, sign, n);

      auto blocks = classify(c);
      REQUIRE(blocks.size() == 1);
      const auto& block = blocks.front();
      CHECK(block.component.size() == (1u << (n - 1)));
      CHECK(block.residual <= 1e-10);
      CHECK(block.t[ell] == 0.0);
      for (int k = 0; k < n - 1; ++k) {
        int kk = k < ell ? k : k + 1;
        CHECK(std::abs(block.t[kk] - s[k]) <= 1e-12);
      }
    }
  }

  SUBCASE("mixed supports yield one entry per component") {
    // direction-0 matching on the lower half, nothing elsewhere
    EdgeWeighting c{2, {}};
    c.set(0b00, 0, 1.0);
    auto blocks = classify(c);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks.front().component == std::vector<int>{0b00, 0b01});
    CHECK(blocks.front().t[0] == doctest::Approx(1.0));
  }
}

TEST_CASE("boundary decomposition") {
  Rng rng(67);

  SUBCASE("square at a vertex point") {
    BoundaryDecomposition bd = boundary_decompose(SimplexPoint({0.0, 1.0}), 0);
    CHECK(bd.max_deviation <= 1e-12);
    CHECK(bd.direct_sum.dim() == 2);
  }

  SUBCASE("cube with leading zero") {
    double s = 0.35;
    BoundaryDecomposition bd = boundary_decompose(SimplexPoint({0.0, s, 1.0 - s}), 0);
    CHECK(bd.max_deviation <= 1e-10);
    // unitarity of the witness
    Matrix eye = Matrix::Identity(4, 4);
    CHECK((bd.unitary * bd.unitary.adjoint() - eye).norm() <= 1e-12);
  }

  SUBCASE("middle position needs the sign part") {
    double s = 0.35;
    BoundaryDecomposition bd = boundary_decompose(SimplexPoint({s, 0.0, 1.0 - s}), 1);
    CHECK(bd.max_deviation <= 1e-10);
    bool has_minus = false;
    for (Eigen::Index r = 0; r < bd.unitary.rows(); ++r) {
      for (Eigen::Index c = 0; c < bd.unitary.cols(); ++c)
        has_minus = has_minus || bd.unitary(r, c).real() < -0.5;
    }
    CHECK(has_minus);
  }

  SUBCASE("all positions and dimensions") {
    for (int n = 2; n <= 4; ++n) {
      for (int ell = 0; ell < n; ++ell) {
        std::vector<double> t = rng.simplex_point(n - 1);
        t.insert(t.begin() + ell, 0.0);
        BoundaryDecomposition bd = boundary_decompose(SimplexPoint(t), ell);
        CHECK(bd.max_deviation <= 1e-10);
        // conjugation preserves both partition-of-unity sums and all traces
        const int d = bd.direct_sum.dim();
        auto [u_all, v_all] = vertex_sets(n);
        Matrix u_sum = Matrix::Zero(d, d), v_sum = Matrix::Zero(d, d);
        for (int u : u_all)
          u_sum += bd.unitary * bd.direct_sum.image(u) * bd.unitary.adjoint();
        for (int v : v_all)
          v_sum += bd.unitary * bd.direct_sum.image(v) * bd.unitary.adjoint();
        Matrix eye = Matrix::Identity(d, d);
        CHECK((u_sum - eye).norm() <= 1e-10);
        CHECK((v_sum - eye).norm() <= 1e-10);
        for (int x = 0; x < (1 << n); ++x) {
          const Matrix& m = bd.direct_sum.image(x);
          Matrix conj = bd.unitary * m * bd.unitary.adjoint();
          CHECK(std::abs(m.trace() - conj.trace()) <= 1e-10);
        }
      }
    }
  }

  SUBCASE("nonzero coordinate is rejected") {
    CHECK_THROWS_AS(boundary_decompose(SimplexPoint({0.5, 0.5}), 0), input_error);
  }
}

TEST_CASE("intertwiners") {
  Rng rng(71);
  SimplexPoint t(rng.simplex_point(2));
  Representation rho = canonical_representation(t);

  SUBCASE("every representation intertwines with itself") {
    auto w = find_intertwiner(rho, rho);
    REQUIRE(w.has_value());
    for (int x = 0; x < 4; ++x)
      CHECK(((*w) * rho.image(x) - rho.image(x) * (*w)).norm() <= 1e-8);
  }

  SUBCASE("gauged pairs are equivalent via a diagonal unitary") {
    PhaseGauge lambda;
    for (int x = 0; x < 8; ++x) lambda[x] = rng.unit_phase();
    SimplexPoint t3(rng.simplex_point(3));
    Representation a = canonical_representation(t3);
    Representation b = induced_representation(apply_gauge(canonical_weighting(t3), lambda));
    auto w = find_intertwiner(a, b);
    REQUIRE(w.has_value());
    for (int x = 0; x < 8; ++x)
      CHECK(((*w) * a.image(x) - b.image(x) * (*w)).norm() <= 1e-8);
    // diagonal up to tolerance
    for (Eigen::Index r = 0; r < 4; ++r) {
      for (Eigen::Index c = 0; c < 4; ++c) {
        if (r != c) CHECK(std::abs((*w)(r, c)) <= 1e-8);
      }
    }
  }

  SUBCASE("distinct interior points are inequivalent") {
    SimplexPoint t1({0.3, 0.7});
    SimplexPoint t2({0.6, 0.4});
    Representation a = canonical_representation(t1);
    Representation b = canonical_representation(t2);
    // conjugation preserves traces of products, and these differ
    double trace_a = (a.image(0) * a.image(1)).trace().real();
    double trace_b = (b.image(0) * b.image(1)).trace().real();
    CHECK(std::abs(trace_a - trace_b) > 0.1);
    CHECK(!find_intertwiner(a, b).has_value());

    Representation a3 = canonical_representation(SimplexPoint({0.2, 0.3, 0.5}));
    Representation b3 = canonical_representation(SimplexPoint({0.5, 0.3, 0.2}));
    CHECK(!find_intertwiner(a3, b3).has_value());
  }

  SUBCASE("a nonzero solution space without unitaries is rejected") {
    // families sharing only one diagonal summand: every solution is singular
    Matrix e11 = Matrix::Zero(2, 2), e22 = Matrix::Zero(2, 2);
    e11(0, 0) = 1.0;
    e22(1, 1) = 1.0;
    std::vector<Matrix> fam_a{e11, e22};
    std::vector<Matrix> fam_b{e11, Matrix::Zero(2, 2)};
    CHECK(!find_intertwiner(fam_a, fam_b).has_value());
  }
}
