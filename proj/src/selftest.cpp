#include "qcube/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <sstream>

#include "qcube/funcalg.hpp"
#include "qcube/magic.hpp"
#include "qcube/rep.hpp"

namespace qcube {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string scale_note(const std::string& text, double elapsed) {
  std::ostringstream os;
  os << text << "; " << elapsed << "s";
  return os.str();
}

SimplexPoint random_simplex(Rng& rng, int n) { return SimplexPoint(rng.simplex_point(n)); }

PathWord random_loop(Rng& rng, int n, int base, int half_length) {
  std::vector<int> indices;
  for (int h = 0; h < half_length; ++h) {
    int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
    indices.push_back(k);
    indices.push_back(k);
  }
  for (std::size_t i = indices.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next() % i);
    std::swap(indices[i - 1], indices[j]);
  }
  return PathWord{n, base, std::move(indices)};
}

PathWord random_word(Rng& rng, int n, int length) {
  PathWord w{n, static_cast<int>(rng.next() % (1ull << n)), {}};
  for (int i = 0; i < length; ++i)
    w.indices.push_back(static_cast<int>(rng.next() % static_cast<std::uint64_t>(n)));
  return w;
}

PhaseGauge random_gauge(Rng& rng, int n) {
  PhaseGauge lambda;
  for (int x = 0; x < (1 << n); ++x) lambda[x] = rng.unit_phase();
  return lambda;
}

Check make_check(const std::string& name, double violation, double tol,
                 const std::string& detail, double elapsed, double budget) {
  Check c{name, violation, tol, violation <= tol && elapsed < budget,
          scale_note(detail, elapsed)};
  return c;
}

}  // namespace

Check suite_representation_relations(const RunConfig& cfg) {
  auto start = Clock::now();
  Rng rng(cfg.seed ^ 0x01);
  double worst = 0.0;
  const double tol = 1e-10;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    for (int trial = 0; trial < cfg.sample_count; ++trial) {
      Representation rho = canonical_representation(random_simplex(rng, n));
      worst = std::max(worst, verify_representation(rho, tol).max_violation());
    }
  }
  std::ostringstream os;
  os << cfg.sample_count << " random points per n";
  return make_check("representation-relations", worst, tol, os.str(), seconds_since(start),
                    10.0);
}

Check suite_interval_fiber_formula(const RunConfig& cfg) {
  auto start = Clock::now();
  const double tol = 1e-14;
  double worst = 0.0;

  // endpoint fibers are diagonal
  for (double endpoint : {0.0, 1.0}) {
    auto images = fiber_at(SimplexPoint({endpoint, 1.0 - endpoint}));
    for (const auto& [x, m] : images) {
      worst = std::max(worst, std::max(std::abs(m(0, 1)), std::abs(m(1, 0))));
    }
  }

  // interior fibers reproduce the classical two-projection matrices
  Rng rng(cfg.seed ^ 0x02);
  std::vector<double> params;
  for (int i = 0; i <= cfg.grid_resolution; ++i)
    params.push_back(static_cast<double>(i) / cfg.grid_resolution);
  for (int i = 0; i < 16; ++i) params.push_back(rng.uniform());
  for (double t0 : params) {
    auto images = fiber_at(SimplexPoint({t0, 1.0 - t0}));
    Matrix p = images.at(0);
    Matrix q = images.at(1);
    Matrix p_expect(2, 2), q_expect(2, 2);
    p_expect << 1, 0, 0, 0;
    double cross = std::sqrt(t0 * (1.0 - t0));
    q_expect << t0, cross, cross, 1.0 - t0;
    worst = std::max(worst, (p - p_expect).cwiseAbs().maxCoeff());
    worst = std::max(worst, (q - q_expect).cwiseAbs().maxCoeff());
  }
  return make_check("interval-fiber-formula", worst, tol,
                    "endpoints diagonal + interior 2x2 formula", seconds_since(start), 10.0);
}

Check suite_rank_one_subhomogeneity(const RunConfig& cfg) {
  auto start = Clock::now();
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    for (const SimplexPoint& t : simplex_grid(n, 5).points) {
      Representation rho = canonical_representation(t);
      for (const auto& [x, m] : rho.images) {
        int r = numerical_rank(m);
        if (r > 1) worst = std::max(worst, static_cast<double>(r - 1));
      }
      for (const Block& block : decompose(canonical_weighting(t))) {
        int excess = block.rep.dim() - (1 << (n - 1));
        if (excess > 0) worst = std::max(worst, static_cast<double>(excess));
        if (!block.irreducible) worst = std::max(worst, 1.0);
      }
    }
  }
  return make_check("rank-one-subhomogeneity", worst, 0.0, "resolution-5 grid, exhaustive",
                    seconds_since(start), 60.0);
}

Check suite_loop_commutation(const RunConfig& cfg) {
  auto start = Clock::now();
  Rng rng(cfg.seed ^ 0x04);
  const double tol = 1e-10;
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    Representation rho = canonical_representation(random_simplex(rng, n));
    for (int trial = 0; trial < cfg.loop_pairs; ++trial) {
      if (trial % 100 == 0) rho = canonical_representation(random_simplex(rng, n));
      int base = static_cast<int>(rng.next() % (1ull << n));
      PathWord mu = random_loop(rng, n, base, 1 + static_cast<int>(rng.next() % 3));
      PathWord nu = random_loop(rng, n, base, 1 + static_cast<int>(rng.next() % 3));
      auto [mn, nm] = loop_commutator_word_pair(mu, nu);
      if (!(canonicalize(mn) == canonicalize(nm))) worst = std::max(worst, 1.0);
      Matrix pm = evaluate_word(rho, mu);
      Matrix pn = evaluate_word(rho, nu);
      worst = std::max(worst, (pm * pn - pn * pm).norm());
    }
  }
  std::ostringstream os;
  os << cfg.loop_pairs << " loop pairs per n, random interior points";
  return make_check("loop-commutation", worst, tol, os.str(), seconds_since(start), 30.0);
}

Check suite_sign_calculus(const RunConfig& cfg) {
  auto start = Clock::now();
  Rng rng(cfg.seed ^ 0x05);
  const double tol = 1e-10;
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    Representation rho = canonical_representation(random_simplex(rng, n));
    for (int trial = 0; trial < cfg.word_count; ++trial) {
      if (trial % 100 == 0) rho = canonical_representation(random_simplex(rng, n));
      PathWord w = random_word(rng, n, static_cast<int>(rng.next() % 9));
      SignedWord canon = canonicalize(w);
      Matrix lhs = evaluate_word(rho, w);
      Matrix rhs = static_cast<double>(canon.sign) * evaluate_word(rho, canon.word);
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  std::ostringstream os;
  os << cfg.word_count << " random words per n";
  return make_check("sign-calculus", worst, tol, os.str(), seconds_since(start), 30.0);
}

Check suite_gauge_fixing_round_trip(const RunConfig& cfg) {
  auto start = Clock::now();
  Rng rng(cfg.seed ^ 0x06);
  const double residual_tol = 1e-10;
  const double recovery_tol = 1e-12;
  double worst_residual = 0.0, worst_recovery = 0.0;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    for (int trial = 0; trial < cfg.sample_count; ++trial) {
      SimplexPoint t = random_simplex(rng, n);
      EdgeWeighting gauged = apply_gauge(canonical_weighting(t), random_gauge(rng, n));
      GaugeFixResult fix = gauge_fix(gauged);
      worst_residual = std::max(worst_residual, fix.residual);
      for (int k = 0; k < n; ++k)
        worst_recovery = std::max(worst_recovery, std::abs(fix.t[k] - t[k]));
      SimplexPoint recovered = recover_simplex_point(gauged);
      for (int k = 0; k < n; ++k)
        worst_recovery = std::max(worst_recovery, std::abs(recovered[k] - t[k]));
    }
  }
  // two clauses with different tolerances; report the worst ratio
  double worst = std::max(worst_residual / residual_tol, worst_recovery / recovery_tol);
  std::ostringstream os;
  os << cfg.sample_count << " random gaugings per n; edge residual " << worst_residual
     << " <= 1e-10, recovery error " << worst_recovery << " <= 1e-12 (normalized)";
  return make_check("gauge-fixing-round-trip", worst, 1.0, os.str(), seconds_since(start),
                    30.0);
}

Check suite_boundary_decomposition(const RunConfig& cfg) {
  auto start = Clock::now();
  Rng rng(cfg.seed ^ 0x07);
  const double tol = 1e-10;
  double worst = 0.0;
  for (int n = 2; n <= std::min(cfg.max_n, 4); ++n) {
    for (int ell = 0; ell < n; ++ell) {
      for (int trial = 0; trial < cfg.boundary_samples; ++trial) {
        std::vector<double> t = rng.simplex_point(n - 1);
        t.insert(t.begin() + ell, 0.0);
        BoundaryDecomposition bd = boundary_decompose(SimplexPoint(t), ell);
        worst = std::max(worst, bd.max_deviation);
      }
    }
  }
  std::ostringstream os;
  os << cfg.boundary_samples << " random reduced points per (n, position)";
  return make_check("boundary-decomposition", worst, tol, os.str(), seconds_since(start), 30.0);
}

Check suite_fiberwise_surjectivity(const RunConfig& cfg) {
  auto start = Clock::now();
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    for (const SimplexPoint& t : simplex_grid(n, 5).points) {
      int expected = 0;
      for (const auto& block : block_structure(t).blocks) {
        expected += static_cast<int>(block.size() * block.size());
      }
      int dim = generated_algebra_dimension(t);
      worst = std::max(worst, static_cast<double>(std::abs(dim - expected)));
    }
  }
  return make_check("fiberwise-surjectivity", worst, 0.0,
                    "span saturation vs block dimension count, resolution-5 grid",
                    seconds_since(start), 120.0);
}

Check suite_block_diagonal_form(const RunConfig& cfg) {
  auto start = Clock::now();
  const double tol = 1e-12;
  double worst = 0.0;
  for (int n = 1; n <= std::min(cfg.max_n, 4); ++n) {
    for (const SimplexPoint& t : simplex_grid(n, cfg.grid_resolution).points) {
      auto images = fiber_at(t);
      for (const auto& [x, m] : images) {
        if (!is_t_block_diagonal(m, t, tol)) worst = std::max(worst, 1.0);
      }
    }
  }
  std::ostringstream os;
  os << "all generators, resolution-" << cfg.grid_resolution << " grid";
  return make_check("t-block-diagonal-form", worst, 0.0, os.str(), seconds_since(start), 60.0);
}

Check suite_magic_fill_up(const RunConfig& cfg) {
  auto start = Clock::now();
  const double magic_tol = 1e-12;
  const double witness_tol = 1e-8;
  const double table_tol = 1e-12;

  std::vector<SimplexPoint> points = simplex_grid(3, cfg.grid_resolution).points;
  points.emplace_back(std::vector<double>{1.0, 0.0, 0.0});
  points.emplace_back(std::vector<double>{0.0, 1.0, 0.0});
  points.emplace_back(std::vector<double>{0.0, 0.0, 1.0});

  double worst_magic = 0.0, worst_witness = 0.0, worst_table = 0.0;
  const auto& pauli = pauli_basis();
  for (const SimplexPoint& t : points) {
    Matrix x = su2_from_simplex(t);
    MagicMatrix grid = pauli_model(x);
    worst_magic =
        std::max(worst_magic, verify_magic(grid, MagicKind::Unitary, magic_tol).max_violation());

    FillUpResult fill = fill_up(t, witness_tol);
    worst_witness = std::max(worst_witness, fill.residual);

    // coordinate table of the conjugated model
    double a = std::sqrt(t[0]), b = std::sqrt(t[1]), c = std::sqrt(t[2]);
    Matrix xadj = x.adjoint();
    auto coords = [&](int i, int j) { return pauli_coords(xadj * pauli[i] * x * pauli[j]); };
    Vector expected(4);
    auto table_gap = [&](int i, int j, Complex e0, Complex e1, Complex e2, Complex e3) {
      expected << e0, e1, e2, e3;
      return (coords(i, j) - expected).cwiseAbs().maxCoeff();
    };
    double table = 0.0;
    table = std::max(table, table_gap(0, 3, 0, 0, 0, 1));
    table = std::max(table, table_gap(0, 2, 0, 0, 1, 0));
    table = std::max(table, table_gap(0, 1, 0, 1, 0, 0));
    table = std::max(table, table_gap(0, 0, 1, 0, 0, 0));
    table = std::max(table, table_gap(1, 3, a, Complex(0, b), Complex(0, -c), 0));
    table = std::max(table, table_gap(1, 2, b, Complex(0, -a), 0, Complex(0, c)));
    table = std::max(table, table_gap(1, 1, c, 0, Complex(0, a), Complex(0, -b)));
    table = std::max(table, table_gap(1, 0, 0, c, b, a));
    worst_table = std::max(worst_table, table);
  }
  // three clauses with different tolerances; report the worst ratio
  double worst = std::max({worst_magic / magic_tol, worst_witness / witness_tol,
                           worst_table / table_tol});
  std::ostringstream os;
  os << "resolution-" << cfg.grid_resolution << " grid plus vertices; magic violation "
     << worst_magic << " <= 1e-12, witness residual " << worst_witness
     << " <= 1e-8, coordinate tables " << worst_table << " <= 1e-12 (normalized)";
  return make_check("magic-fill-up", worst, 1.0, os.str(), seconds_since(start), 30.0);
}

Report run_verification(const RunConfig& cfg) {
  struct Suite {
    const char* name;
    Check (*run)(const RunConfig&);
  };
  static constexpr Suite suites[] = {
      {"representation-relations", suite_representation_relations},
      {"interval-fiber-formula", suite_interval_fiber_formula},
      {"rank-one-subhomogeneity", suite_rank_one_subhomogeneity},
      {"loop-commutation", suite_loop_commutation},
      {"sign-calculus", suite_sign_calculus},
      {"gauge-fixing-round-trip", suite_gauge_fixing_round_trip},
      {"boundary-decomposition", suite_boundary_decomposition},
      {"fiberwise-surjectivity", suite_fiberwise_surjectivity},
      {"t-block-diagonal-form", suite_block_diagonal_form},
      {"magic-fill-up", suite_magic_fill_up},
  };

  Report report{"verification suites", {}};
  for (const Suite& suite : suites) {
    // an escaping exception is a failed criterion, not a crashed run
    try {
      report.add_check(suite.run(cfg));
    } catch (const std::exception& e) {
      report.add_check({suite.name, std::numeric_limits<double>::infinity(), 0.0, false,
                        std::string("aborted: ") + e.what()});
    }
  }
  return report;
}

}  // namespace qcube
