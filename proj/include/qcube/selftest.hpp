#pragma once

#include <cstdint>

#include "qcube/report.hpp"

namespace qcube {

/// Scales and seed for the verification suites. The tolerances inside the
/// suites are fixed; only the sizes and the dimension cap are configurable.
struct RunConfig {
  double tolerance = 1e-10;
  int max_n = 4;
  int grid_resolution = 10;
  std::uint64_t seed = 0x5eed;
  int sample_count = 200;
  int loop_pairs = 500;
  int word_count = 500;
  int boundary_samples = 50;
};

Check suite_representation_relations(const RunConfig& cfg);
Check suite_interval_fiber_formula(const RunConfig& cfg);
Check suite_rank_one_subhomogeneity(const RunConfig& cfg);
Check suite_loop_commutation(const RunConfig& cfg);
Check suite_sign_calculus(const RunConfig& cfg);
Check suite_gauge_fixing_round_trip(const RunConfig& cfg);
Check suite_boundary_decomposition(const RunConfig& cfg);
Check suite_fiberwise_surjectivity(const RunConfig& cfg);
Check suite_block_diagonal_form(const RunConfig& cfg);
Check suite_magic_fill_up(const RunConfig& cfg);

/// Runs all ten suites in order.
Report run_verification(const RunConfig& cfg);

}  // namespace qcube
