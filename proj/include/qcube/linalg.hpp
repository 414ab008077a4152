#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace qcube {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Frobenius norm of the difference; the norm used by all residual checks.
double distance(const Matrix& a, const Matrix& b);

/// Worst absolute deviation of A from a self-adjoint idempotent.
double projection_defect(const Matrix& a);

/// Rank decided by singular values above rel * (largest singular value).
int numerical_rank(const Matrix& a, double rel = 1e-8);

/// Unitary factor of the polar decomposition a = Q |a| (via SVD).
Matrix polar_unitary(const Matrix& a);

/// Orthonormal basis of the right nullspace of `a`, as columns.
/// Singular values below max(rel * sigma_max, 1e-12) count as zero.
std::vector<Vector> nullspace(const Matrix& a, double rel = 1e-10);

/// Dimension of the linear span of all products of the generators, grown
/// breadth-first by right multiplication up to words of length `max_len`.
/// The span always stabilizes at or below d*d; `saturated`, when given,
/// reports whether growth stopped before the length cap was hit.
int generated_span_dimension(const std::vector<Matrix>& generators, int max_len,
                             bool* saturated = nullptr);

/// Deterministic generator for reproducible sweeps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next();
  double uniform();                       // [0, 1)
  double gaussian();
  std::complex<double> unit_phase();      // random point on the circle
  std::vector<double> simplex_point(int n);  // interior point of the simplex
  Matrix su2();                           // Haar-ish random SU(2) element

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qcube
