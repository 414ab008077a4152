#include "qcube/linalg.hpp"

#include <cmath>
#include <numbers>

#include "qcube/errors.hpp"

namespace qcube {

double distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("distance: shape mismatch");
  return (a - b).norm();
}

double projection_defect(const Matrix& a) {
  double idem = (a * a - a).norm();
  double herm = (a.adjoint() - a).norm();
  return std::max(idem, herm);
}

int numerical_rank(const Matrix& a, double rel) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel * sv(0)) ++rank;
  }
  return rank;
}

Matrix polar_unitary(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::vector<Vector> nullspace(const Matrix& a, double rel) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = 1e-12;
  if (sv.size() > 0) cutoff = std::max(rel * sv(0), 1e-12);
  std::vector<Vector> basis;
  Eigen::Index cols = a.cols();
  for (Eigen::Index i = 0; i < cols; ++i) {
    double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= cutoff) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

namespace {

// Gram-Schmidt insertion with one re-orthogonalization pass. Returns true
// when the candidate contributed a new direction.
bool absorb(std::vector<Vector>& basis, const Matrix& candidate, double rel_cut) {
  Vector v = Eigen::Map<const Vector>(candidate.data(), candidate.size());
  double original = v.norm();
  if (original < 1e-13) return false;
  for (int round = 0; round < 2; ++round) {
    for (const Vector& b : basis) v -= b.dot(v) * b;
  }
  if (v.norm() <= rel_cut * original) return false;
  basis.push_back(v.normalized());
  return true;
}

}  // namespace

int generated_span_dimension(const std::vector<Matrix>& generators, int max_len,
                             bool* saturated) {
  if (generators.empty()) {
    if (saturated) *saturated = true;
    return 0;
  }
  const Eigen::Index d = generators.front().rows();
  const int full = static_cast<int>(d * d);
  constexpr double rel_cut = 1e-8;

  std::vector<Vector> basis;
  std::vector<Matrix> layer;
  for (const Matrix& g : generators) {
    if (absorb(basis, g, rel_cut)) layer.push_back(g);
  }

  int len = 1;
  while (!layer.empty() && static_cast<int>(basis.size()) < full && len < max_len) {
    std::vector<Matrix> next;
    for (const Matrix& w : layer) {
      for (const Matrix& g : generators) {
        Matrix prod = w * g;
        if (absorb(basis, prod, rel_cut)) next.push_back(std::move(prod));
      }
    }
    layer = std::move(next);
    ++len;
  }

  if (saturated) *saturated = layer.empty() || static_cast<int>(basis.size()) == full;
  return static_cast<int>(basis.size());
}

std::uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::complex<double> Rng::unit_phase() {
  double theta = 2.0 * std::numbers::pi * uniform();
  return {std::cos(theta), std::sin(theta)};
}

std::vector<double> Rng::simplex_point(int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& x : t) {
    double u = 0.0;
    while (u == 0.0) u = uniform();
    x = -std::log(u);
    sum += x;
  }
  for (double& x : t) x /= sum;
  return t;
}

Matrix Rng::su2() {
  std::complex<double> alpha(gaussian(), gaussian());
  std::complex<double> beta(gaussian(), gaussian());
  double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  while (norm < 1e-8) {
    alpha = {gaussian(), gaussian()};
    beta = {gaussian(), gaussian()};
    norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  }
  alpha /= norm;
  beta /= norm;
  Matrix x(2, 2);
  x << alpha, beta, -std::conj(beta), std::conj(alpha);
  return x;
}

}  // namespace qcube
