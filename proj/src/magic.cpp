#include "qcube/magic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qcube {

namespace {
constexpr Complex kI{0.0, 1.0};
}

const std::array<Matrix, 4>& pauli_basis() {
  static const std::array<Matrix, 4> basis = [] {
    std::array<Matrix, 4> b{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    b[0] << 1, 0, 0, 1;
    b[1] << 0, 1, 1, 0;
    b[2] << 0, -kI, kI, 0;
    b[3] << 1, 0, 0, -1;
    return b;
  }();
  return basis;
}

Vector pauli_coords(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw input_error("pauli_coords expects a 2x2 matrix");
  Vector coords(4);
  const auto& basis = pauli_basis();
  for (int i = 0; i < 4; ++i) coords(i) = (basis[i].adjoint() * a).trace() / 2.0;
  return coords;
}

Matrix pauli_matrix(const Vector& coords) {
  if (coords.size() != 4) throw input_error("pauli_matrix expects 4 coordinates");
  Matrix a = Matrix::Zero(2, 2);
  const auto& basis = pauli_basis();
  for (int i = 0; i < 4; ++i) a += coords(i) * basis[i];
  return a;
}

Matrix span_projection(const Matrix& x) {
  Vector v = pauli_coords(x);
  double norm = v.norm();
  if (norm <= 1e-14) throw input_error("span_projection of the zero matrix is undefined");
  Vector u = v / norm;
  return u * u.adjoint();
}

Matrix left_multiplication_operator(const Matrix& x) {
  if (x.rows() != 2 || x.cols() != 2)
    throw input_error("left_multiplication_operator expects a 2x2 matrix");
  Matrix op(4, 4);
  const auto& basis = pauli_basis();
  for (int j = 0; j < 4; ++j) op.col(j) = pauli_coords(x * basis[j]);
  return op;
}

const Matrix& MagicMatrix::at(int i, int j) const {
  if (i < 1 || i > rows || j < 1 || j > cols) throw input_error("magic matrix index out of range");
  return entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Report verify_magic(const MagicMatrix& grid, MagicKind kind, double tol) {
  Report report{"magic matrix", {}};
  if (grid.rows < 1 || grid.cols < 1 || grid.entries.empty())
    throw input_error("verify_magic: empty grid");
  const Eigen::Index d = grid.at(1, 1).rows();
  Matrix eye = Matrix::Identity(d, d);

  double proj = 0.0;
  for (int i = 1; i <= grid.rows; ++i) {
    for (int j = 1; j <= grid.cols; ++j) proj = std::max(proj, projection_defect(grid.at(i, j)));
  }
  report.add("entries are projections", proj, tol);

  double row_sum = 0.0;
  for (int i = 1; i <= grid.rows; ++i) {
    Matrix sum = Matrix::Zero(d, d);
    for (int j = 1; j <= grid.cols; ++j) sum += grid.at(i, j);
    row_sum = std::max(row_sum, (sum - eye).norm());
  }
  report.add("rows sum to identity", row_sum, tol);

  double col_orth = 0.0;
  for (int j = 1; j <= grid.cols; ++j) {
    for (int i1 = 1; i1 <= grid.rows; ++i1) {
      for (int i2 = i1 + 1; i2 <= grid.rows; ++i2) {
        col_orth = std::max(col_orth, (grid.at(i1, j) * grid.at(i2, j)).norm());
      }
    }
  }
  report.add("columns pairwise orthogonal", col_orth, tol);

  if (kind == MagicKind::Unitary) {
    double col_sum = grid.rows == grid.cols ? 0.0 : 1.0;
    if (grid.rows == grid.cols) {
      for (int j = 1; j <= grid.cols; ++j) {
        Matrix sum = Matrix::Zero(d, d);
        for (int i = 1; i <= grid.rows; ++i) sum += grid.at(i, j);
        col_sum = std::max(col_sum, (sum - eye).norm());
      }
    }
    report.add("columns sum to identity", col_sum, tol,
               grid.rows == grid.cols ? "" : "grid is not square");
  }
  return report;
}

MagicMatrix pauli_model(const Matrix& x, double tol) {
  if (x.rows() != 2 || x.cols() != 2) throw input_error("pauli_model expects a 2x2 matrix");
  Matrix eye = Matrix::Identity(2, 2);
  if ((x.adjoint() * x - eye).norm() > 1e-12 || std::abs(x.determinant() - 1.0) > 1e-12)
    throw input_error("pauli_model expects an SU(2) element");

  const auto& basis = pauli_basis();
  MagicMatrix grid{4, 4, {}};
  grid.entries.resize(4);
  for (int i = 0; i < 4; ++i) {
    grid.entries[static_cast<std::size_t>(i)].reserve(4);
    for (int j = 0; j < 4; ++j) {
      grid.entries[static_cast<std::size_t>(i)].push_back(
          span_projection(basis[static_cast<std::size_t>(i)] * x *
                          basis[static_cast<std::size_t>(j)]));
    }
  }

  Report report = verify_magic(grid, MagicKind::Unitary, tol);
  if (!report.pass())
    throw consistency_error("pauli_model output failed the magic-unitary checks (violation " +
                            std::to_string(report.max_violation()) + ")");
  return grid;
}

Matrix su2_from_simplex(const SimplexPoint& t) {
  if (t.dimension() != 3) throw input_error("su2_from_simplex expects a point with 3 coordinates");
  double a = std::sqrt(t[0]);
  double b = std::sqrt(t[1]);
  double c = std::sqrt(t[2]);
  double denom = std::sqrt(2.0) * std::sqrt(c + 1.0);
  double s = a / denom;
  double tt = b / denom;
  double u = std::sqrt((c + 1.0) / 2.0);
  if (std::abs(s * s + tt * tt + u * u - 1.0) > 1e-12)
    throw consistency_error("su2_from_simplex parameters are not on the unit sphere");
  Matrix x(2, 2);
  x << kI * s, tt + kI * u, -tt + kI * u, -kI * s;
  return x;
}

const std::map<std::pair<int, int>, int>& labeling_q3() {
  static const std::map<std::pair<int, int>, int> table = {
      {{1, 1}, 0b000}, {{1, 2}, 0b011}, {{1, 3}, 0b110}, {{1, 4}, 0b101},
      {{2, 1}, 0b111}, {{2, 2}, 0b100}, {{2, 3}, 0b001}, {{2, 4}, 0b010},
  };
  return table;
}

FillUpResult fill_up(const SimplexPoint& t, double tol) {
  Matrix x = su2_from_simplex(t);
  MagicMatrix grid = pauli_model(x);
  Representation rho = canonical_representation(t);
  const auto& base_labels = labeling_q3();

  // candidate column matchings: the fixed table first, then the swap of the
  // last two columns (the matching suggested by the model's second row), then
  // the remaining permutations
  std::vector<std::array<int, 4>> perms;
  perms.push_back({1, 2, 3, 4});
  perms.push_back({1, 2, 4, 3});
  std::array<int, 4> p{1, 2, 3, 4};
  std::sort(p.begin(), p.end());
  do {
    if (std::find(perms.begin(), perms.end(), p) == perms.end()) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  for (const auto& perm : perms) {
    std::vector<Matrix> sources, targets;
    std::map<std::pair<int, int>, int> labeling;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 4; ++j) {
        int label = base_labels.at({i, perm[static_cast<std::size_t>(j - 1)]});
        labeling[{i, j}] = label;
        sources.push_back(grid.at(i, j));
        targets.push_back(rho.image(label));
      }
    }
    auto witness = find_intertwiner(sources, targets, tol);
    if (!witness) continue;

    FillUpResult result;
    result.grid = grid;
    result.witness = *witness;
    result.labeling = std::move(labeling);
    result.column_permutation = perm;
    for (std::size_t g = 0; g < sources.size(); ++g) {
      result.residual = std::max(
          result.residual,
          (result.witness * sources[g] * result.witness.adjoint() - targets[g]).norm());
    }
    return result;
  }
  throw consistency_error(
      "fill_up: no column matching admits a unitary intertwiner; this contradicts the model");
}

}  // namespace qcube
