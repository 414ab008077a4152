#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qcube/rep.hpp"

namespace qcube {

/// The fixed orthogonal basis of M_2 used for the identification with C^4:
/// identity, the two real Pauli flips and the diagonal sign matrix. This
/// identification is the only supported convention.
const std::array<Matrix, 4>& pauli_basis();

/// Coordinates of a 2x2 matrix in the Pauli basis; inverse of pauli_matrix.
Vector pauli_coords(const Matrix& a);
Matrix pauli_matrix(const Vector& coords);

/// Rank-one projection of C^4 onto the line spanned by X inside M_2.
Matrix span_projection(const Matrix& x);

/// Matrix multiplication operators on M_2 viewed as C^4 in Pauli coordinates;
/// unitary whenever the factor is.
Matrix left_multiplication_operator(const Matrix& x);

/// A grid of projections on a common space. For a magic isometry the rows
/// are partitions of unity and the columns pairwise orthogonal; a magic
/// unitary additionally has column sums equal to the identity.
struct MagicMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Matrix>> entries;

  const Matrix& at(int i, int j) const;  // 1-based
};

enum class MagicKind { Isometry, Unitary };

Report verify_magic(const MagicMatrix& grid, MagicKind kind, double tol);

/// The Pauli model of the 4x4 magic unitary attached to an SU(2) element:
/// entry (i, j) is the projection onto the span of c_i x c_j.
MagicMatrix pauli_model(const Matrix& x, double tol = 1e-12);

/// The SU(2) element attached to a point of the two-dimensional simplex,
/// built from the square roots of its coordinates. Never singular since the
/// denominator is at least one.
Matrix su2_from_simplex(const SimplexPoint& t);

/// The fixed identification of the 2x4 magic-isometry generators with the
/// vertices of Q_3. Keys are 1-based (row, column) pairs.
const std::map<std::pair<int, int>, int>& labeling_q3();

struct FillUpResult {
  MagicMatrix grid;                            // the full 4x4 magic unitary
  Matrix witness;                              // unitary W conjugating the top rows onto rho_t
  std::map<std::pair<int, int>, int> labeling; // the certified column matching
  std::array<int, 4> column_permutation{1, 2, 3, 4};
  double residual = 0.0;
};

/// Completes the 2x4 magic isometry determined by t to a 4x4 magic unitary:
/// builds the Pauli model at su2_from_simplex(t) and certifies a unitary
/// carrying its top two rows onto the canonical representation images under
/// the fixed labeling, trying structure-preserving column permutations until
/// one is certified.
FillUpResult fill_up(const SimplexPoint& t, double tol = kIntertwinerTolerance);

}  // namespace qcube
