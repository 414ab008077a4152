#pragma once

#include <map>
#include <vector>

#include "qcube/rep.hpp"
#include "qcube/weighting.hpp"

namespace qcube {

/// The partition of the U-side induced by deleting every direction class
/// whose simplex coordinate vanishes. A point with alpha exact zeros yields
/// 2^alpha blocks of size 2^{n-1-alpha} each.
struct BlockStructure {
  SimplexPoint t;
  std::vector<std::vector<int>> blocks;  // U-side labels, sorted, by minimal label
};

/// Block structure of a simplex point; zero coordinates must be exact zeros.
/// Coordinates that are tiny but not exactly zero are flagged in the report
/// returned by diagnose_near_zeros.
BlockStructure block_structure(const SimplexPoint& t);

Report diagnose_near_zeros(const SimplexPoint& t);

/// True iff every entry of A joining distinct blocks of t has modulus <= tol.
/// A must be indexed by the sorted U-side of Q_n.
bool is_t_block_diagonal(const Matrix& a, const SimplexPoint& t, double tol);

/// Fiber of the function-algebra picture at t: the generator images of the
/// canonical representation.
std::map<int, Matrix> fiber_at(const SimplexPoint& t);

/// Dimension of the algebra generated by the fiber images, computed by
/// breadth-first span saturation. Equals the sum of squared block sizes.
int generated_algebra_dimension(const SimplexPoint& t);

/// All lattice points of the simplex with the given resolution, ordered
/// lexicographically descending; always contains every simplex vertex.
struct SimplexGrid {
  int n = 1;
  int resolution = 1;
  std::vector<SimplexPoint> points;
};

SimplexGrid simplex_grid(int n, int resolution);

}  // namespace qcube
