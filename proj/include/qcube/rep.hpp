#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcube/linalg.hpp"
#include "qcube/paths.hpp"
#include "qcube/report.hpp"
#include "qcube/weighting.hpp"

namespace qcube {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kIntertwinerTolerance = 1e-8;

/// A finite-dimensional representation of the hypercube relations: one
/// matrix per vertex on a common space. `space` lists the basis labels in
/// order; for weighting-induced representations these are the U-side support
/// vertices sorted ascending.
struct Representation {
  int n = 1;
  std::vector<int> space;
  std::map<int, Matrix> images;

  int dim() const { return static_cast<int>(space.size()); }
  const Matrix& image(int vertex) const;
};

/// The representation induced by an admissible weighting: U-side support
/// vertices map to diagonal matrix units, V-side support vertices to the
/// rank-one projections onto their weight columns, everything else to zero.
Representation induced_representation(const EdgeWeighting& c,
                                      double tol = kDefaultTolerance);

/// The representation induced by the canonical weighting of t; its space is
/// always the full U-side.
Representation canonical_representation(const SimplexPoint& t);

/// Ordered product of the vertex images along the path of w.
Matrix evaluate_word(const Representation& rho, const PathWord& w);

/// Checks self-adjointness, idempotency, both partition-of-unity sums, the
/// non-edge orthogonality relation, and the rank-one property of every image.
Report verify_representation(const Representation& rho, double tol = kDefaultTolerance);

/// One irreducible summand of an induced representation: the vertices of a
/// support component together with the restriction of the representation to
/// the component's U-side block.
struct Block {
  std::vector<int> component;
  Representation rep;
  int algebra_dimension = 0;
  bool irreducible = false;
};

/// Splits the representation induced by c along the connected components of
/// the support. Each block is certified irreducible by span saturation, and
/// reassembling the blocks reproduces the full representation.
std::vector<Block> decompose(const EdgeWeighting& c, double tol = kDefaultTolerance);

/// For a nowhere-vanishing admissible weighting, reads off t_k as the squared
/// modulus of the edge at vertex 0 in direction k and verifies that every
/// direction-k edge has modulus sqrt(t_k).
SimplexPoint recover_simplex_point(const EdgeWeighting& c, double tol = kDefaultTolerance);

struct GaugeFixResult {
  SimplexPoint t;
  PhaseGauge lambda;
  double residual = 0.0;  // max over edges of |c(ij) - lambda_i lambda_j c_t(ij)|
};

/// Constructive gauge fixing for nowhere-vanishing admissible weightings:
/// processes the directions 0..n-1 in order, choosing per-stage vertex phases
/// that normalize the current direction without disturbing earlier ones, and
/// composes all stages into one cumulative gauge. The returned data satisfy
/// c(ij) = lambda_i lambda_j c_t(ij) on every edge.
GaugeFixResult gauge_fix(const EdgeWeighting& c, double tol = kDefaultTolerance);

struct ClassifiedBlock {
  std::vector<int> component;
  SimplexPoint t;       // point of the full simplex, zeros at missing directions
  PhaseGauge lambda;    // defined on the component's vertices
  double residual = 0.0;
};

/// Classification of an admissible weighting: per irreducible block, the
/// simplex point and vertex phases exhibiting the block as a gauge transform
/// of the canonical weighting. Blocks with partial support are handled by
/// recursing into the smallest half-cube containing them and re-embedding
/// the recovered point with zeros inserted at the removed directions.
std::vector<ClassifiedBlock> classify(const EdgeWeighting& c,
                                      double tol = kDefaultTolerance);

struct BoundaryDecomposition {
  Representation direct_sum;  // pullbacks of the smaller representation, stacked
  Matrix unitary;             // signed permutation conjugating the sum onto rho_t
  double max_deviation = 0.0;
};

/// For t with t_ell == 0, realizes the canonical representation as the
/// direct sum of the two digit-insertion pullbacks of the representation at
/// the reduced point, conjugated by an explicit signed permutation unitary.
BoundaryDecomposition boundary_decompose(const SimplexPoint& t, int ell,
                                         double tol = kDefaultTolerance);

/// Unitary W with W a_x = b_x W for all paired generators, found by solving
/// the stacked homogeneous system and projecting a nullspace element to the
/// unitary group. Returns nothing when no unitary intertwiner exists.
std::optional<Matrix> find_intertwiner(const std::vector<Matrix>& a,
                                       const std::vector<Matrix>& b,
                                       double tol = kIntertwinerTolerance,
                                       std::uint64_t seed = 0x71c);

std::optional<Matrix> find_intertwiner(const Representation& a, const Representation& b,
                                       double tol = kIntertwinerTolerance);

}  // namespace qcube
