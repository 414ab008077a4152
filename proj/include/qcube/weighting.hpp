#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qcube/hypercube.hpp"
#include "qcube/report.hpp"

namespace qcube {

using Complex = std::complex<double>;

/// Edge weights with modulus below this are treated as zero when computing
/// the support subgraph. The block structure of a weighting is discontinuous
/// in its entries, so intended zeros must be passed as exact zeros; the
/// threshold only absorbs rounding.
inline constexpr double kSupportThreshold = 1e-14;

/// Tolerance on |sum - 1| and on unit-modulus phases.
inline constexpr double kSimplexTolerance = 1e-12;

/// A point [t_0, ..., t_{n-1}] of the standard simplex: nonnegative entries
/// summing to one.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> entries);

  int dimension() const { return static_cast<int>(entries_.size()); }
  double operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& entries() const { return entries_; }

  /// Number of exact zeros among the entries.
  int zero_count() const;

 private:
  std::vector<double> entries_;
};

/// A complex weighting of the edges of Q_n. Keys are (U-side label, direction);
/// missing keys mean weight zero.
struct EdgeWeighting {
  int n = 1;
  std::map<std::pair<int, int>, Complex> values;

  /// Weight of the edge between x and flip_digit(x, k); x may be either endpoint.
  Complex value(int x, int k) const;
  void set(int x, int k, Complex v);
};

/// The subgraph induced by the edges with nonzero weight, together with the
/// incident vertices on each side.
struct SupportGraph {
  SubgraphMask mask;
  std::vector<int> u_vertices;
  std::vector<int> v_vertices;
};

SupportGraph support(const EdgeWeighting& c);

/// Verifies the two neighborhood orthonormality conditions of an admissible
/// weighting over all vertex pairs of the support with common neighbors.
/// Violations are reported, never thrown.
Report check_admissible(const EdgeWeighting& c, double tol);

/// Verifies the square relations satisfied by admissible weightings: on every
/// square with two adjacent nonzero edges, the other two edges are nonzero,
/// the cross-ratio identity holds, and opposite edges have equal modulus.
Report check_square_relations(const EdgeWeighting& c, double tol);

/// The canonical weighting of Q_n attached to a simplex point: the edge from
/// U-side vertex i in direction k carries (-1)^{digit_parity(i,k)} sqrt(t_k).
/// Always admissible. Entries for directions with t_k == 0 are omitted.
EdgeWeighting canonical_weighting(const SimplexPoint& t);

/// Unit-modulus phase per vertex.
using PhaseGauge = std::map<int, Complex>;

/// Multiplies every edge weight by the phases of its endpoints. Phases must
/// be defined (with modulus one) on all support vertices; elsewhere they
/// default to one. Preserves admissibility and support.
EdgeWeighting apply_gauge(const EdgeWeighting& c, const PhaseGauge& lambda);

/// Relabels a weighting supported inside a half-cube onto Q_{n-1} by removing
/// digit ell. Requires the support to lie in half_cube(n, ell, sign).
EdgeWeighting restrict_to_halfcube(const EdgeWeighting& c, int ell, int sign);

/// Inverse relabeling: pushes a Q_{n-1} weighting into the given half-cube
/// of Q_n by inserting digit ell.
EdgeWeighting embed_in_halfcube(const EdgeWeighting& c_small, int ell, int sign, int n);

}  // namespace qcube
