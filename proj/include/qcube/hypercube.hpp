#pragma once

#include <array>
#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "qcube/errors.hpp"

namespace qcube {

/// Largest hypercube dimension accepted by default. Exhaustive square
/// enumeration is O(4^n), so very large n must be opted into explicitly.
int max_dimension();
void set_max_dimension(int n);

/// Throws input_error unless 1 <= n <= max_dimension().
void validate_dimension(int n);

/// Vertices of Q_n are plain integer labels in [0, 2^n); the bipartition
/// side is always computed from the label, never stored.
enum class Side { U, V };

/// Number obtained by toggling binary digit k of label.
int flip_digit(int label, int k, int n);

/// Sum of the binary digits 0..k of label, mod 2.
int digit_parity(int label, int k);

/// Digit k of label.
int digit(int label, int k);

Side side(int label, int n);
bool on_u_side(int label, int n);

/// An edge of Q_n, stored with its U-side endpoint first. j == flip_digit(i, k).
struct Edge {
  int i = 0;  // U-side endpoint
  int j = 0;  // V-side endpoint
  int k = 0;  // flip direction
  auto operator<=>(const Edge&) const = default;
};

/// The edge between x and flip_digit(x, k), normalized so .i is U-side.
Edge make_edge(int x, int k, int n);

/// (U_n, V_n): the even- and odd-parity labels, each sorted ascending.
std::pair<std::vector<int>, std::vector<int>> vertex_sets(int n);

std::vector<Edge> edges(int n);
std::vector<Edge> edges_in_direction(int n, int k);

/// Common neighbors of two distinct vertices; size is always 0 or 2.
std::vector<int> common_neighbors(int x, int y, int n);

/// A subgraph of Q_n given by a set of kept edges; the vertex set is always
/// the full [0, 2^n), so dropped edges leave isolated vertices behind.
struct SubgraphMask {
  int n = 1;
  std::set<Edge> kept;

  bool contains(const Edge& e) const { return kept.count(e) > 0; }
  bool contains(int x, int k) const;
  void insert(int x, int k);
};

SubgraphMask full_mask(int n);

/// Induced subgraph on the vertices whose digit ell equals 1 (sign > 0)
/// or 0 (sign < 0). Isomorphic to Q_{n-1}.
SubgraphMask half_cube(int n, int ell, int sign);

/// Insert `bit` at binary position ell of y (digits >= ell shift up).
/// Maps labels of Q_{n-1} into labels of Q_n; remove_digit inverts it.
int insert_digit(int y, int ell, int bit, int n);
int remove_digit(int x, int ell);

/// Canonical square index: the vertex of the square with digits k and ell
/// both zero, together with the ordered direction pair k < ell.
struct Square {
  int base = 0;
  int k = 0;
  int ell = 1;
};

std::vector<Square> squares(int n);

/// The four edges of a square as (x, direction) pairs:
/// (base,k), (base,ell), (base#k,ell), (base#ell,k).
std::array<Edge, 4> square_edges(const Square& s, int n);

/// Connected components over all 2^n vertices, each sorted ascending,
/// listed in order of their minimal label.
std::vector<std::vector<int>> components(const SubgraphMask& mask);

/// True iff the mask contains all four edges of every square of Q_n for
/// which it contains two adjacent edges.
bool is_square_closed(const SubgraphMask& mask);

/// True iff every component's vertex set is closed under flips in the set
/// of directions the component spans, with all those edges kept.
bool components_are_subhypercubes(const SubgraphMask& mask);

}  // namespace qcube
