#include "qcube/hypercube.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <string>

namespace qcube {

namespace {
std::atomic<int> g_max_dimension{8};
}

int max_dimension() { return g_max_dimension.load(); }

void set_max_dimension(int n) {
  if (n < 1 || n > 30) throw input_error("max dimension must be in [1, 30]");
  g_max_dimension.store(n);
}

void validate_dimension(int n) {
  if (n < 1) throw input_error("hypercube dimension must be >= 1");
  if (n > max_dimension())
    throw input_error("hypercube dimension " + std::to_string(n) +
                      " exceeds the configured cap " + std::to_string(max_dimension()));
}

namespace {
void validate_vertex(int label, int n) {
  if (label < 0 || label >= (1 << n))
    throw input_error("vertex label " + std::to_string(label) + " out of range for Q_" +
                      std::to_string(n));
}

void validate_direction(int k, int n) {
  if (k < 0 || k >= n)
    throw input_error("direction " + std::to_string(k) + " out of range for Q_" +
                      std::to_string(n));
}
}  // namespace

int flip_digit(int label, int k, int n) {
  validate_dimension(n);
  validate_vertex(label, n);
  validate_direction(k, n);
  return label ^ (1 << k);
}

int digit_parity(int label, int k) {
  if (k < 0) throw input_error("digit_parity needs k >= 0");
  unsigned mask = (k >= 31) ? ~0u : ((1u << (k + 1)) - 1u);
  return std::popcount(static_cast<unsigned>(label) & mask) & 1;
}

int digit(int label, int k) { return (label >> k) & 1; }

Side side(int label, int n) {
  validate_dimension(n);
  validate_vertex(label, n);
  return digit_parity(label, n - 1) == 0 ? Side::U : Side::V;
}

bool on_u_side(int label, int n) { return side(label, n) == Side::U; }

Edge make_edge(int x, int k, int n) {
  int y = flip_digit(x, k, n);
  if (on_u_side(x, n)) return Edge{x, y, k};
  return Edge{y, x, k};
}

std::pair<std::vector<int>, std::vector<int>> vertex_sets(int n) {
  validate_dimension(n);
  std::vector<int> u, v;
  u.reserve(1 << (n - 1));
  v.reserve(1 << (n - 1));
  for (int x = 0; x < (1 << n); ++x) {
    (digit_parity(x, n - 1) == 0 ? u : v).push_back(x);
  }
  return {std::move(u), std::move(v)};
}

std::vector<Edge> edges(int n) {
  validate_dimension(n);
  std::vector<Edge> result;
  result.reserve(n << (n - 1));
  for (int x = 0; x < (1 << n); ++x) {
    if (!on_u_side(x, n)) continue;
    for (int k = 0; k < n; ++k) result.push_back(make_edge(x, k, n));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Edge> edges_in_direction(int n, int k) {
  validate_dimension(n);
  validate_direction(k, n);
  std::vector<Edge> result;
  result.reserve(1 << (n - 1));
  for (int x = 0; x < (1 << n); ++x) {
    if (on_u_side(x, n)) result.push_back(make_edge(x, k, n));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> common_neighbors(int x, int y, int n) {
  validate_dimension(n);
  validate_vertex(x, n);
  validate_vertex(y, n);
  if (x == y) throw input_error("common_neighbors requires distinct vertices");
  unsigned diff = static_cast<unsigned>(x ^ y);
  if (std::popcount(diff) != 2) return {};
  int a = std::countr_zero(diff);
  int b = std::countr_zero(diff & (diff - 1));
  std::vector<int> result{x ^ (1 << a), x ^ (1 << b)};
  std::sort(result.begin(), result.end());
  return result;
}

bool SubgraphMask::contains(int x, int k) const {
  return contains(make_edge(x, k, n));
}

void SubgraphMask::insert(int x, int k) { kept.insert(make_edge(x, k, n)); }

SubgraphMask full_mask(int n) {
  SubgraphMask mask{n, {}};
  for (const Edge& e : edges(n)) mask.kept.insert(e);
  return mask;
}

SubgraphMask half_cube(int n, int ell, int sign) {
  validate_dimension(n);
  validate_direction(ell, n);
  int bit = sign > 0 ? 1 : 0;
  SubgraphMask mask{n, {}};
  for (const Edge& e : edges(n)) {
    if (digit(e.i, ell) == bit && digit(e.j, ell) == bit) mask.kept.insert(e);
  }
  return mask;
}

int insert_digit(int y, int ell, int bit, int n) {
  validate_dimension(n);
  if (n < 1 || ell < 0 || ell >= n) throw input_error("insert_digit: position out of range");
  if (y < 0 || y >= (1 << (n - 1))) throw input_error("insert_digit: label out of range");
  if (bit != 0 && bit != 1) throw input_error("insert_digit: bit must be 0 or 1");
  int low = y & ((1 << ell) - 1);
  int high = y >> ell;
  return low | (bit << ell) | (high << (ell + 1));
}

int remove_digit(int x, int ell) {
  if (x < 0 || ell < 0) throw input_error("remove_digit: bad arguments");
  int low = x & ((1 << ell) - 1);
  int high = x >> (ell + 1);
  return low | (high << ell);
}

std::vector<Square> squares(int n) {
  validate_dimension(n);
  std::vector<Square> result;
  for (int k = 0; k < n; ++k) {
    for (int ell = k + 1; ell < n; ++ell) {
      for (int x = 0; x < (1 << n); ++x) {
        if (digit(x, k) == 0 && digit(x, ell) == 0) result.push_back({x, k, ell});
      }
    }
  }
  return result;
}

std::array<Edge, 4> square_edges(const Square& s, int n) {
  int xk = flip_digit(s.base, s.k, n);
  int xl = flip_digit(s.base, s.ell, n);
  return {make_edge(s.base, s.k, n), make_edge(s.base, s.ell, n),
          make_edge(xk, s.ell, n), make_edge(xl, s.k, n)};
}

std::vector<std::vector<int>> components(const SubgraphMask& mask) {
  validate_dimension(mask.n);
  int total = 1 << mask.n;
  std::vector<bool> seen(total, false);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int k = 0; k < mask.n; ++k) {
        if (!mask.contains(x, k)) continue;
        int y = x ^ (1 << k);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool is_square_closed(const SubgraphMask& mask) {
  validate_dimension(mask.n);
  for (const Square& s : squares(mask.n)) {
    auto e = square_edges(s, mask.n);
    bool b0 = mask.contains(e[0]), b1 = mask.contains(e[1]);
    bool b2 = mask.contains(e[2]), b3 = mask.contains(e[3]);
    // adjacent pairs: (0,1) share base, (0,2) share base#k,
    // (1,3) share base#ell, (2,3) share the far corner
    bool adjacent_pair = (b0 && b1) || (b0 && b2) || (b1 && b3) || (b2 && b3);
    if (adjacent_pair && !(b0 && b1 && b2 && b3)) return false;
  }
  return true;
}

bool components_are_subhypercubes(const SubgraphMask& mask) {
  for (const auto& comp : components(mask)) {
    unsigned spanned = 0;
    for (int x : comp) {
      for (int k = 0; k < mask.n; ++k) {
        if (mask.contains(x, k)) spanned |= (1u << k);
      }
    }
    if (static_cast<int>(comp.size()) != (1 << std::popcount(spanned))) return false;
    for (int x : comp) {
      for (int k = 0; k < mask.n; ++k) {
        if ((spanned >> k) & 1) {
          if (!mask.contains(x, k)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qcube
