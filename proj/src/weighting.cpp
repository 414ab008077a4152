#include "qcube/weighting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

namespace qcube {

namespace {
std::string pair_detail(const char* what, int a, int b) {
  std::ostringstream os;
  os << what << " (" << a << ", " << b << ")";
  return os.str();
}
}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw input_error("simplex point needs at least one entry");
  double sum = 0.0;
  for (double t : entries_) {
    if (!(t >= 0.0)) throw input_error("simplex point entries must be nonnegative");
    sum += t;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance)
    throw input_error("simplex point entries must sum to one");
}

int SimplexPoint::zero_count() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), 0.0));
}

Complex EdgeWeighting::value(int x, int k) const {
  Edge e = make_edge(x, k, n);
  auto it = values.find({e.i, e.k});
  return it == values.end() ? Complex(0.0) : it->second;
}

void EdgeWeighting::set(int x, int k, Complex v) {
  Edge e = make_edge(x, k, n);
  values[{e.i, e.k}] = v;
}

SupportGraph support(const EdgeWeighting& c) {
  validate_dimension(c.n);
  SupportGraph result;
  result.mask.n = c.n;
  std::set<int> us, vs;
  for (const auto& [key, v] : c.values) {
    if (std::abs(v) <= kSupportThreshold) continue;
    Edge e = make_edge(key.first, key.second, c.n);
    result.mask.kept.insert(e);
    us.insert(e.i);
    vs.insert(e.j);
  }
  result.u_vertices.assign(us.begin(), us.end());
  result.v_vertices.assign(vs.begin(), vs.end());
  return result;
}

Report check_admissible(const EdgeWeighting& c, double tol) {
  SupportGraph sup = support(c);
  Report report{"admissibility", {}};

  auto run_side = [&](const std::vector<int>& verts, bool v_side, const char* name) {
    double worst = -1.0;
    std::pair<int, int> worst_pair{-1, -1};
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a; b < verts.size(); ++b) {
        int x1 = verts[a], x2 = verts[b];
        Complex sum = 0.0;
        if (x1 == x2) {
          for (int k = 0; k < c.n; ++k) sum += std::norm(c.value(x1, k));
          sum -= 1.0;
        } else {
          auto common = common_neighbors(x1, x2, c.n);
          if (common.empty()) continue;
          for (int y : common) {
            int k1 = std::countr_zero(static_cast<unsigned>(x1 ^ y));
            int k2 = std::countr_zero(static_cast<unsigned>(x2 ^ y));
            // weight of the edge {y, x} regardless of sides
            Complex w1 = v_side ? c.value(y, k1) : c.value(x1, k1);
            Complex w2 = v_side ? c.value(y, k2) : c.value(x2, k2);
            sum += w1 * std::conj(w2);
          }
        }
        double violation = std::abs(sum);
        if (violation > worst) {
          worst = violation;
          worst_pair = {x1, x2};
        }
      }
    }
    report.add(name, std::max(worst, 0.0), tol,
               worst_pair.first >= 0 ? pair_detail("worst pair", worst_pair.first, worst_pair.second)
                                     : "no pairs");
  };

  run_side(sup.v_vertices, true, "V-side orthonormality");
  run_side(sup.u_vertices, false, "U-side orthonormality");
  return report;
}

Report check_square_relations(const EdgeWeighting& c, double tol) {
  validate_dimension(c.n);
  Report report{"square relations", {}};
  double worst_nonzero = 0.0, worst_ratio = 0.0, worst_modulus = 0.0;
  std::string det_nonzero, det_ratio, det_modulus;

  for (const Square& s : squares(c.n)) {
    int a = s.base;
    int b = flip_digit(a, s.k, c.n);
    int cc = flip_digit(a, s.ell, c.n);
    int d = flip_digit(b, s.ell, c.n);
    // the two corners on the same side as `a` form one diagonal
    int y1 = b, y2 = cc, x1 = a, x2 = d;
    Complex we = c.value(x1, std::countr_zero(static_cast<unsigned>(x1 ^ y1)));
    Complex wf = c.value(x2, std::countr_zero(static_cast<unsigned>(x2 ^ y1)));
    Complex wg = c.value(x2, std::countr_zero(static_cast<unsigned>(x2 ^ y2)));
    Complex wh = c.value(x1, std::countr_zero(static_cast<unsigned>(x1 ^ y2)));

    auto check_diag = [&](Complex e, Complex f, Complex g, Complex h, int sq_base) {
      if (std::abs(e) <= kSupportThreshold || std::abs(f) <= kSupportThreshold) return;
      double zero_gap = std::max(std::abs(g) <= kSupportThreshold ? 1.0 : 0.0,
                                 std::abs(h) <= kSupportThreshold ? 1.0 : 0.0);
      if (zero_gap > worst_nonzero) {
        worst_nonzero = zero_gap;
        det_nonzero = pair_detail("square at", sq_base, s.k);
      }
      if (zero_gap > 0.0) return;
      double ratio = std::abs(e / f + std::conj(g / h));
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        det_ratio = pair_detail("square at", sq_base, s.k);
      }
      double modulus = std::max(std::abs(std::abs(e) - std::abs(g)),
                                std::abs(std::abs(f) - std::abs(h)));
      if (modulus > worst_modulus) {
        worst_modulus = modulus;
        det_modulus = pair_detail("square at", sq_base, s.k);
      }
    };

    // cross identity through the diagonal {y1, y2} and through {x1, x2}
    check_diag(we, wf, wg, wh, s.base);
    check_diag(we, wh, wg, wf, s.base);
  }

  report.add("square nonzero propagation", worst_nonzero, 0.0, det_nonzero);
  report.add("square cross-ratio", worst_ratio, tol, det_ratio);
  report.add("square opposite moduli", worst_modulus, tol, det_modulus);
  return report;
}

EdgeWeighting canonical_weighting(const SimplexPoint& t) {
  int n = t.dimension();
  validate_dimension(n);
  EdgeWeighting c{n, {}};
  for (int x = 0; x < (1 << n); ++x) {
    if (!on_u_side(x, n)) continue;
    for (int k = 0; k < n; ++k) {
      if (t[k] == 0.0) continue;
      double sign = digit_parity(x, k) == 0 ? 1.0 : -1.0;
      c.values[{x, k}] = Complex(sign * std::sqrt(t[k]), 0.0);
    }
  }
  return c;
}

EdgeWeighting apply_gauge(const EdgeWeighting& c, const PhaseGauge& lambda) {
  auto phase_at = [&](int x, bool required) {
    auto it = lambda.find(x);
    if (it == lambda.end()) {
      if (required) throw input_error("gauge phase missing on support vertex " + std::to_string(x));
      return Complex(1.0);
    }
    if (std::abs(std::abs(it->second) - 1.0) > kSimplexTolerance)
      throw input_error("gauge phase at vertex " + std::to_string(x) + " is not unit modulus");
    return it->second;
  };

  EdgeWeighting result{c.n, {}};
  for (const auto& [key, v] : c.values) {
    Edge e = make_edge(key.first, key.second, c.n);
    bool in_support = std::abs(v) > kSupportThreshold;
    result.values[key] = phase_at(e.i, in_support) * phase_at(e.j, in_support) * v;
  }
  return result;
}

EdgeWeighting restrict_to_halfcube(const EdgeWeighting& c, int ell, int sign) {
  validate_dimension(c.n);
  if (c.n < 2) throw input_error("restrict_to_halfcube needs n >= 2");
  if (ell < 0 || ell >= c.n) throw input_error("restrict_to_halfcube: position out of range");
  int bit = sign > 0 ? 1 : 0;
  EdgeWeighting result{c.n - 1, {}};
  for (const auto& [key, v] : c.values) {
    Edge e = make_edge(key.first, key.second, c.n);
    if (std::abs(v) <= kSupportThreshold) continue;
    if (e.k == ell || digit(e.i, ell) != bit || digit(e.j, ell) != bit)
      throw input_error("weighting support is not contained in the requested half-cube");
    int k_small = e.k < ell ? e.k : e.k - 1;
    result.set(remove_digit(e.i, ell), k_small, v);
  }
  return result;
}

EdgeWeighting embed_in_halfcube(const EdgeWeighting& c_small, int ell, int sign, int n) {
  validate_dimension(n);
  if (c_small.n != n - 1) throw input_error("embed_in_halfcube: dimension mismatch");
  if (ell < 0 || ell >= n) throw input_error("embed_in_halfcube: position out of range");
  int bit = sign > 0 ? 1 : 0;
  EdgeWeighting result{n, {}};
  for (const auto& [key, v] : c_small.values) {
    Edge e = make_edge(key.first, key.second, c_small.n);
    int k_big = e.k < ell ? e.k : e.k + 1;
    result.set(insert_digit(e.i, ell, bit, n), k_big, v);
  }
  return result;
}

}  // namespace qcube
