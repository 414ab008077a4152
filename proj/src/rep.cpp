#include "qcube/rep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

namespace qcube {

namespace {

std::string report_summary(const Report& report) {
  std::ostringstream os;
  os << report.title << " failed:";
  for (const Check& c : report.checks) {
    if (!c.pass) os << " [" << c.name << " violation " << c.max_violation << "]";
  }
  return os.str();
}

void require_admissible(const EdgeWeighting& c, double tol) {
  Report report = check_admissible(c, tol);
  if (!report.pass()) throw input_error(report_summary(report));
}

std::map<int, int> index_of(const std::vector<int>& labels) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

const Matrix& Representation::image(int vertex) const {
  auto it = images.find(vertex);
  if (it == images.end()) throw input_error("no image stored for vertex " + std::to_string(vertex));
  return it->second;
}

Representation induced_representation(const EdgeWeighting& c, double tol) {
  require_admissible(c, tol);
  SupportGraph sup = support(c);

  Representation rho;
  rho.n = c.n;
  rho.space = sup.u_vertices;
  const int d = rho.dim();
  auto pos = index_of(rho.space);

  Matrix zero = Matrix::Zero(d, d);
  for (int x = 0; x < (1 << c.n); ++x) rho.images[x] = zero;

  for (int i : sup.u_vertices) {
    Matrix m = zero;
    m(pos[i], pos[i]) = 1.0;
    rho.images[i] = std::move(m);
  }
  for (int j : sup.v_vertices) {
    Vector psi = Vector::Zero(d);
    for (int k = 0; k < c.n; ++k) {
      int i = flip_digit(j, k, c.n);
      auto it = pos.find(i);
      if (it != pos.end()) psi(it->second) = c.value(i, k);
    }
    rho.images[j] = psi * psi.adjoint();
  }
  return rho;
}

Representation canonical_representation(const SimplexPoint& t) {
  return induced_representation(canonical_weighting(t));
}

Matrix evaluate_word(const Representation& rho, const PathWord& w) {
  if (w.n != rho.n) throw input_error("evaluate_word: dimension mismatch");
  validate(w);
  Matrix result = rho.image(w.base);
  int x = w.base;
  for (int k : w.indices) {
    x ^= (1 << k);
    result = result * rho.image(x);
  }
  return result;
}

Report verify_representation(const Representation& rho, double tol) {
  Report report{"representation relations", {}};
  const int d = rho.dim();
  auto [u_all, v_all] = vertex_sets(rho.n);

  double proj = 0.0, rank_excess = 0.0;
  for (const auto& [x, m] : rho.images) {
    proj = std::max(proj, projection_defect(m));
    int r = numerical_rank(m);
    if (r > 1) rank_excess = std::max(rank_excess, static_cast<double>(r - 1));
  }
  report.add("self-adjoint idempotent", proj, tol);
  report.add("rank at most one", rank_excess, 0.0);

  Matrix u_sum = Matrix::Zero(d, d), v_sum = Matrix::Zero(d, d);
  for (int u : u_all) u_sum += rho.image(u);
  for (int v : v_all) v_sum += rho.image(v);
  Matrix eye = Matrix::Identity(d, d);
  report.add("U partition of unity", (u_sum - eye).norm(), tol);
  report.add("V partition of unity", (v_sum - eye).norm(), tol);

  double orth = 0.0;
  for (int u : u_all) {
    for (int v : v_all) {
      if (std::popcount(static_cast<unsigned>(u ^ v)) == 1) continue;  // an edge
      orth = std::max(orth, (rho.image(u) * rho.image(v)).norm());
    }
  }
  report.add("non-edge orthogonality", orth, tol);
  return report;
}

std::vector<Block> decompose(const EdgeWeighting& c, double tol) {
  Representation full = induced_representation(c, tol);
  SupportGraph sup = support(c);
  auto full_pos = index_of(full.space);

  std::vector<Block> blocks;
  for (const auto& comp : components(sup.mask)) {
    if (comp.size() < 2) continue;  // isolated vertices carry no block
    Block block;
    block.component = comp;
    block.rep.n = c.n;
    for (int x : comp) {
      if (on_u_side(x, c.n)) block.rep.space.push_back(x);
    }
    const int bd = block.rep.dim();
    std::vector<int> rows;
    rows.reserve(block.rep.space.size());
    for (int x : block.rep.space) rows.push_back(full_pos.at(x));

    Matrix zero = Matrix::Zero(bd, bd);
    for (int x = 0; x < (1 << c.n); ++x) block.rep.images[x] = zero;
    for (int x : comp) {
      Matrix m(bd, bd);
      for (int r = 0; r < bd; ++r) {
        for (int s = 0; s < bd; ++s) m(r, s) = full.image(x)(rows[r], rows[s]);
      }
      block.rep.images[x] = std::move(m);
    }

    std::vector<Matrix> gens;
    for (int x : comp) gens.push_back(block.rep.image(x));
    bool saturated = false;
    block.algebra_dimension = generated_span_dimension(gens, 2 * c.n + 2, &saturated);
    block.irreducible = saturated && block.algebra_dimension == bd * bd;
    if (!block.irreducible)
      throw consistency_error("support component failed the irreducibility certificate");
    blocks.push_back(std::move(block));
  }
  return blocks;
}

SimplexPoint recover_simplex_point(const EdgeWeighting& c, double tol) {
  validate_dimension(c.n);
  std::vector<double> t(static_cast<std::size_t>(c.n));
  for (int k = 0; k < c.n; ++k) {
    double base_mod = std::abs(c.value(0, k));
    if (base_mod <= kSupportThreshold)
      throw input_error("recover_simplex_point requires a nowhere-vanishing weighting");
    t[static_cast<std::size_t>(k)] = base_mod * base_mod;
    for (const Edge& e : edges_in_direction(c.n, k)) {
      double mod = std::abs(c.value(e.i, e.k));
      if (mod <= kSupportThreshold)
        throw input_error("recover_simplex_point requires a nowhere-vanishing weighting");
      if (std::abs(mod - base_mod) > tol)
        throw consistency_error("direction-class moduli are not constant");
    }
  }
  return SimplexPoint(t);
}

GaugeFixResult gauge_fix(const EdgeWeighting& c, double tol) {
  require_admissible(c, tol);
  SimplexPoint t = recover_simplex_point(c, tol);
  EdgeWeighting target = canonical_weighting(t);

  EdgeWeighting work = c;
  PhaseGauge total;
  for (int x = 0; x < (1 << c.n); ++x) total[x] = 1.0;

  for (int stage = 0; stage < c.n; ++stage) {
    PhaseGauge lambda;
    for (int x = 0; x < (1 << c.n); ++x) lambda[x] = 1.0;

    if (stage == 0) {
      for (int i = 0; i < (1 << c.n); ++i) {
        if (!on_u_side(i, c.n)) continue;
        Complex w = work.value(i, 0);
        double sign = digit_parity(i, 0) == 0 ? 1.0 : -1.0;
        lambda[i] = sign * w / std::abs(w);
      }
    } else {
      for (int x = 0; x < (1 << c.n); ++x) {
        if (digit(x, stage) != 0) continue;
        Complex w = work.value(x, stage);
        int u_end = on_u_side(x, c.n) ? x : flip_digit(x, stage, c.n);
        double sign = digit_parity(u_end, stage) == 0 ? 1.0 : -1.0;
        lambda[x] = sign * w / std::abs(w);
      }
    }

    PhaseGauge inverse;
    for (const auto& [x, v] : lambda) inverse[x] = std::conj(v);
    work = apply_gauge(work, inverse);
    for (auto& [x, v] : total) v *= lambda.at(x);
  }

  GaugeFixResult result{t, std::move(total), 0.0};
  for (const Edge& e : edges(c.n)) {
    Complex expect = result.lambda.at(e.i) * result.lambda.at(e.j) * target.value(e.i, e.k);
    result.residual = std::max(result.residual, std::abs(c.value(e.i, e.k) - expect));
  }
  if (result.residual > tol)
    throw consistency_error("gauge fixing residual exceeds tolerance; input is likely inadmissible");
  return result;
}

namespace {

// Classification of a single connected support component, given as the
// weighting restricted to that component's edges.
struct ComponentClassification {
  std::vector<double> t;
  PhaseGauge lambda;
};

ComponentClassification classify_component(const EdgeWeighting& c_comp,
                                           const std::vector<int>& comp, double tol) {
  const int n = c_comp.n;
  if (static_cast<int>(comp.size()) == (1 << n)) {
    GaugeFixResult gf = gauge_fix(c_comp, tol);
    return {gf.t.entries(), gf.lambda};
  }

  // smallest direction whose digit is constant on the component
  int ell = -1, bit = 0;
  for (int k = 0; k < n && ell < 0; ++k) {
    bool all0 = true, all1 = true;
    for (int x : comp) {
      if (digit(x, k) == 1) {
        all0 = false;
      } else {
        all1 = false;
      }
    }
    if (all0 || all1) {
      ell = k;
      bit = all1 ? 1 : 0;
    }
  }
  if (ell < 0)
    throw consistency_error("support component is proper but contained in no half-cube");

  EdgeWeighting smaller = restrict_to_halfcube(c_comp, ell, bit ? +1 : -1);
  std::vector<int> comp_small;
  comp_small.reserve(comp.size());
  for (int x : comp) comp_small.push_back(remove_digit(x, ell));
  std::sort(comp_small.begin(), comp_small.end());

  ComponentClassification inner = classify_component(smaller, comp_small, tol);

  ComponentClassification outer;
  outer.t = inner.t;
  outer.t.insert(outer.t.begin() + ell, 0.0);
  for (int x : comp) {
    Complex phase = inner.lambda.at(remove_digit(x, ell));
    // removing a 1-digit swaps the bipartition sides below it, which costs a
    // sign on every direction under ell
    if (bit == 1 && ell >= 1 && digit_parity(x, ell - 1) == 1) phase = -phase;
    outer.lambda[x] = phase;
  }
  return outer;
}

}  // namespace

std::vector<ClassifiedBlock> classify(const EdgeWeighting& c, double tol) {
  require_admissible(c, tol);
  SupportGraph sup = support(c);

  std::vector<ClassifiedBlock> result;
  for (const auto& comp : components(sup.mask)) {
    if (comp.size() < 2) continue;
    EdgeWeighting c_comp{c.n, {}};
    for (const Edge& e : sup.mask.kept) {
      if (std::binary_search(comp.begin(), comp.end(), e.i))
        c_comp.values[{e.i, e.k}] = c.value(e.i, e.k);
    }

    ComponentClassification cls = classify_component(c_comp, comp, tol);
    ClassifiedBlock block{comp, SimplexPoint(cls.t), std::move(cls.lambda), 0.0};

    EdgeWeighting target = canonical_weighting(block.t);
    for (const Edge& e : sup.mask.kept) {
      if (!std::binary_search(comp.begin(), comp.end(), e.i)) continue;
      Complex expect = block.lambda.at(e.i) * block.lambda.at(e.j) * target.value(e.i, e.k);
      block.residual = std::max(block.residual, std::abs(c.value(e.i, e.k) - expect));
    }
    if (block.residual > tol)
      throw consistency_error("classification residual exceeds tolerance");
    result.push_back(std::move(block));
  }
  return result;
}

BoundaryDecomposition boundary_decompose(const SimplexPoint& t, int ell, double tol) {
  const int n = t.dimension();
  validate_dimension(n);
  if (ell < 0 || ell >= n) throw input_error("boundary_decompose: position out of range");
  if (t[ell] != 0.0) throw input_error("boundary_decompose requires t_ell == 0 exactly");
  if (n < 2) throw input_error("boundary_decompose needs n >= 2");

  std::vector<double> s_entries = t.entries();
  s_entries.erase(s_entries.begin() + ell);
  SimplexPoint s(s_entries);
  Representation small = canonical_representation(s);
  const int sd = small.dim();

  // basis labels of the two summands inside U_n
  std::vector<int> plus_labels, minus_labels;
  for (int y : small.space) {
    plus_labels.push_back(insert_digit(flip_digit(y, 0, n - 1), ell, 1, n));
    minus_labels.push_back(insert_digit(y, ell, 0, n));
  }

  BoundaryDecomposition result;
  result.direct_sum.n = n;
  result.direct_sum.space = plus_labels;
  result.direct_sum.space.insert(result.direct_sum.space.end(), minus_labels.begin(),
                                 minus_labels.end());

  const int d = 2 * sd;
  for (int x = 0; x < (1 << n); ++x) {
    Matrix m = Matrix::Zero(d, d);
    if (digit(x, ell) == 1) {
      int y = flip_digit(remove_digit(x, ell), 0, n - 1);
      m.topLeftCorner(sd, sd) = small.image(y);
    } else {
      int y = remove_digit(x, ell);
      m.bottomRightCorner(sd, sd) = small.image(y);
    }
    result.direct_sum.images[x] = std::move(m);
  }

  Representation big = canonical_representation(t);
  auto big_pos = index_of(big.space);

  // permutation part sends each summand basis vector to its label's slot;
  // the diagonal sign part is the vertex gauge that aligns the pulled-back
  // weighting with the canonical one
  result.unitary = Matrix::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    int label = result.direct_sum.space[static_cast<std::size_t>(col)];
    double sign = (digit(label, ell) == 1 && digit_parity(label, ell) == 1) ? -1.0 : 1.0;
    result.unitary(big_pos.at(label), col) = sign;
  }

  for (int x = 0; x < (1 << n); ++x) {
    Matrix conj = result.unitary * result.direct_sum.image(x) * result.unitary.adjoint();
    result.max_deviation =
        std::max(result.max_deviation, (conj - big.image(x)).cwiseAbs().maxCoeff());
  }
  if (result.max_deviation > tol)
    throw consistency_error("boundary decomposition deviates from the canonical representation");
  return result;
}

std::optional<Matrix> find_intertwiner(const std::vector<Matrix>& a,
                                       const std::vector<Matrix>& b, double tol,
                                       std::uint64_t seed) {
  if (a.size() != b.size() || a.empty())
    throw input_error("find_intertwiner: generator families must be nonempty and matched");
  const Eigen::Index d = a.front().rows();
  for (const auto& m : a)
    if (m.rows() != d || m.cols() != d) throw input_error("find_intertwiner: dimension mismatch");
  for (const auto& m : b)
    if (m.rows() != d || m.cols() != d) throw input_error("find_intertwiner: dimension mismatch");

  // stack the equations W a_x - b_x W = 0 over vec(W), column-major
  const Eigen::Index dd = d * d;
  Matrix system = Matrix::Zero(static_cast<Eigen::Index>(a.size()) * dd, dd);
  for (std::size_t g = 0; g < a.size(); ++g) {
    const Matrix& ag = a[g];
    const Matrix& bg = b[g];
    Eigen::Index base = static_cast<Eigen::Index>(g) * dd;
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) {
        Eigen::Index row = base + r + c * d;
        for (Eigen::Index m = 0; m < d; ++m) {
          system(row, r + m * d) += ag(m, c);   // (W a)(r,c) term
          system(row, m + c * d) -= bg(r, m);   // (b W)(r,c) term
        }
      }
    }
  }

  std::vector<Vector> basis = nullspace(system);
  if (basis.empty()) return std::nullopt;

  auto residual_of = [&](const Matrix& w) {
    double worst = 0.0;
    for (std::size_t g = 0; g < a.size(); ++g)
      worst = std::max(worst, (w * a[g] - b[g] * w).norm());
    return worst;
  };

  auto attempt = [&](const Vector& vec) -> std::optional<Matrix> {
    Matrix w = Eigen::Map<const Matrix>(vec.data(), d, d);
    if (w.norm() < 1e-12) return std::nullopt;
    Matrix q = polar_unitary(w);
    if (residual_of(q) <= tol) return q;
    return std::nullopt;
  };

  for (const Vector& v : basis) {
    if (auto q = attempt(v)) return q;
  }
  Rng rng(seed);
  for (int round = 0; round < 24; ++round) {
    Vector combo = Vector::Zero(dd);
    for (const Vector& v : basis) combo += Complex(rng.gaussian(), rng.gaussian()) * v;
    if (auto q = attempt(combo)) return q;
  }
  return std::nullopt;
}

std::optional<Matrix> find_intertwiner(const Representation& a, const Representation& b,
                                       double tol) {
  if (a.n != b.n || a.dim() != b.dim())
    throw input_error("find_intertwiner: representations must share dimension");
  std::vector<Matrix> fam_a, fam_b;
  for (int x = 0; x < (1 << a.n); ++x) {
    fam_a.push_back(a.image(x));
    fam_b.push_back(b.image(x));
  }
  return find_intertwiner(fam_a, fam_b, tol);
}

}  // namespace qcube
