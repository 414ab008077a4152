#include "qcube/funcalg.hpp"

#include <cmath>
#include <string>

namespace qcube {

BlockStructure block_structure(const SimplexPoint& t) {
  const int n = t.dimension();
  validate_dimension(n);

  SubgraphMask mask{n, {}};
  for (const Edge& e : edges(n)) {
    if (t[e.k] != 0.0) mask.kept.insert(e);
  }

  BlockStructure result{t, {}};
  for (const auto& comp : components(mask)) {
    std::vector<int> u_part;
    for (int x : comp) {
      if (on_u_side(x, n)) u_part.push_back(x);
    }
    if (!u_part.empty()) result.blocks.push_back(std::move(u_part));
  }
  return result;
}

Report diagnose_near_zeros(const SimplexPoint& t) {
  Report report{"near-zero coordinates", {}};
  double worst = 0.0;
  std::string detail;
  for (int k = 0; k < t.dimension(); ++k) {
    if (t[k] != 0.0 && t[k] < kSupportThreshold) {
      worst = 1.0;
      detail = "coordinate " + std::to_string(k) + " is below the support threshold but not zero";
    }
  }
  report.add("exact-zero policy", worst, 0.0, detail);
  return report;
}

bool is_t_block_diagonal(const Matrix& a, const SimplexPoint& t, double tol) {
  const int n = t.dimension();
  auto [u_all, v_all] = vertex_sets(n);
  if (a.rows() != static_cast<Eigen::Index>(u_all.size()) || a.rows() != a.cols())
    throw input_error("is_t_block_diagonal: matrix must be indexed by the U side");

  std::map<int, int> block_of;
  BlockStructure bs = block_structure(t);
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    for (int x : bs.blocks[b]) block_of[x] = static_cast<int>(b);
  }

  for (std::size_t r = 0; r < u_all.size(); ++r) {
    for (std::size_t c = 0; c < u_all.size(); ++c) {
      if (block_of.at(u_all[r]) == block_of.at(u_all[c])) continue;
      if (std::abs(a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) > tol)
        return false;
    }
  }
  return true;
}

std::map<int, Matrix> fiber_at(const SimplexPoint& t) {
  return canonical_representation(t).images;
}

int generated_algebra_dimension(const SimplexPoint& t) {
  Representation rho = canonical_representation(t);
  std::vector<Matrix> gens;
  gens.reserve(rho.images.size());
  for (const auto& [x, m] : rho.images) gens.push_back(m);
  bool saturated = false;
  int dim = generated_span_dimension(gens, 2 * t.dimension(), &saturated);
  if (!saturated)
    throw consistency_error("span saturation did not stabilize within the word-length cap");
  return dim;
}

namespace {
void fill_grid(int remaining, int parts, std::vector<int>& prefix,
               std::vector<SimplexPoint>& out, int resolution) {
  if (parts == 1) {
    prefix.push_back(remaining);
    std::vector<double> t(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i)
      t[i] = static_cast<double>(prefix[i]) / resolution;
    out.emplace_back(std::move(t));
    prefix.pop_back();
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    prefix.push_back(m);
    fill_grid(remaining - m, parts - 1, prefix, out, resolution);
    prefix.pop_back();
  }
}
}  // namespace

SimplexGrid simplex_grid(int n, int resolution) {
  validate_dimension(n);
  if (resolution < 1) throw input_error("simplex grid resolution must be >= 1");
  SimplexGrid grid{n, resolution, {}};
  std::vector<int> prefix;
  fill_grid(resolution, n, prefix, grid.points, resolution);
  return grid;
}

}  // namespace qcube
