#include "qcube/json_io.hpp"

#include <bit>
#include <cmath>
#include <fstream>

namespace qcube {

namespace {

double finite(const Json& j, const char* what) {
  if (!j.is_number()) throw input_error(std::string(what) + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw input_error(std::string(what) + " must be finite");
  return v;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json complex_to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("complex value must be an object with re/im");
  return {finite(j.at("re"), "re"), finite(j.at("im"), "im")};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw input_error("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

// accepts an edge given as any two adjacent labels
std::pair<int, int> edge_key(int a, int b, int n) {
  if (a < 0 || b < 0 || a >= (1 << n) || b >= (1 << n))
    throw input_error("edge endpoint out of range");
  unsigned diff = static_cast<unsigned>(a ^ b);
  if (std::popcount(diff) != 1) throw input_error("edge endpoints must differ in one digit");
  int k = std::countr_zero(diff);
  Edge e = make_edge(a, k, n);
  return {e.i, e.k};
}

}  // namespace

Json to_json(const SubgraphMask& mask) {
  Json edges = Json::array();
  for (const Edge& e : mask.kept) edges.push_back(Json{{"i", e.i}, {"j", e.j}});
  return Json{{"n", mask.n}, {"edges", std::move(edges)}};
}

SubgraphMask mask_from_json(const Json& j) {
  SubgraphMask mask{integer(j.at("n"), "n"), {}};
  validate_dimension(mask.n);
  for (const Json& e : j.at("edges")) {
    auto [i, k] = edge_key(integer(e.at("i"), "i"), integer(e.at("j"), "j"), mask.n);
    mask.kept.insert(make_edge(i, k, mask.n));
  }
  return mask;
}

Json to_json(const PathWord& w) {
  return Json{{"n", w.n}, {"base", w.base}, {"indices", w.indices}};
}

PathWord word_from_json(const Json& j) {
  PathWord w;
  w.n = integer(j.at("n"), "n");
  w.base = integer(j.at("base"), "base");
  for (const Json& k : j.at("indices")) w.indices.push_back(integer(k, "index"));
  validate(w);
  return w;
}

Json to_json(const EdgeWeighting& c) {
  Json values = Json::array();
  for (const auto& [key, v] : c.values) {
    Edge e = make_edge(key.first, key.second, c.n);
    values.push_back(Json{{"i", e.i}, {"j", e.j}, {"re", v.real()}, {"im", v.imag()}});
  }
  return Json{{"n", c.n}, {"values", std::move(values)}};
}

EdgeWeighting weighting_from_json(const Json& j) {
  EdgeWeighting c{integer(j.at("n"), "n"), {}};
  validate_dimension(c.n);
  for (const Json& entry : j.at("values")) {
    auto key = edge_key(integer(entry.at("i"), "i"), integer(entry.at("j"), "j"), c.n);
    c.values[key] = Complex(finite(entry.at("re"), "re"), finite(entry.at("im"), "im"));
  }
  return c;
}

Json to_json(const Representation& rho) {
  Json images = Json::object();
  for (const auto& [x, m] : rho.images) images[std::to_string(x)] = matrix_to_json(m);
  return Json{{"n", rho.n}, {"index", rho.space}, {"images", std::move(images)}};
}

Representation representation_from_json(const Json& j) {
  Representation rho;
  rho.n = integer(j.at("n"), "n");
  validate_dimension(rho.n);
  for (const Json& x : j.at("index")) rho.space.push_back(integer(x, "index entry"));
  for (const auto& [key, value] : j.at("images").items()) {
    int x = std::stoi(key);
    if (x < 0 || x >= (1 << rho.n)) throw input_error("image vertex out of range");
    Matrix m = matrix_from_json(value);
    if (m.rows() != rho.dim() || m.cols() != rho.dim())
      throw input_error("image size does not match the index");
    rho.images[x] = std::move(m);
  }
  if (static_cast<int>(rho.images.size()) != (1 << rho.n))
    throw input_error("representation dump must cover every vertex");
  return rho;
}

Json to_json(const MagicMatrix& grid) {
  Json entries = Json::array();
  for (const auto& row : grid.entries) {
    Json jrow = Json::array();
    for (const Matrix& m : row) jrow.push_back(matrix_to_json(m));
    entries.push_back(std::move(jrow));
  }
  return Json{{"m", grid.rows}, {"n", grid.cols}, {"entries", std::move(entries)}};
}

MagicMatrix magic_from_json(const Json& j) {
  MagicMatrix grid{integer(j.at("m"), "m"), integer(j.at("n"), "n"), {}};
  if (grid.rows < 1 || grid.cols < 1) throw input_error("magic matrix shape must be positive");
  for (const Json& row : j.at("entries")) {
    std::vector<Matrix> entries;
    for (const Json& m : row) entries.push_back(matrix_from_json(m));
    grid.entries.push_back(std::move(entries));
  }
  if (static_cast<int>(grid.entries.size()) != grid.rows)
    throw input_error("magic matrix row count mismatch");
  for (const auto& row : grid.entries) {
    if (static_cast<int>(row.size()) != grid.cols)
      throw input_error("magic matrix column count mismatch");
  }
  return grid;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"max_violation", c.max_violation},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"detail", c.detail}});
  }
  return Json{{"title", report.title}, {"pass", report.pass()}, {"checks", std::move(checks)}};
}

Json to_json(const SimplexPoint& t) { return Json(t.entries()); }

SimplexPoint simplex_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("simplex point must be an array");
  std::vector<double> entries;
  for (const Json& v : j) entries.push_back(finite(v, "simplex entry"));
  return SimplexPoint(entries);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qcube
