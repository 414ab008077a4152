#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "qcube/funcalg.hpp"
#include "qcube/json_io.hpp"
#include "qcube/magic.hpp"
#include "qcube/rep.hpp"
#include "qcube/selftest.hpp"

namespace {

using namespace qcube;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string binary_label(int x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if (digit(x, k)) s[static_cast<std::size_t>(n - 1 - k)] = '1';
  }
  return s;
}

SimplexPoint parse_simplex(const std::string& text) {
  std::vector<double> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      entries.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw input_error("cannot parse simplex coordinate '" + item + "'");
    }
  }
  return SimplexPoint(entries);
}

void print_report(const Report& report) {
  for (const Check& c : report.checks) {
    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << ": max violation "
              << std::scientific << std::setprecision(3) << c.max_violation << " (tol "
              << c.tolerance << ")";
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n" << std::defaultfloat;
  }
  std::cout << (report.pass() ? "OK" : "FAILED") << ": " << report.title << "\n";
}

void print_matrix(const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::cout << "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      Complex z = m(r, c);
      std::ostringstream cell;
      cell << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+")
           << std::abs(z.imag()) << "i";
      std::cout << std::setw(22) << cell.str();
    }
    std::cout << "\n";
  }
}

void maybe_save(const std::string& path, const Json& j) {
  if (!path.empty()) save_json_file(path, j);
}

int cmd_hypercube_info(int n, const std::string& out) {
  auto [u, v] = vertex_sets(n);
  std::cout << "Q_" << n << ": " << (1 << n) << " vertices, " << edges(n).size() << " edges, "
            << n << " direction classes of size " << (1 << (n - 1)) << "\n";
  std::cout << "U side:";
  for (int x : u) std::cout << " " << binary_label(x, n);
  std::cout << "\nV side:";
  for (int x : v) std::cout << " " << binary_label(x, n);
  std::cout << "\n";
  maybe_save(out, to_json(full_mask(n)));
  return kExitPass;
}

int cmd_path_canon(int n, int base, const std::string& word_text, const std::string& out) {
  PathWord w{n, base, {}};
  std::stringstream ss(word_text);
  int k;
  while (ss >> k) w.indices.push_back(k);
  SignedWord canon = canonicalize(w);
  std::cout << "word " << to_string(w) << " -> " << (canon.sign > 0 ? "+" : "-")
            << to_string(canon.word) << "\n";
  std::cout << "base " << binary_label(base, n) << ", endpoint "
            << binary_label(endpoint(w), n) << (is_loop(w) ? " (loop)" : "") << "\n";
  Json j{{"sign", canon.sign}, {"word", to_json(canon.word)}};
  maybe_save(out, j);
  return kExitPass;
}

int cmd_weighting_check(const std::string& file, double tol, const std::string& out) {
  EdgeWeighting c = weighting_from_json(load_json_file(file));
  Report report = check_admissible(c, tol);
  Report squares = check_square_relations(c, tol);
  for (Check& chk : squares.checks) report.add_check(chk);
  print_report(report);
  maybe_save(out, to_json(report));
  return report.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_rep_build(const std::string& t_text, const std::string& out) {
  SimplexPoint t = parse_simplex(t_text);
  Representation rho = canonical_representation(t);
  std::cout << "representation on C^" << rho.dim() << ", basis:";
  for (int x : rho.space) std::cout << " " << binary_label(x, rho.n);
  std::cout << "\n";
  for (const auto& [x, m] : rho.images) {
    std::cout << "p[" << binary_label(x, rho.n) << "]:\n";
    print_matrix(m);
  }
  Report report = verify_representation(rho);
  print_report(report);
  maybe_save(out, to_json(rho));
  return report.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_rep_classify(const std::string& file, double tol, const std::string& out) {
  EdgeWeighting c = weighting_from_json(load_json_file(file));
  auto blocks = classify(c, tol);
  Json jblocks = Json::array();
  std::cout << blocks.size() << " irreducible block(s)\n";
  for (const auto& block : blocks) {
    std::cout << "block {";
    for (std::size_t i = 0; i < block.component.size(); ++i)
      std::cout << (i ? " " : "") << binary_label(block.component[i], c.n);
    std::cout << "}: t = [";
    for (int k = 0; k < block.t.dimension(); ++k)
      std::cout << (k ? ", " : "") << block.t[k];
    std::cout << "], residual " << std::scientific << std::setprecision(3) << block.residual
              << std::defaultfloat << "\n";
    Json jgauge = Json::object();
    for (const auto& [x, phase] : block.lambda)
      jgauge[std::to_string(x)] = Json{{"re", phase.real()}, {"im", phase.imag()}};
    jblocks.push_back(Json{{"component", block.component},
                           {"t", to_json(block.t)},
                           {"gauge", std::move(jgauge)},
                           {"residual", block.residual}});
  }
  maybe_save(out, Json{{"n", c.n}, {"blocks", std::move(jblocks)}});
  return kExitPass;
}

int cmd_rep_intertwine(const std::string& file_a, const std::string& file_b, double tol,
                       const std::string& out) {
  Representation a = representation_from_json(load_json_file(file_a));
  Representation b = representation_from_json(load_json_file(file_b));
  auto w = find_intertwiner(a, b, tol);
  if (!w) {
    std::cout << "no unitary intertwiner\n";
    maybe_save(out, Json{{"equivalent", false}});
    return kExitCheckFailed;
  }
  double residual = 0.0;
  for (int x = 0; x < (1 << a.n); ++x)
    residual = std::max(residual, ((*w) * a.image(x) - b.image(x) * (*w)).norm());
  std::cout << "unitary intertwiner found, residual " << std::scientific
            << std::setprecision(3) << residual << std::defaultfloat << "\n";
  print_matrix(*w);
  Json jw = Json::array();
  for (Eigen::Index r = 0; r < w->rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < w->cols(); ++c)
      row.push_back(Json{{"re", (*w)(r, c).real()}, {"im", (*w)(r, c).imag()}});
    jw.push_back(std::move(row));
  }
  maybe_save(out, Json{{"equivalent", true}, {"witness", std::move(jw)}, {"residual", residual}});
  return kExitPass;
}

int cmd_sweep(int n, int resolution, double tol, const std::string& out) {
  SimplexGrid grid = simplex_grid(n, resolution);
  Json jpoints = Json::array();
  bool all_pass = true;
  for (const SimplexPoint& t : grid.points) {
    BlockStructure bs = block_structure(t);
    int expected = 0;
    for (const auto& block : bs.blocks) expected += static_cast<int>(block.size() * block.size());
    int dim = generated_algebra_dimension(t);
    auto images = fiber_at(t);
    bool block_ok = true;
    for (const auto& [x, m] : images) block_ok = block_ok && is_t_block_diagonal(m, t, tol);
    bool ok = block_ok && dim == expected;
    all_pass = all_pass && ok;
    Json jblocks = Json::array();
    for (const auto& block : bs.blocks) jblocks.push_back(block);
    jpoints.push_back(Json{{"t", to_json(t)},
                           {"blocks", std::move(jblocks)},
                           {"algebra_dimension", dim},
                           {"expected_dimension", expected},
                           {"block_diagonal", block_ok},
                           {"pass", ok}});
    std::cout << (ok ? "pass" : "FAIL") << "  t = " << to_json(t).dump() << "  dim " << dim
              << "/" << expected << "\n";
  }
  std::cout << (all_pass ? "OK" : "FAILED") << ": " << grid.points.size() << " grid points\n";
  maybe_save(out, Json{{"n", n}, {"resolution", resolution}, {"points", std::move(jpoints)}});
  return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_fillup(const std::string& t_text, double tol, const std::string& out) {
  SimplexPoint t = parse_simplex(t_text);
  if (t.dimension() != 3) throw input_error("fillup expects three coordinates");
  FillUpResult fill = fill_up(t, tol);
  std::cout << "certified column matching:";
  for (int j = 1; j <= 4; ++j) std::cout << " " << fill.column_permutation[j - 1];
  std::cout << "\nwitness residual " << std::scientific << std::setprecision(3)
            << fill.residual << std::defaultfloat << "\n";
  Report report = verify_magic(fill.grid, MagicKind::Unitary, 1e-12);
  print_report(report);
  Json jlabel = Json::object();
  for (const auto& [key, label] : fill.labeling)
    jlabel[std::to_string(key.first) + "," + std::to_string(key.second)] = label;
  Json jw = Json::array();
  for (Eigen::Index r = 0; r < fill.witness.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < fill.witness.cols(); ++c)
      row.push_back(Json{{"re", fill.witness(r, c).real()}, {"im", fill.witness(r, c).imag()}});
    jw.push_back(std::move(row));
  }
  maybe_save(out, Json{{"magic", to_json(fill.grid)},
                       {"witness", std::move(jw)},
                       {"labeling", std::move(jlabel)},
                       {"residual", fill.residual},
                       {"report", to_json(report)}});
  return report.pass() ? kExitPass : kExitCheckFailed;
}

int cmd_selftest(const RunConfig& cfg, const std::string& out) {
  Report report = run_verification(cfg);
  print_report(report);
  maybe_save(out, to_json(report));
  return report.pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercube representation toolkit"};
  app.require_subcommand(1);

  double tolerance = kDefaultTolerance;
  if (const char* env = std::getenv("QCUBE_TOL")) {
    try {
      tolerance = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "invalid QCUBE_TOL\n";
      return kExitBadInput;
    }
  }
  app.add_option("--tol", tolerance, "residual tolerance")->capture_default_str();
  int max_n_flag = max_dimension();
  app.add_option("--max-n", max_n_flag, "largest accepted hypercube dimension")
      ->capture_default_str();

  std::string out, file, file_b, t_text, word_text;
  int n = 3, base = 0, resolution = 10;

  auto* hyper = app.add_subcommand("hypercube", "hypercube combinatorics");
  auto* hyper_info = hyper->add_subcommand("info", "vertex and edge structure");
  hyper_info->add_option("--n", n, "dimension")->required();
  hyper_info->add_option("--out", out, "write the full edge mask as JSON");

  auto* path = app.add_subcommand("path", "path words");
  auto* path_canon = path->add_subcommand("canon", "canonical signed form of a word");
  path_canon->add_option("--n", n, "dimension")->required();
  path_canon->add_option("--base", base, "starting vertex")->required();
  path_canon->add_option("--word", word_text, "space-separated flip directions")->required();
  path_canon->add_option("--out", out, "write the result as JSON");

  auto* weighting = app.add_subcommand("weighting", "edge weightings");
  auto* weighting_check = weighting->add_subcommand("check", "admissibility report");
  weighting_check->add_option("--file", file, "weighting JSON file")->required();
  weighting_check->add_option("--tol", tolerance, "residual tolerance");
  weighting_check->add_option("--out", out, "write the report as JSON");

  auto* rep = app.add_subcommand("rep", "representations");
  auto* rep_build = rep->add_subcommand("build", "build the representation at a simplex point");
  rep_build->add_option("--t", t_text, "comma-separated simplex coordinates")->required();
  rep_build->add_option("--out", out, "write the representation as JSON");
  auto* rep_classify = rep->add_subcommand("classify", "classify a weighting file");
  rep_classify->add_option("--file", file, "weighting JSON file")->required();
  rep_classify->add_option("--tol", tolerance, "residual tolerance");
  rep_classify->add_option("--out", out, "write the classification as JSON");
  auto* rep_intertwine = rep->add_subcommand("intertwine", "find a unitary intertwiner");
  rep_intertwine->add_option("--a", file, "first representation JSON file")->required();
  rep_intertwine->add_option("--b", file_b, "second representation JSON file")->required();
  rep_intertwine->add_option("--tol", tolerance, "acceptance residual");
  rep_intertwine->add_option("--out", out, "write the witness as JSON");

  auto* sweep = app.add_subcommand("sweep", "grid sweep of block structure and spans");
  sweep->add_option("--n", n, "dimension")->required();
  sweep->add_option("--resolution", resolution, "grid resolution")->capture_default_str();
  sweep->add_option("--tol", tolerance, "residual tolerance");
  sweep->add_option("--report", out, "write the per-point report as JSON");

  auto* fillup = app.add_subcommand("fillup", "complete a 2x4 grid to a 4x4 magic unitary");
  fillup->add_option("--t", t_text, "three comma-separated simplex coordinates")->required();
  fillup->add_option("--out", out, "write grid, witness and report as JSON");

  RunConfig cfg;
  auto* selftest = app.add_subcommand("selftest", "run the verification suites");
  selftest->add_option("--n", cfg.max_n, "largest dimension to exercise")->capture_default_str();
  selftest->add_option("--resolution", cfg.grid_resolution, "grid resolution")
      ->capture_default_str();
  selftest->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  selftest->add_option("--samples", cfg.sample_count, "random samples per suite")
      ->capture_default_str();
  selftest->add_option("--out", out, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    set_max_dimension(max_n_flag);
    cfg.tolerance = tolerance;
    if (hyper_info->parsed()) return cmd_hypercube_info(n, out);
    if (path_canon->parsed()) return cmd_path_canon(n, base, word_text, out);
    if (weighting_check->parsed()) return cmd_weighting_check(file, tolerance, out);
    if (rep_build->parsed()) return cmd_rep_build(t_text, out);
    if (rep_classify->parsed()) return cmd_rep_classify(file, tolerance, out);
    if (rep_intertwine->parsed()) return cmd_rep_intertwine(file, file_b, tolerance, out);
    if (sweep->parsed()) return cmd_sweep(n, resolution, tolerance, out);
    if (fillup->parsed()) return cmd_fillup(t_text, kIntertwinerTolerance, out);
    if (selftest->parsed()) return cmd_selftest(cfg, out);
    std::cerr << "no subcommand selected\n";
    return kExitBadInput;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const consistency_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
