// cubesize: exact cube-type lattice invariants of lattice polygons and 3D
// lattice polytopes, with certifying unimodular maps.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 verification mismatch,
// 4 unsupported dimension, 5 search budget exhausted.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesize/cubesize.hpp"

using json = nlohmann::ordered_json;
using namespace cubesize;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitBudget = 5;

json int_json(const Int& v) {
  // numbers that fit in 64 bits stay numbers, anything larger is a string
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

json vec_json(const LatticeVector& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(vec_json(row));
  return a;
}

json points_json(const std::vector<LatticeVector>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(vec_json(p));
  return a;
}

std::string vec_text(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

struct LoadedInput {
  LatticePolytope polytope{std::vector<LatticeVector>{LatticeVector{Int(0)}}, 1};
  int exit_code = 0;
};

LoadedInput load_or_fail(const std::string& path) {
  LoadedInput in;
  try {
    in.polytope = load_polytope(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    in.exit_code = kExitParse;
    return in;
  }
  if (in.polytope.dim != 2 && in.polytope.dim != 3) {
    std::cerr << "error: dimension " << in.polytope.dim
              << " is not supported (expected 2 or 3)\n";
    in.exit_code = kExitUnsupported;
  }
  return in;
}

// report for size/width/box: same schema, different certifying map
struct Report {
  int dim = 0;
  Int ls, w;
  std::optional<Int> w2;
  AffineUnimodularMap map = AffineUnimodularMap::identity(1);
  std::vector<LatticeVector> image;
  std::int64_t iterations = 0;
  double ms = 0.0;
  std::optional<bool> oracle_agrees;
};

void print_report(const Report& r, bool as_json) {
  if (as_json) {
    json out;
    out["dim"] = r.dim;
    out["ls"] = int_json(r.ls);
    out["w"] = int_json(r.w);
    if (r.w2) out["w2"] = int_json(*r.w2);
    out["matrix"] = matrix_json(r.map.matrix);
    out["translation"] = vec_json(r.map.translation);
    out["image"] = points_json(r.image);
    out["iterations"] = r.iterations;
    out["ms"] = r.ms;
    if (r.oracle_agrees) out["oracle_agrees"] = *r.oracle_agrees;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "dim " << r.dim << "\n";
  std::cout << "ls " << r.ls << "\n";
  std::cout << "w " << r.w << "\n";
  if (r.w2) std::cout << "w2 " << *r.w2 << "\n";
  std::cout << "matrix ";
  for (const auto& row : r.map.matrix) std::cout << vec_text(row);
  std::cout << "\ntranslation " << vec_text(r.map.translation) << "\n";
  std::cout << "image";
  for (const auto& p : r.image) std::cout << " " << vec_text(p);
  std::cout << "\niterations " << r.iterations << "\n";
  if (r.oracle_agrees) std::cout << "oracle_agrees " << (*r.oracle_agrees ? "yes" : "no") << "\n";
  std::cout << "time " << r.ms << " ms\n";
}

int run_invariant_command(const std::string& which, const std::string& path, bool as_json,
                          bool verify, bool naive3d, std::int64_t budget) {
  auto in = load_or_fail(path);
  if (in.exit_code != 0) return in.exit_code;
  const auto& P = in.polytope;
  Reduce3DOptions opts{!naive3d};

  auto t0 = std::chrono::steady_clock::now();
  Analysis a = analyze(P, opts);
  auto t1 = std::chrono::steady_clock::now();

  Report r;
  r.dim = a.dim;
  r.ls = a.ls;
  r.w = a.w;
  r.w2 = a.w2;
  r.iterations = a.size.iterations;
  r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  // size reports the cube certificate, width and box report the box map
  r.map = (which == "size") ? a.size.map : a.box_map;
  // re-check the certificate before printing it
  Int dd = det(r.map.matrix);
  if (dd != 1 && dd != -1) {
    std::cerr << "internal error: certificate determinant " << dd << "\n";
    return kExitVerify;
  }
  r.image = apply_map(P, r.map).points;

  int exit_code = 0;
  if (verify) {
    OracleCheck chk = oracle_check(P, OracleOptions{budget});
    bool ok = chk.conclusive && chk.ls == a.ls && chk.w == a.w &&
              (!a.w2 || (chk.w2 && *chk.w2 == *a.w2));
    r.oracle_agrees = ok;
    if (!ok) exit_code = kExitVerify;
  }
  print_report(r, as_json);
  return exit_code;
}

int run_oracle(const std::string& path, bool as_json, std::int64_t budget) {
  auto in = load_or_fail(path);
  if (in.exit_code != 0) return in.exit_code;
  const auto& P = in.polytope;

  auto t0 = std::chrono::steady_clock::now();
  OracleResult res = lattice_size_bruteforce(P, OracleOptions{budget});
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  Int dd = det(res.certificate.map.matrix);
  if (dd != 1 && dd != -1) {
    std::cerr << "internal error: certificate determinant " << dd << "\n";
    return kExitVerify;
  }
  auto image = apply_map(P, res.certificate.map).points;
  if (as_json) {
    json out;
    out["dim"] = P.dim;
    out["ls"] = int_json(res.certificate.value);
    out["matrix"] = matrix_json(res.certificate.map.matrix);
    out["translation"] = vec_json(res.certificate.map.translation);
    out["image"] = points_json(image);
    out["iterations"] = res.certificate.iterations;
    out["ms"] = ms;
    out["inconclusive"] = !res.conclusive;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dim " << P.dim << "\n";
    std::cout << "ls " << res.certificate.value << (res.conclusive ? "" : " (inconclusive)")
              << "\n";
    std::cout << "matrix ";
    for (const auto& row : res.certificate.map.matrix) std::cout << vec_text(row);
    std::cout << "\ntranslation " << vec_text(res.certificate.map.translation) << "\n";
    std::cout << "image";
    for (const auto& p : image) std::cout << " " << vec_text(p);
    std::cout << "\niterations " << res.certificate.iterations << "\n";
    std::cout << "time " << ms << " ms\n";
  }
  return res.conclusive ? 0 : kExitBudget;
}

int run_bench(int dim, int count, int coord_max, std::uint64_t seed, bool naive3d) {
  Reduce3DOptions opts{!naive3d};
  std::mt19937_64 rng(seed);
  const bool with_oracle = (dim == 2 && coord_max <= 8) || (dim == 3 && coord_max <= 5);
  std::cout << "idx dim pts e_box ls w w2 iters scans pairs oracle ms\n";
  int bad = 0;
  for (int i = 0; i < count; ++i) {
    auto P = dim == 2 ? random_polytope(rng, 2, coord_max, 3, 8)
                      : random_polytope(rng, 3, coord_max, 4, 10);
    auto t0 = std::chrono::steady_clock::now();
    Int ls, w;
    std::string w2 = "-", scans = "-", pairs = "-";
    std::int64_t iters = 0;
    if (dim == 2) {
      auto t = reduce_to_terminal_2d(P);
      ls = t.state.dx > t.state.dy ? t.state.dx : t.state.dy;
      w = t.state.dx < t.state.dy ? t.state.dx : t.state.dy;
      iters = t.steps;
    } else {
      auto t = reduce_to_terminal_3d(P, opts);
      ls = t.l;
      Int m(-1);
      for (const auto& e : exceptional_directions()) {
        Int we = width(t.polytope, e);
        if (m < 0 || we < m) m = we;
      }
      w = m < t.l1 ? m : t.l1;
      Int inner = m > t.l1 ? m : t.l1;
      w2 = (inner < t.l2 ? inner : t.l2).str();
      iters = t.stats.plane_shears + t.stats.z_shears;
      scans = std::to_string(t.stats.scans);
      std::size_t total = 0;
      for (auto s : t.stats.scan_sizes) total += s;
      pairs = std::to_string(total);
    }
    auto t1 = std::chrono::steady_clock::now();
    std::string oracle = "-";
    if (with_oracle) {
      auto ob = lattice_size_bruteforce(P);
      auto wb = width_bruteforce(P);
      bool ok = ob.conclusive && ob.certificate.value == ls && wb == w;
      oracle = ok ? "ok" : "MISMATCH";
      if (!ok) ++bad;
    }
    std::cout << i << " " << dim << " " << P.points.size() << " " << e_box(P) << " " << ls << " "
              << w << " " << w2 << " " << iters << " " << scans << " " << pairs << " " << oracle
              << " " << std::chrono::duration<double, std::milli>(t1 - t0).count() << "\n";
  }
  if (bad > 0) {
    std::cerr << "error: " << bad << " oracle mismatches\n";
    return kExitVerify;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-size computations for lattice polygons and 3D lattice polytopes"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false, verify = false, naive3d = false;
  std::int64_t budget = 50'000'000;

  auto add_common = [&](CLI::App* cmd, bool with_verify) {
    cmd->add_option("path", path, "polytope file: header \"d n\", then n rows of d integers")
        ->required();
    cmd->add_flag("--json", as_json, "emit a single JSON object");
    if (with_verify) {
      cmd->add_flag("--verify", verify, "cross-check against the enumeration method");
      cmd->add_flag("--naive-3d", naive3d, "disable the single-scan shortcut in 3D");
    }
    cmd->add_option("--budget", budget, "subset budget for the enumeration search");
  };

  auto* size = app.add_subcommand("size", "smallest cube [0,l]^d holding a unimodular image");
  add_common(size, true);
  auto* width_cmd = app.add_subcommand("width", "lattice width (and the middle invariant in 3D)");
  add_common(width_cmd, true);
  auto* box = app.add_subcommand("box", "componentwise-minimal axis-parallel box");
  add_common(box, true);
  auto* oracle = app.add_subcommand("oracle", "enumeration-based lattice size (slow, exact)");
  add_common(oracle, false);

  auto* bench = app.add_subcommand("bench", "random instances with timing and agreement");
  int bdim = 2, bcount = 10, bcoord = 6;
  std::uint64_t bseed = 1;
  bench->add_option("--dim", bdim, "instance dimension")->check(CLI::IsMember({2, 3}));
  bench->add_option("--count", bcount, "number of instances")->check(CLI::NonNegativeNumber);
  bench->add_option("--coord-max", bcoord, "coordinate range [0,C]")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bseed, "random seed");
  bench->add_flag("--naive-3d", naive3d, "disable the single-scan shortcut in 3D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (size->parsed()) return run_invariant_command("size", path, as_json, verify, naive3d, budget);
    if (width_cmd->parsed())
      return run_invariant_command("width", path, as_json, verify, naive3d, budget);
    if (box->parsed()) return run_invariant_command("box", path, as_json, verify, naive3d, budget);
    if (oracle->parsed()) return run_oracle(path, as_json, budget);
    if (bench->parsed()) return run_bench(bdim, bcount, bcoord, bseed, naive3d);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
