// charvar: trace-coordinate dynamics on the four-holed-sphere character
// variety. Subcommands cover the surface report / mesh export, twist words,
// orbit enumeration, point classification, the (a, c) family scan, and
// explicit SU(2) realization.
//
// Exit codes: 0 success, 1 usage, 2 numeric/degeneracy error, 3 caps
// exceeded. Machine-readable output goes to stdout, diagnostics to stderr.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charvar/classify.hpp"
#include "charvar/orbit.hpp"
#include "charvar/realize.hpp"
#include "charvar/serialize.hpp"
#include "charvar/surface.hpp"
#include "charvar/twist.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int g_exit_code = 0;

double parse_trace_token(std::string tok) {
  auto strip = [](std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  };
  strip(tok);
  double sign = 1.0;
  if (!tok.empty() && (tok.front() == '+' || tok.front() == '-')) {
    sign = tok.front() == '-' ? -1.0 : 1.0;
    tok.erase(tok.begin());
  }
  // Exact shorthands, so flagship inputs suffer no decimal round-off.
  if (tok == "sqrt2") return sign * std::sqrt(2.0);
  if (tok == "phi") return sign * (std::sqrt(5.0) + 1.0) / 2.0;
  if (tok.empty()) throw UsageError("empty numeric value");
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size())
    throw UsageError("cannot parse numeric value '" + tok + "'");
  return sign * v;
}

std::vector<double> parse_values(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::string::size_type pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    out.push_back(parse_trace_token(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != n)
    throw UsageError(std::string(what) + " must have " + std::to_string(n) +
                     " comma-separated values");
  return out;
}

charvar::BoundaryData parse_kappa(const std::string& text) {
  auto v = parse_values(text, 4, "--kappa");
  for (double t : v)
    if (t < -2.0 || t > 2.0)
      throw UsageError("--kappa entries must lie in [-2, 2]");
  return {v[0], v[1], v[2], v[3]};
}

// --point accepts "x,y,z" or the literal "sample" (seeded surface draw).
charvar::CharPoint resolve_point(const std::string& text, const charvar::BoundaryData& k,
                                 std::uint64_t seed, double tol) {
  if (text == "sample") {
    auto sample = charvar::sample_surface(k, 1, seed, tol);
    if (sample.points.empty())
      throw charvar::InvalidInput("could not sample a surface point (degenerate or "
                                  "empty level set)");
    return sample.points[0];
  }
  auto v = parse_values(text, 3, "--point");
  return {v[0], v[1], v[2]};
}

std::pair<double, double> parse_range(const std::string& text, const char* what) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError(std::string(what) + " must look like lo:hi");
  double lo = parse_trace_token(text.substr(0, colon));
  double hi = parse_trace_token(text.substr(colon + 1));
  if (!(lo <= hi) || lo <= -2.0 || hi >= 2.0)
    throw UsageError(std::string(what) + " must satisfy -2 < lo <= hi < 2");
  return {lo, hi};
}

void cmd_surface(const std::string& kappa_s, int mesh_n) {
  charvar::BoundaryData k = parse_kappa(kappa_s);
  if (mesh_n > 0) {
    charvar::mesh_to_csv(std::cout, k, mesh_n);
    return;
  }
  auto s = charvar::coefficients(k);
  auto i_ab = charvar::interval(k.a, k.b), i_cd = charvar::interval(k.c, k.d);
  auto i_bc = charvar::interval(k.b, k.c), i_ad = charvar::interval(k.a, k.d);
  auto i_ac = charvar::interval(k.a, k.c), i_bd = charvar::interval(k.b, k.d);
  bool sphere = charvar::intervals_intersect(i_ab, i_cd);
  charvar::json out{
      {"kappa", charvar::to_json(k)},
      {"coefficients",
       {{"x", s.cx}, {"y", s.cy}, {"z", s.cz}, {"constant", s.constant}}},
      {"intervals",
       {{"ab", charvar::to_json(i_ab)},
        {"cd", charvar::to_json(i_cd)},
        {"bc", charvar::to_json(i_bc)},
        {"ad", charvar::to_json(i_ad)},
        {"ac", charvar::to_json(i_ac)},
        {"bd", charvar::to_json(i_bd)}}},
      {"sphere", sphere}};
  bool at_corner = false;
  for (double t : {k.a, k.b, k.c, k.d})
    if (std::abs(std::abs(t) - 2.0) <= 1e-12) at_corner = true;
  if (sphere) {
    double lo = std::max(i_ab.lo, i_cd.lo), hi = std::min(i_ab.hi, i_cd.hi);
    out["intersection"] = charvar::json::array({lo, hi});
    out["degenerate"] = at_corner || hi - lo <= 0.0;
  } else {
    out["intersection"] = nullptr;
    out["degenerate"] = true;
  }
  std::cout << out.dump(2) << '\n';
}

void cmd_twist(const std::string& kappa_s, const std::string& point_s,
               const std::string& word_s, double tol, std::uint64_t seed) {
  charvar::BoundaryData k = parse_kappa(kappa_s);
  charvar::CharPoint p = resolve_point(point_s, k, seed, tol);
  double res = charvar::relation(k, p);
  if (std::abs(res) > tol)
    throw charvar::InvalidInput("input point is off the surface (residual " +
                                std::to_string(res) + ")");
  charvar::TwistWord word = charvar::parse_word(word_s);
  charvar::CharPoint img = charvar::apply_word(k, p, word);
  charvar::json out{{"kappa", charvar::to_json(k)},
                    {"input", charvar::to_json(p)},
                    {"word", charvar::to_string(word)},
                    {"point", charvar::to_json(img)},
                    {"residual", charvar::relation(k, img)}};
  std::cout << out.dump(2) << '\n';
}

void cmd_orbit(const std::string& kappa_s, const std::string& point_s,
               const charvar::OrbitOptions& opt, double cell, const std::string& format,
               std::uint64_t seed) {
  charvar::BoundaryData k = parse_kappa(kappa_s);
  charvar::CharPoint p = resolve_point(point_s, k, seed, opt.surface_tol);
  charvar::OrbitRecord record = charvar::orbit_bfs(k, p, opt);
  if (format == "csv") {
    charvar::orbit_to_csv(std::cout, record);
  } else {
    charvar::json out = charvar::orbit_to_json(k, record);
    out["caps"] = {{"depth", opt.max_depth}, {"points", opt.max_points}};
    if (cell > 0.0)
      out["coverage"] = charvar::coverage_to_json(charvar::coverage(record.points, k, cell));
    std::cout << out.dump(2) << '\n';
  }
  std::cerr << "orbit: count=" << record.points.size()
            << " closed=" << (record.closed ? "true" : "false")
            << " depth=" << record.depth_reached
            << " max_residual=" << record.max_relation_residual << '\n';
  if (!record.closed) g_exit_code = 3;
}

void cmd_classify(const std::string& kappa_s, const std::string& point_s, double tol,
                  std::uint64_t seed) {
  charvar::BoundaryData k = parse_kappa(kappa_s);
  charvar::CharPoint p = resolve_point(point_s, k, seed, tol);
  charvar::ClassifyOptions opt;
  opt.surface_tol = tol;
  charvar::ClosureVerdict verdict = charvar::classify_closure(k, p, opt);
  charvar::json out = charvar::verdict_to_json(verdict);
  out["kappa"] = charvar::to_json(k);
  out["point"] = charvar::to_json(p);
  out["in_family_f"] = charvar::is_in_family_f(k);
  out["residual"] = charvar::relation(k, p);
  std::cout << out.dump(2) << '\n';
}

void cmd_scan(const std::string& a_range_s, const std::string& c_range_s, int steps,
              const charvar::OrbitOptions& opt) {
  if (steps < 1) throw UsageError("--steps must be >= 1");
  auto [a_lo, a_hi] = parse_range(a_range_s, "--a-range");
  auto [c_lo, c_hi] = parse_range(c_range_s, "--c-range");
  auto grid_value = [steps](double lo, double hi, int idx) {
    return steps == 1 ? lo : lo + (hi - lo) * idx / (steps - 1);
  };
  std::cout << "a,c,in_f,orbit_size,closed\n";
  for (int ia = 0; ia < steps; ++ia) {
    double a = grid_value(a_lo, a_hi, ia);
    for (int ic = 0; ic < steps; ++ic) {
      double c = grid_value(c_lo, c_hi, ic);
      charvar::BoundaryData k{a, a, c, -c};
      bool in_f = charvar::is_in_family_f(k);
      charvar::CharPoint start{a * a - 2.0, 0.0, 0.0};
      charvar::OrbitRecord record = charvar::orbit_bfs(k, start, opt);
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%d,%zu,%d\n", a, c, in_f ? 1 : 0,
                    record.points.size(), record.closed ? 1 : 0);
      std::cout << buf;
    }
  }
}

void cmd_realize(const std::string& kappa_s, const std::string& point_s, bool perturb,
                 double tol, std::uint64_t seed) {
  charvar::BoundaryData k = parse_kappa(kappa_s);
  charvar::CharPoint p = resolve_point(point_s, k, seed, tol);
  charvar::RealizeOptions opt;
  opt.tol = tol;
  opt.perturb = perturb;
  charvar::RepresentationQuadruple rep = charvar::realize_quadruple(k, p, opt);
  charvar::json out = charvar::quadruple_to_json(rep);
  out["requested"] = {{"kappa", charvar::to_json(k)}, {"point", charvar::to_json(p)}};
  std::cout << out.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-coordinate dynamics on the four-holed-sphere SU(2) "
               "character variety"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::string kappa_s, point_s = "sample", word_s, format = "json";
  std::string a_range_s = "0.1:1.9", c_range_s = "0.1:1.9";
  int mesh_n = 0, steps = 20;
  double tol = 1e-8, cell = 0.0;
  std::uint64_t seed = 1;
  charvar::OrbitOptions orbit_opt;
  bool perturb = false;

  auto* surface = app.add_subcommand(
      "surface", "Coefficients, trace intervals and sphere verdict; --mesh N emits "
                 "a CSV plot mesh instead");
  surface->add_option("--kappa", kappa_s, "boundary traces a,b,c,d (sqrt2/phi accepted)")
      ->required();
  surface->add_option("--mesh", mesh_n, "emit an N x N surface mesh as CSV");

  auto* twist = app.add_subcommand("twist", "Apply a twist word to a surface point");
  twist->add_option("--kappa", kappa_s)->required();
  twist->add_option("--point", point_s, "x,y,z or 'sample'")->required();
  twist->add_option("--word", word_s, "letters X x Y y Z z, applied left to right");
  twist->add_option("--tol", tol, "surface membership tolerance");
  twist->add_option("--seed", seed, "seed for --point sample");

  auto* orbit = app.add_subcommand("orbit", "Enumerate the twist orbit of a point");
  orbit->add_option("--kappa", kappa_s)->required();
  orbit->add_option("--point", point_s, "x,y,z or 'sample'")->required();
  orbit->add_option("--depth", orbit_opt.max_depth, "depth cap");
  orbit->add_option("--grid", orbit_opt.grid, "deduplication grid");
  orbit->add_option("--max-points", orbit_opt.max_points, "point cap");
  orbit->add_option("--tol", orbit_opt.surface_tol, "surface membership tolerance");
  orbit->add_option("--cell", cell, "also report cell coverage at this cell size");
  orbit->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  orbit->add_option("--seed", seed, "seed for --point sample");

  auto* classify = app.add_subcommand("classify", "Classify the image-closure of a point");
  classify->add_option("--kappa", kappa_s)->required();
  classify->add_option("--point", point_s, "x,y,z or 'sample'")->required();
  classify->add_option("--tol", tol, "surface membership tolerance");
  classify->add_option("--seed", seed, "seed for --point sample");

  auto* scan = app.add_subcommand(
      "scan", "Grid-scan kappa = (a,a,c,-c): family membership and invariant-pair "
              "orbit size, as CSV");
  scan->add_option("--a-range", a_range_s, "lo:hi value range for a");
  scan->add_option("--c-range", c_range_s, "lo:hi value range for c");
  scan->add_option("--steps", steps, "grid points per axis");
  scan->add_option("--depth", orbit_opt.max_depth, "orbit depth cap");
  scan->add_option("--grid", orbit_opt.grid, "orbit deduplication grid");
  scan->add_option("--max-points", orbit_opt.max_points, "orbit point cap");

  auto* realize = app.add_subcommand("realize", "Construct an SU(2) quadruple for a point");
  realize->add_option("--kappa", kappa_s)->required();
  realize->add_option("--point", point_s, "x,y,z or 'sample'")->required();
  realize->add_option("--tol", tol, "surface membership tolerance");
  realize->add_flag("--perturb", perturb,
                    "allow the minimal placement perturbation near endpoints");
  realize->add_option("--seed", seed, "seed for --point sample");

  try {
    app.parse(argc, argv);
    if (surface->parsed()) cmd_surface(kappa_s, mesh_n);
    if (twist->parsed()) cmd_twist(kappa_s, point_s, word_s, tol, seed);
    if (orbit->parsed()) cmd_orbit(kappa_s, point_s, orbit_opt, cell, format, seed);
    if (classify->parsed()) cmd_classify(kappa_s, point_s, tol, seed);
    if (scan->parsed()) cmd_scan(a_range_s, c_range_s, steps, orbit_opt);
    if (realize->parsed()) cmd_realize(kappa_s, point_s, perturb, tol, seed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const charvar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return g_exit_code;
}
