#pragma once

// JSON / CSV serialization of the library's value types. JSON goes through
// nlohmann::json; CSV writers use a pinned "%.17g" ("%.12g" for mesh rows)
// so identical inputs give byte-identical files.

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "charvar/classify.hpp"
#include "charvar/orbit.hpp"
#include "charvar/realize.hpp"
#include "charvar/surface.hpp"

namespace charvar {

using json = nlohmann::json;

inline json to_json(const BoundaryData& k) { return json::array({k.a, k.b, k.c, k.d}); }

inline json to_json(const CharPoint& p) { return json::array({p.x, p.y, p.z}); }

inline json to_json(const TraceInterval& iv) { return json::array({iv.lo, iv.hi}); }

inline json to_json(const UnitQuaternion& q) { return json::array({q.w, q.i, q.j, q.k}); }

inline json orbit_to_json(const BoundaryData& k, const OrbitRecord& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  return {{"kappa", to_json(k)},
          {"points", std::move(points)},
          {"closed", r.closed},
          {"depth", r.depth_reached},
          {"max_residual", r.max_relation_residual},
          {"cap_hit", r.point_cap_hit}};
}

inline json quadruple_to_json(const RepresentationQuadruple& r) {
  CharacterData cd = extract_character(r);
  return {{"quaternions",
           {{"A", to_json(r.A)}, {"B", to_json(r.B)}, {"C", to_json(r.C)}, {"D", to_json(r.D)}}},
          {"traces",
           {{"a", cd.kappa.a},
            {"b", cd.kappa.b},
            {"c", cd.kappa.c},
            {"d", cd.kappa.d},
            {"x", cd.point.x},
            {"y", cd.point.y},
            {"z", cd.point.z}}},
          {"product_residual", product_residual(r)}};
}

inline json verdict_to_json(const ClosureVerdict& v) {
  return {{"verdict", to_string(v.kind)}, {"evidence", v.evidence}};
}

inline json coverage_to_json(const CoverageReport& c) {
  return {{"cell_size", c.cell_size},
          {"cells_on_surface", c.cells_on_surface},
          {"cells_hit", c.cells_hit},
          {"fraction", c.fraction}};
}

namespace detail {

inline std::string fmt_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt_g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace detail

// One point per row.
inline void orbit_to_csv(std::ostream& os, const OrbitRecord& r) {
  os << "x,y,z\n";
  for (const auto& p : r.points)
    os << detail::fmt_g17(p.x) << ',' << detail::fmt_g17(p.y) << ','
       << detail::fmt_g17(p.z) << '\n';
}

// Plot-ready mesh: n x n grid over (x, y) in [-2,2]^2, one row per real z
// root, lexicographic in (grid index x, grid index y, root index).
inline void mesh_to_csv(std::ostream& os, const BoundaryData& k, int n) {
  if (n < 2) throw InvalidInput("mesh_to_csv: need a grid of at least 2 x 2");
  os << "x,y,z,root_index\n";
  for (int ix = 0; ix < n; ++ix) {
    double x = -2.0 + 4.0 * ix / (n - 1);
    for (int iy = 0; iy < n; ++iy) {
      double y = -2.0 + 4.0 * iy / (n - 1);
      auto roots = solve_z(k, x, y);
      for (std::size_t ridx = 0; ridx < roots.size(); ++ridx)
        os << detail::fmt_g12(x) << ',' << detail::fmt_g12(y) << ','
           << detail::fmt_g12(roots[ridx]) << ',' << ridx << '\n';
    }
  }
}

}  // namespace charvar
