#pragma once

// Orbit enumeration under the three twists and their inverses, with
// grid-based deduplication, plus a cell-coverage diagnostic.
//
// Deduplication: a point's cell is each coordinate rounded to the nearest
// multiple of `grid`. A candidate is a duplicate if its cell, or any of the
// 26 neighboring cells, already holds a point within max-metric distance
// `grid`; the neighbor probe keeps physically equal points that straddle a
// cell boundary from double-counting.
//
// "closed" means the frontier emptied before the depth cap with the point
// cap never hit; it is a statement about the caps used, not a certificate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/surface.hpp"
#include "charvar/twist.hpp"

namespace charvar {

struct OrbitOptions {
  int max_depth = 12;
  double grid = 1e-6;
  std::size_t max_points = 1'000'000;
  double surface_tol = 1e-8;  // precondition on the start point
  double drift_tol = 1e-7;    // abort beyond this relation residual
};

struct OrbitRecord {
  std::vector<CharPoint> points;  // sorted lexicographically
  int depth_reached = 0;
  bool closed = false;        // frontier emptied within the caps
  bool point_cap_hit = false;
  double max_relation_residual = 0.0;
};

namespace detail {

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t v : {k.x, k.y, k.z}) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

inline CellKey cell_of(const CharPoint& p, double grid) {
  return {std::llround(p.x / grid), std::llround(p.y / grid),
          std::llround(p.z / grid)};
}

inline bool point_less(const CharPoint& a, const CharPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace detail

// Breadth-first closure of {p} under the six generator maps.
inline OrbitRecord orbit_bfs(const BoundaryData& k, const CharPoint& p,
                             const OrbitOptions& opt = {}) {
  if (opt.grid <= 0.0) throw InvalidInput("orbit_bfs: grid must be positive");
  if (opt.max_depth < 0) throw InvalidInput("orbit_bfs: max_depth must be >= 0");
  double res0 = std::abs(relation(k, p));
  if (res0 > opt.surface_tol)
    throw InvalidInput("orbit_bfs: start point is off the surface (residual " +
                       std::to_string(res0) + ")");

  const SurfaceCoefficients s = coefficients(k);
  std::unordered_map<detail::CellKey, std::size_t, detail::CellKeyHash> cells;
  std::vector<CharPoint> points;

  auto find_duplicate = [&](const CharPoint& q) {
    detail::CellKey base = detail::cell_of(q, opt.grid);
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = cells.find({base.x + dx, base.y + dy, base.z + dz});
          if (it == cells.end()) continue;
          const CharPoint& held = points[it->second];
          double dist = std::max({std::abs(held.x - q.x), std::abs(held.y - q.y),
                                  std::abs(held.z - q.z)});
          if (dist <= opt.grid) return true;
        }
    return false;
  };
  auto insert = [&](const CharPoint& q) {
    if (find_duplicate(q)) return false;
    cells.emplace(detail::cell_of(q, opt.grid), points.size());
    points.push_back(q);
    return true;
  };

  OrbitRecord record;
  record.max_relation_residual = res0;
  insert(p);

  std::size_t frontier_begin = 0;
  int depth = 0;
  bool exhausted = false;
  while (depth < opt.max_depth && !record.point_cap_hit) {
    std::size_t frontier_end = points.size();
    if (frontier_begin == frontier_end) {
      exhausted = true;
      break;
    }
    ++depth;
    for (std::size_t idx = frontier_begin; idx < frontier_end && !record.point_cap_hit;
         ++idx) {
      const CharPoint base = points[idx];
      const CharPoint images[6] = {twist_x(s, base),         twist_y(s, base),
                                   twist_z(s, base),         twist_x_inverse(s, base),
                                   twist_y_inverse(s, base), twist_z_inverse(s, base)};
      for (const CharPoint& q : images) {
        if (points.size() >= opt.max_points && !find_duplicate(q)) {
          record.point_cap_hit = true;
          break;
        }
        if (insert(q)) {
          double r = std::abs(relation(s, q));
          record.max_relation_residual = std::max(record.max_relation_residual, r);
          if (r > opt.drift_tol)
            throw DriftError("orbit_bfs: relation residual " + std::to_string(r) +
                             " exceeded the drift bound at depth " +
                             std::to_string(depth));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  if (!exhausted && !record.point_cap_hit && frontier_begin == points.size())
    exhausted = true;  // final level produced nothing new

  record.depth_reached = depth;
  record.closed = exhausted && !record.point_cap_hit;
  std::sort(points.begin(), points.end(), detail::point_less);
  record.points = std::move(points);
  return record;
}

inline OrbitRecord orbit_bfs(const BoundaryData& k, const CharPoint& p, int max_depth,
                             double grid) {
  OrbitOptions opt;
  opt.max_depth = max_depth;
  opt.grid = grid;
  return orbit_bfs(k, p, opt);
}

// True iff the orbit closes within the caps.
inline bool is_discrete_orbit(const BoundaryData& k, const CharPoint& p,
                              const OrbitOptions& opt = {}) {
  return orbit_bfs(k, p, opt).closed;
}

inline bool is_discrete_orbit(const BoundaryData& k, const CharPoint& p, int max_depth,
                              double grid) {
  return orbit_bfs(k, p, max_depth, grid).closed;
}

// ---------------------------------------------------------------------------
// Coverage diagnostic: fraction of surface-crossing cells of a cubical
// partition of [-2,2]^3 that contain an orbit point.

struct CoverageReport {
  double cell_size = 0.0;
  std::size_t cells_on_surface = 0;
  std::size_t cells_hit = 0;
  double fraction = 0.0;
};

inline CoverageReport coverage(const std::vector<CharPoint>& orbit_points,
                               const BoundaryData& k, double cell_size) {
  if (cell_size <= 0.0) throw InvalidInput("coverage: cell_size must be positive");
  const std::size_t n = static_cast<std::size_t>(std::ceil(4.0 / cell_size));
  if (n > 512) throw InvalidInput("coverage: cell_size too small (grid > 512^3)");

  const SurfaceCoefficients s = coefficients(k);
  auto corner = [&](std::size_t i) { return -2.0 + cell_size * static_cast<double>(i); };

  // Corner values once; a cell is on-surface when the relation changes sign
  // over its corners or is small at the center.
  std::vector<double> vals((n + 1) * (n + 1) * (n + 1));
  auto vid = [n](std::size_t i, std::size_t j, std::size_t l) {
    return (i * (n + 1) + j) * (n + 1) + l;
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t l = 0; l <= n; ++l)
        vals[vid(i, j, l)] = relation(s, {corner(i), corner(j), corner(l)});

  std::vector<bool> on_surface(n * n * n, false);
  auto cid = [n](std::size_t i, std::size_t j, std::size_t l) {
    return (i * n + j) * n + l;
  };
  CoverageReport report;
  report.cell_size = cell_size;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        double lo = vals[vid(i, j, l)], hi = lo;
        for (int corner_bits = 1; corner_bits < 8; ++corner_bits) {
          double v = vals[vid(i + ((corner_bits >> 2) & 1), j + ((corner_bits >> 1) & 1),
                              l + (corner_bits & 1))];
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        bool on = lo <= 0.0 && hi >= 0.0;
        if (!on) {
          CharPoint center{corner(i) + cell_size / 2.0, corner(j) + cell_size / 2.0,
                           corner(l) + cell_size / 2.0};
          on = std::abs(relation(s, center)) <= cell_size;
        }
        if (on) {
          on_surface[cid(i, j, l)] = true;
          ++report.cells_on_surface;
        }
      }

  std::vector<bool> hit(n * n * n, false);
  auto clamp_idx = [&](double t) {
    double raw = std::floor((t + 2.0) / cell_size);
    return static_cast<std::size_t>(std::clamp(raw, 0.0, static_cast<double>(n - 1)));
  };
  for (const CharPoint& p : orbit_points) {
    std::size_t id = cid(clamp_idx(p.x), clamp_idx(p.y), clamp_idx(p.z));
    if (on_surface[id] && !hit[id]) {
      hit[id] = true;
      ++report.cells_hit;
    }
  }
  report.fraction = report.cells_on_surface == 0
                        ? 0.0
                        : static_cast<double>(report.cells_hit) /
                              static_cast<double>(report.cells_on_surface);
  return report;
}

inline CoverageReport coverage(const OrbitRecord& orbit, const BoundaryData& k,
                               double cell_size) {
  return coverage(orbit.points, k, cell_size);
}

}  // namespace charvar
