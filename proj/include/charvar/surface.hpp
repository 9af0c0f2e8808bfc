#pragma once

// The relative character variety of the four-holed sphere in trace
// coordinates. For boundary traces kappa = (a, b, c, d), the variety is the
// zero level of
//
//   P(x,y,z) = x^2 + y^2 + z^2 + xyz
//              - (ab+cd) x - (ad+bc) y - (ac+bd) z
//              + a^2 + b^2 + c^2 + d^2 + abcd - 4
//
// inside [-2,2]^3. Also here: the trace intervals I_{a,b} attainable by a
// product of two elements with given traces, the sphere criterion, root
// solving in one coordinate, and seeded point sampling.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

// Default |P| tolerance for surface membership.
constexpr double kSurfaceTol = 1e-9;

struct BoundaryData {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

struct CharPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

struct TraceInterval {
  double lo = 0.0, hi = 0.0;

  bool contains(double t) const { return lo <= t && t <= hi; }
  double width() const { return hi - lo; }
};

// Coefficients of P as a polynomial in (x, y, z).
struct SurfaceCoefficients {
  double cx = 0.0, cy = 0.0, cz = 0.0, constant = 0.0;
};

inline SurfaceCoefficients coefficients(const BoundaryData& k) {
  return {k.a * k.b + k.c * k.d, k.a * k.d + k.b * k.c, k.a * k.c + k.b * k.d,
          k.a * k.a + k.b * k.b + k.c * k.c + k.d * k.d + k.a * k.b * k.c * k.d - 4.0};
}

inline double relation(const SurfaceCoefficients& s, const CharPoint& p) {
  return p.x * p.x + p.y * p.y + p.z * p.z + p.x * p.y * p.z - s.cx * p.x -
         s.cy * p.y - s.cz * p.z + s.constant;
}

// P(kappa; p). The point lies on the variety iff this is ~0.
inline double relation(const BoundaryData& k, const CharPoint& p) {
  return relation(coefficients(k), p);
}

// I_{a,b} = [ (ab - sqrt((a^2-4)(b^2-4)))/2 , (ab + sqrt((a^2-4)(b^2-4)))/2 ].
// Degenerates to a point when a or b is +-2.
inline TraceInterval interval(double a, double b) {
  if (a < -2.0 || a > 2.0 || b < -2.0 || b > 2.0)
    throw InvalidInput("interval: traces must lie in [-2, 2]");
  double rad = (a * a - 4.0) * (b * b - 4.0);
  double s = std::sqrt(std::max(rad, 0.0));
  return {(a * b - s) / 2.0, (a * b + s) / 2.0};
}

inline bool intervals_intersect(const TraceInterval& p, const TraceInterval& q) {
  return std::max(p.lo, q.lo) <= std::min(p.hi, q.hi);
}

// Nonempty intersection of I_{a,b} and I_{c,d} makes the level set a
// (possibly degenerate) topological sphere.
inline bool is_sphere(const BoundaryData& k) {
  return intervals_intersect(interval(k.a, k.b), interval(k.c, k.d));
}

// Real roots of P viewed as a quadratic in z for fixed (x, y), ascending.
// Tiny negative discriminants (cancellation noise) are snapped to a double
// root so that exact-in-spirit inputs keep their tangency solutions.
inline std::vector<double> solve_z(const BoundaryData& k, double x, double y) {
  SurfaceCoefficients s = coefficients(k);
  double b = x * y - s.cz;
  double c = x * x + y * y - s.cx * x - s.cy * y + s.constant;
  double disc = b * b - 4.0 * c;
  double snap = 1e-12 * std::max({1.0, b * b, std::abs(c)});
  if (disc < -snap) return {};
  if (disc <= snap) return {-b / 2.0};
  double root = std::sqrt(disc);
  double q = -(b + std::copysign(root, b)) / 2.0;
  double z1 = q;
  double z2 = (q == 0.0) ? 0.0 : c / q;
  if (z1 > z2) std::swap(z1, z2);
  return {z1, z2};
}

struct SampleResult {
  std::vector<CharPoint> points;
  bool complete = false;  // false when the attempt cap ran out first
};

// Deterministic surface sampling: (x, y) uniform on [-2,2]^2 from a
// mt19937_64 stream (53-bit mantissa mapping), z from solve_z. Draws are
// sequential, so a fixed seed fixes the output exactly. Retries until
// `count` points are found or the attempt cap (64*count + 256) runs out;
// an empty or degenerate level set therefore yields a partial result with
// complete = false rather than an error.
inline SampleResult sample_surface(const BoundaryData& k, std::size_t count,
                                   std::uint64_t seed, double tol = kSurfaceTol) {
  SampleResult result;
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };
  std::size_t attempts = 64 * count + 256;
  while (result.points.size() < count && attempts-- > 0) {
    double x = -2.0 + 4.0 * uniform();
    double y = -2.0 + 4.0 * uniform();
    for (double z : solve_z(k, x, y)) {
      if (result.points.size() >= count) break;
      CharPoint p{x, y, z};
      if (std::abs(relation(k, p)) <= tol) result.points.push_back(p);
    }
  }
  result.complete = result.points.size() >= count;
  return result;
}

}  // namespace charvar
