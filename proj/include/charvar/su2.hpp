#pragma once

// Unit quaternions as SU(2) elements: Hamilton arithmetic, traces, and
// breadth-first closure of finitely generated subgroups.
//
// A quaternion (w, i, j, k) stands for the SU(2) matrix with trace 2w; all
// results that leave this module are trace-level, so the exact matrix
// identification never matters. The one convention that does: the
// distinguished circle subgroup (used by the Pin(2) constructions in
// realize.hpp) is the k-axis circle {(cos t, 0, 0, sin t)}, and iota =
// (0, 1, 0, 0) is the unit orthogonal to it. Conjugation by iota inverts
// the circle angle, so {circle} + iota*{circle} is a Pin(2) copy.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

constexpr double kUnitNormTol = 1e-9;

struct UnitQuaternion {
  double w = 1.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr UnitQuaternion() = default;
  constexpr UnitQuaternion(double w_, double i_, double j_, double k_)
      : w(w_), i(i_), j(j_), k(k_) {}

  double norm() const { return std::sqrt(w * w + i * i + j * j + k * k); }

  UnitQuaternion normalized() const {
    double n = norm();
    return {w / n, i / n, j / n, k / n};
  }

  constexpr UnitQuaternion conjugate() const { return {w, -i, -j, -k}; }

  // Inverse of a unit quaternion.
  constexpr UnitQuaternion inverse() const { return conjugate(); }

  constexpr UnitQuaternion operator-() const { return {-w, -i, -j, -k}; }
};

constexpr UnitQuaternion kIdentityQuat{1.0, 0.0, 0.0, 0.0};

// Hamilton product, renormalized to unit length.
inline UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
  UnitQuaternion r{p.w * q.w - p.i * q.i - p.j * q.j - p.k * q.k,
                   p.w * q.i + p.i * q.w + p.j * q.k - p.k * q.j,
                   p.w * q.j - p.i * q.k + p.j * q.w + p.k * q.i,
                   p.w * q.k + p.i * q.j - p.j * q.i + p.k * q.w};
  return r.normalized();
}

inline double trace(const UnitQuaternion& q) { return 2.0 * q.w; }

inline double max_component_diff(const UnitQuaternion& p, const UnitQuaternion& q) {
  return std::max(std::max(std::abs(p.w - q.w), std::abs(p.i - q.i)),
                  std::max(std::abs(p.j - q.j), std::abs(p.k - q.k)));
}

// The distinguished circle subgroup, angle t.
inline UnitQuaternion circle(double t) { return {std::cos(t), 0.0, 0.0, std::sin(t)}; }

// Trace-zero unit orthogonal to the circle; iota * circle(t) * iota^-1 = circle(-t).
constexpr UnitQuaternion iota{0.0, 1.0, 0.0, 0.0};

// Conjugate q by g.
inline UnitQuaternion conjugated_by(const UnitQuaternion& q, const UnitQuaternion& g) {
  return g * q * g.inverse();
}

// ---------------------------------------------------------------------------
// Finite subgroup closure

struct GroupClosure {
  std::vector<UnitQuaternion> elements;  // canonical (sorted) order
  int generator_count = 0;
  bool closed = false;
};

namespace detail {

using QuatKey = std::array<std::int64_t, 4>;

struct QuatKeyHash {
  std::size_t operator()(const QuatKey& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : k) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Membership key: each component rounded to the nearest multiple of tol.
// q and -q get distinct keys (we are in SU(2), not SO(3)).
inline QuatKey quat_key(const UnitQuaternion& q, double tol) {
  return {std::llround(q.w / tol), std::llround(q.i / tol),
          std::llround(q.j / tol), std::llround(q.k / tol)};
}

inline bool quat_less(const UnitQuaternion& a, const UnitQuaternion& b) {
  if (a.w != b.w) return a.w < b.w;
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return a.k < b.k;
}

}  // namespace detail

// Breadth-first product closure of the subgroup generated by `generators`.
// Stops as closed once no product of an element with a generator (or a
// generator inverse) is new; gives up with closed = false when the element
// count would exceed max_order. The default dedup quantum is exact for the
// algebraic entries of the binary polyhedral groups at double precision.
inline GroupClosure closure(const std::vector<UnitQuaternion>& generators,
                            std::size_t max_order = 1024, double dedup_tol = 1e-9) {
  if (max_order < 1) throw InvalidInput("closure: max_order must be >= 1");
  if (dedup_tol <= 0.0) throw InvalidInput("closure: dedup_tol must be positive");
  for (const auto& g : generators)
    if (std::abs(g.norm() - 1.0) > kUnitNormTol)
      throw InvalidInput("closure: generator is not a unit quaternion");

  std::unordered_map<detail::QuatKey, std::size_t, detail::QuatKeyHash> index;
  std::vector<UnitQuaternion> elems;
  auto insert = [&](const UnitQuaternion& q) {
    auto key = detail::quat_key(q, dedup_tol);
    if (index.count(key)) return false;
    index.emplace(key, elems.size());
    elems.push_back(q);
    return true;
  };

  std::vector<UnitQuaternion> step;  // generators and their inverses
  for (const auto& g : generators) {
    step.push_back(g);
    step.push_back(g.inverse());
  }

  insert(kIdentityQuat);
  for (const auto& g : step) insert(g);

  GroupClosure result;
  result.generator_count = static_cast<int>(generators.size());
  bool overflow = elems.size() > max_order;

  std::size_t frontier_begin = 0;
  while (!overflow && frontier_begin < elems.size()) {
    std::size_t frontier_end = elems.size();
    for (std::size_t idx = frontier_begin; idx < frontier_end && !overflow; ++idx) {
      for (const auto& g : step) {
        UnitQuaternion r = elems[idx] * g;
        if (elems.size() >= max_order && !index.count(detail::quat_key(r, dedup_tol))) {
          overflow = true;
          break;
        }
        insert(r);
      }
    }
    frontier_begin = frontier_end;
  }

  result.closed = !overflow;
  std::sort(elems.begin(), elems.end(), detail::quat_less);
  result.elements = std::move(elems);
  return result;
}

// Distinct traces of a closed group, sorted ascending, merged within tol.
inline std::vector<double> trace_set(const GroupClosure& group, double tol = 1e-9) {
  if (!group.closed) throw InvalidInput("trace_set: group closure is not complete");
  std::vector<double> ts;
  ts.reserve(group.elements.size());
  for (const auto& e : group.elements) ts.push_back(trace(e));
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts)
    if (out.empty() || t - out.back() > tol) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Standard generating sets for the binary polyhedral groups. Any generating
// set would do; the closure itself certifies the orders 24 / 48 / 120.

inline std::vector<UnitQuaternion> binary_tetrahedral_generators() {
  return {{0.0, 1.0, 0.0, 0.0}, {0.5, 0.5, 0.5, 0.5}};
}

inline std::vector<UnitQuaternion> binary_octahedral_generators() {
  const double r = std::sqrt(0.5);
  return {{r, r, 0.0, 0.0}, {0.5, 0.5, 0.5, 0.5}};
}

inline std::vector<UnitQuaternion> binary_icosahedral_generators() {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  return {{phi / 2.0, 1.0 / (2.0 * phi), 0.5, 0.0}, {0.5, 0.5, 0.5, 0.5}};
}

}  // namespace charvar
