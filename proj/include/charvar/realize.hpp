#pragma once

// Explicit SU(2) quadruples (A, B, C, D) with ABCD = I realizing given
// trace data (a, b, c, d; x, y, z).
//
// Construction: A goes on the distinguished circle axis with trace a; B is
// placed in the (j,k) vector plane with trace b and trace(AB) = x. For a
// unit quaternion C the four conditions
//
//   trace(C) = c,  trace(CA) = z,  trace(BC) = y,  trace(ABC) = d
//
// are linear in the components of C (trace(PQ) = 2 (P_w Q_w - P_v . Q_v)),
// so C comes from a 4x4 solve and D = (ABC)^-1 makes the product relation
// exact by construction; trace(D) = trace(ABC) then matches d. Unit norm of
// C is implied by the surface relation and is asserted, never forced.
//
// The system is rank-deficient precisely when A and B are coaxial, i.e.
// when x sits at an endpoint of I_{a,b} (this includes a or b at +-2). At
// an exact endpoint the representation itself must be coaxial, and a
// dedicated path places A, B on the circle axis and solves the then
// two-variable system for C directly, picking the canonical solution with
// vanishing j component. Between the two regimes (x close to, but not at,
// an endpoint) the solve is too ill-conditioned to trust by default and
// raises DegenerateConfiguration; opting in runs it anyway at the true
// placement, with accuracy degrading as x approaches the endpoint.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/su2.hpp"
#include "charvar/surface.hpp"

namespace charvar {

struct RepresentationQuadruple {
  UnitQuaternion A, B, C, D;
};

struct CharacterData {
  BoundaryData kappa;
  CharPoint point;
};

// The seven trace coordinates of a quadruple.
inline CharacterData extract_character(const RepresentationQuadruple& r) {
  return {{trace(r.A), trace(r.B), trace(r.C), trace(r.D)},
          {trace(r.A * r.B), trace(r.B * r.C), trace(r.C * r.A)}};
}

// Max component deviation of A*B*C*D from the identity.
inline double product_residual(const RepresentationQuadruple& r) {
  return max_component_diff(r.A * r.B * r.C * r.D, kIdentityQuat);
}

inline RepresentationQuadruple conjugated(const RepresentationQuadruple& r,
                                          const UnitQuaternion& g) {
  return {conjugated_by(r.A, g), conjugated_by(r.B, g), conjugated_by(r.C, g),
          conjugated_by(r.D, g)};
}

struct RealizeOptions {
  double tol = kSurfaceTol;       // surface membership precondition
  bool perturb = false;           // opt into the degraded near-endpoint solve
  double rank_threshold = 1e-4;   // minimum alpha*beta*sin(phi) for the 4x4 solve
  double endpoint_snap = 1e-9;    // |x - endpoint| treated as exactly coaxial
  double consistency_tol = 1e-6;  // coaxial-path consistency checks
  double norm_tol = 1e-6;         // |C| - 1 assertion
};

namespace detail {

// Solve M v = rhs by Gaussian elimination with partial pivoting. Returns the
// smallest pivot magnitude encountered.
inline double solve4(std::array<std::array<double, 4>, 4> m, std::array<double, 4> rhs,
                     std::array<double, 4>& out) {
  double min_pivot = std::numeric_limits<double>::infinity();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    min_pivot = std::min(min_pivot, std::abs(m[col][col]));
    if (m[col][col] == 0.0) return 0.0;
    for (int r = col + 1; r < 4; ++r) {
      double f = m[r][col] / m[col][col];
      for (int cc = col; cc < 4; ++cc) m[r][cc] -= f * m[col][cc];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = 3; r >= 0; --r) {
    double s = rhs[r];
    for (int cc = r + 1; cc < 4; ++cc) s -= m[r][cc] * out[cc];
    out[r] = s / m[r][r];
  }
  return min_pivot;
}

// Row of the linear system expressing trace(Q C) = value.
inline std::array<double, 4> trace_row(const UnitQuaternion& q) {
  return {2.0 * q.w, -2.0 * q.i, -2.0 * q.j, -2.0 * q.k};
}

inline RepresentationQuadruple finish(const UnitQuaternion& a, const UnitQuaternion& b,
                                      const UnitQuaternion& c) {
  UnitQuaternion abc = a * b * c;
  return {a, b, c, abc.inverse()};
}

}  // namespace detail

inline RepresentationQuadruple realize_quadruple(const BoundaryData& k,
                                                 const CharPoint& p,
                                                 const RealizeOptions& opt = {}) {
  double res = relation(k, p);
  if (std::abs(res) > opt.tol)
    throw InvalidInput("realize_quadruple: point is off the surface (residual " +
                       std::to_string(res) + ")");
  for (double t : {k.a, k.b, k.c, k.d, p.x, p.y, p.z})
    if (std::abs(t) > 2.0 + 1e-9)
      throw InvalidInput("realize_quadruple: trace outside [-2, 2]");

  const double alpha = std::sqrt(std::max(0.0, 1.0 - k.a * k.a / 4.0));
  const double beta = std::sqrt(std::max(0.0, 1.0 - k.b * k.b / 4.0));
  const UnitQuaternion a{k.a / 2.0, 0.0, 0.0, alpha};

  // I_{a,b} endpoints in the same arithmetic as the placement below.
  const double half_ab = k.a * k.b / 2.0;
  const double spread = 2.0 * alpha * beta;
  const double lo = half_ab - spread;
  const double hi = half_ab + spread;
  const double d_lo = std::abs(p.x - lo);
  const double d_hi = std::abs(p.x - hi);

  double cos_phi = spread > 0.0 ? (half_ab - p.x) / spread : 2.0;
  double sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));

  if (std::abs(cos_phi) > 1.0 || alpha * beta * sin_phi < opt.rank_threshold) {
    if (std::min(d_lo, d_hi) <= opt.endpoint_snap) {
      // Coaxial: A and B on the circle axis; sign picks which endpoint x is.
      const double sgn = d_lo <= d_hi ? 1.0 : -1.0;
      const UnitQuaternion b{k.b / 2.0, 0.0, 0.0, sgn * beta};
      const UnitQuaternion e = a * b;
      const double c0 = k.c / 2.0;
      // Each remaining condition reads den * c3 = num; they must agree.
      const std::array<std::array<double, 2>, 3> eqs{{
          {2.0 * alpha, 2.0 * c0 * a.w - p.z},
          {2.0 * sgn * beta, 2.0 * c0 * b.w - p.y},
          {2.0 * e.k, 2.0 * c0 * e.w - k.d},
      }};
      int best = 0;
      for (int i = 1; i < 3; ++i)
        if (std::abs(eqs[i][0]) > std::abs(eqs[best][0])) best = i;
      const double c3 =
          std::abs(eqs[best][0]) < 1e-12 ? 0.0 : eqs[best][1] / eqs[best][0];
      for (const auto& eq : eqs)
        if (std::abs(eq[0] * c3 - eq[1]) > opt.consistency_tol)
          throw InconsistentInput(
              "realize_quadruple: trace data is not realizable with coaxial A, B "
              "(consistency defect " +
              std::to_string(std::abs(eq[0] * c3 - eq[1])) + ")");
      const double r2 = 1.0 - c0 * c0 - c3 * c3;
      if (r2 < -opt.consistency_tol)
        throw InconsistentInput("realize_quadruple: no unit C exists for the "
                                "requested coaxial trace data");
      const UnitQuaternion c{c0, std::sqrt(std::max(0.0, r2)), 0.0, c3};
      return detail::finish(a, b, c);
    }
    if (std::abs(cos_phi) > 1.0)
      throw InconsistentInput("realize_quadruple: x lies outside the trace "
                              "interval of (a, b); no representation exists");
    if (!opt.perturb)
      throw DegenerateConfiguration(
          "realize_quadruple: x is close to, but not at, an endpoint of "
          "I_{a,b}; the linear system for C is rank-deficient (conditioning ~" +
          std::to_string(1.0 / std::max(alpha * beta * sin_phi, 1e-300)) +
          "). Use the exact endpoint, or opt into perturbation.");
    // Opted in: keep the true (barely off-axis) placement, flooring the
    // angle only enough to keep the solve formally nonsingular. Accuracy
    // degrades with the conditioning; the norm assertion below is relaxed
    // accordingly.
    sin_phi = std::max(sin_phi, 1e-9);
    cos_phi = std::copysign(std::sqrt(std::max(0.0, 1.0 - sin_phi * sin_phi)), cos_phi);
  }

  const UnitQuaternion b{k.b / 2.0, 0.0, beta * sin_phi, beta * cos_phi};
  const UnitQuaternion e = a * b;
  std::array<std::array<double, 4>, 4> m{{{2.0, 0.0, 0.0, 0.0},
                                          detail::trace_row(a),
                                          detail::trace_row(b),
                                          detail::trace_row(e)}};
  std::array<double, 4> rhs{k.c, p.z, p.y, k.d};
  std::array<double, 4> sol{};
  double min_pivot = detail::solve4(m, rhs, sol);
  if (min_pivot <= 1e-12)
    throw DegenerateConfiguration(
        "realize_quadruple: linear system for C is numerically singular "
        "(smallest pivot " +
        std::to_string(min_pivot) + ")");

  const UnitQuaternion c{sol[0], sol[1], sol[2], sol[3]};
  const double norm_defect = std::abs(c.norm() - 1.0);
  const double norm_bound = opt.perturb ? std::max(opt.norm_tol, 1e-2) : opt.norm_tol;
  if (norm_defect > norm_bound)
    throw InconsistentInput("realize_quadruple: solved C is not a unit "
                            "quaternion (|C| - 1 = " +
                            std::to_string(norm_defect) +
                            "); trace data is not realizable");
  return detail::finish(a, b, c);
}

// ---------------------------------------------------------------------------
// Direct constructions.

// All four generators on the distinguished circle, angles summing to zero.
// The character data is (2cos t_a, ..., 2cos(t_a+t_b), 2cos(t_b+t_c),
// 2cos(t_c+t_a)) and satisfies the surface relation at trig-identity level.
inline RepresentationQuadruple spin2_quadruple(double theta_a, double theta_b,
                                               double theta_c) {
  double theta_d = -(theta_a + theta_b + theta_c);
  return {circle(theta_a), circle(theta_b), circle(theta_c), circle(theta_d)};
}

// Pin(2) class with all boundary traces zero: A = iota, B = -iota*circle(theta),
// C = circle(sign*psi)*iota. Realizes x = 2cos(theta), z = -2cos(psi), and the
// sign picks which root of the relation y becomes.
inline RepresentationQuadruple pin2_quadruple_all_zero(double theta, double psi,
                                                       int sign = 1) {
  if (sign != 1 && sign != -1)
    throw InvalidInput("pin2_quadruple_all_zero: sign must be +1 or -1");
  UnitQuaternion a = iota;
  UnitQuaternion b = -(iota * circle(theta));
  UnitQuaternion c = circle(sign * psi) * iota;
  UnitQuaternion abc = a * b * c;
  return {a, b, c, abc.inverse()};
}

// Pin(2) class with kappa = (0, 0, 2cos(psi), 2cos(psi+theta)) and y = z = 0:
// A = iota, B = -iota*circle(theta), C = circle(psi), D = circle(-(psi+theta)).
// The product ABCD collapses to the identity by construction.
inline RepresentationQuadruple pin2_quadruple_two_zero(double theta, double psi) {
  return {iota, -(iota * circle(theta)), circle(psi), circle(-(psi + theta))};
}

// ---------------------------------------------------------------------------
// Word-trace scan: traces of all reduced words in the four generators and
// their inverses up to the given length (the empty word contributes 2).
// Deduplicated within dedup_tol, sorted ascending. The word count grows as
// 8 * 7^(len-1); lengths up to ~8 are practical.
inline std::vector<double> word_trace_scan(const RepresentationQuadruple& r,
                                           int max_len, double dedup_tol = 1e-9) {
  if (max_len < 0) throw InvalidInput("word_trace_scan: max_len must be >= 0");
  const std::array<UnitQuaternion, 8> gens{r.A, r.A.inverse(), r.B, r.B.inverse(),
                                           r.C, r.C.inverse(), r.D, r.D.inverse()};
  std::vector<double> traces{2.0};
  struct Node {
    UnitQuaternion q;
    int last;
  };
  std::vector<Node> frontier;
  for (int g = 0; g < 8; ++g)
    if (max_len >= 1) {
      frontier.push_back({gens[g], g});
      traces.push_back(trace(gens[g]));
    }
  for (int len = 2; len <= max_len; ++len) {
    std::vector<Node> next;
    next.reserve(frontier.size() * 7);
    for (const auto& node : frontier) {
      for (int g = 0; g < 8; ++g) {
        if (g == (node.last ^ 1)) continue;  // cancels the previous letter
        Node n{node.q * gens[g], g};
        traces.push_back(trace(n.q));
        next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  std::sort(traces.begin(), traces.end());
  std::vector<double> out;
  for (double t : traces)
    if (out.empty() || t - out.back() > dedup_tol) out.push_back(t);
  return out;
}

}  // namespace charvar
