#pragma once

// Classification of character points by the closure of the image subgroup.
//
// The proper closed subgroups of SU(2) are the binary polyhedral groups and
// the closed subgroups of Pin(2); a representation contained in none of them
// has dense image. At trace level we can decide:
//
//   * Spin(2): for boundary traces away from +-2, the class is Spin(2) iff
//     each of x, y, z sits at an endpoint of both of its trace intervals
//     (x against I_{a,b} and I_{c,d}, y against I_{b,c} and I_{a,d}, z
//     against I_{a,c} and I_{b,d}). The endpoint condition is necessary for
//     every Spin(2) class, including degenerate boundary data; it is
//     sufficient only under the hypothesis a,b,c,d not in {+-2}.
//
//   * Pin(2) \ Spin(2): exactly the classes with kappa = (0,0,0,0), or with
//     two boundary traces zero and the matching pair of x,y,z zero. Which
//     pair vanishes is forced by which generators land in the non-identity
//     component of Pin(2) (trace-zero elements): zeros at {a,b} or {c,d}
//     force y = z = 0; zeros at {a,c} or {b,d} force x = y = 0; zeros at
//     {a,d} or {b,c} force x = z = 0.
//
//   * binary polyhedral: every element trace lies in the 11-value set S
//     below, so any of the seven coordinates outside S rules these out.
//     The converse fails, hence FiniteCandidate is never upgraded here (a
//     word-trace scan, realize.hpp, can gather further evidence).

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "charvar/errors.hpp"
#include "charvar/surface.hpp"

namespace charvar {

// Traces attained by elements of the binary octahedral and icosahedral
// groups; also a superset of the binary tetrahedral traces.
inline const std::array<double, 11>& polyhedral_traces() {
  static const std::array<double, 11> s = [] {
    const double r2 = std::sqrt(2.0);
    const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
    const double phi_inv = (std::sqrt(5.0) - 1.0) / 2.0;
    std::array<double, 11> v{-2.0, -phi, -r2, -1.0, -phi_inv, 0.0,
                             phi_inv, 1.0, r2, phi, 2.0};
    return v;
  }();
  return s;
}

// Distance from t to the nearest polyhedral trace. The set is symmetric
// under negation, so this is too.
inline double polyhedral_trace_distance(double t) {
  double best = std::abs(t - polyhedral_traces()[0]);
  for (double s : polyhedral_traces()) best = std::min(best, std::abs(t - s));
  return best;
}

inline bool is_polyhedral_trace(double t, double tol = 1e-6) {
  return polyhedral_trace_distance(t) <= tol;
}

// ---------------------------------------------------------------------------
// Three-holed-sphere criteria on a trace triple (a, b, ab).

inline double spin2_triple_defect(double a, double b, double ab) {
  return a * a + b * b + ab * ab - a * b * ab - 4.0;
}

// The triple is realized inside a circle subgroup iff the defect vanishes.
inline bool is_spin2_triple(double a, double b, double ab, double tol = 1e-9) {
  return std::abs(spin2_triple_defect(a, b, ab)) <= tol;
}

// Pin(2) but not Spin(2): nonzero defect and at least two of the three
// traces zero.
inline bool is_pin2_not_spin2_triple(double a, double b, double ab, double tol = 1e-9) {
  if (std::abs(spin2_triple_defect(a, b, ab)) <= tol) return false;
  int zeros = (std::abs(a) <= tol) + (std::abs(b) <= tol) + (std::abs(ab) <= tol);
  return zeros >= 2;
}

// ---------------------------------------------------------------------------
// Four-holed-sphere criteria.

namespace detail {

inline bool near_endpoint(double t, const TraceInterval& iv, double tol) {
  return std::abs(t - iv.lo) <= tol || std::abs(t - iv.hi) <= tol;
}

}  // namespace detail

// Endpoint conditions of the Spin(2) criterion, evaluated without the
// hypothesis check. Necessary for any Spin(2) class.
inline bool spin2_endpoint_conditions(const BoundaryData& k, const CharPoint& p,
                                      double tol = 1e-7) {
  return detail::near_endpoint(p.x, interval(k.a, k.b), tol) &&
         detail::near_endpoint(p.x, interval(k.c, k.d), tol) &&
         detail::near_endpoint(p.y, interval(k.b, k.c), tol) &&
         detail::near_endpoint(p.y, interval(k.a, k.d), tol) &&
         detail::near_endpoint(p.z, interval(k.a, k.c), tol) &&
         detail::near_endpoint(p.z, interval(k.b, k.d), tol);
}

// Spin(2) criterion. Requires a, b, c, d away from +-2 (where the interval
// endpoint test stops being sufficient); throws HypothesisViolation there.
inline bool is_spin2_class(const BoundaryData& k, const CharPoint& p, double tol = 1e-7) {
  for (double t : {k.a, k.b, k.c, k.d})
    if (std::abs(std::abs(t) - 2.0) <= tol)
      throw HypothesisViolation("is_spin2_class: boundary trace at +-2 is outside "
                                "the criterion's hypothesis");
  return spin2_endpoint_conditions(k, p, tol);
}

// Pin(2)-but-possibly-not-Spin(2) pattern test; see the pattern table above.
// The point must lie on the surface.
inline bool is_pin2_class(const BoundaryData& k, const CharPoint& p, double tol = 1e-7,
                          double surface_tol = 1e-8) {
  double res = relation(k, p);
  if (std::abs(res) > surface_tol)
    throw InvalidInput("is_pin2_class: point is off the surface (residual " +
                       std::to_string(res) + ")");
  auto zero = [tol](double t) { return std::abs(t) <= tol; };
  if (zero(k.a) && zero(k.b) && zero(k.c) && zero(k.d)) return true;
  bool yz = zero(p.y) && zero(p.z);
  bool xy = zero(p.x) && zero(p.y);
  bool xz = zero(p.x) && zero(p.z);
  if ((zero(k.a) && zero(k.b) && yz) || (zero(k.c) && zero(k.d) && yz)) return true;
  if ((zero(k.a) && zero(k.c) && xy) || (zero(k.b) && zero(k.d) && xy)) return true;
  if ((zero(k.a) && zero(k.d) && xz) || (zero(k.b) && zero(k.c) && xz)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// The exceptional family: kappa = (a, a, c, -c) with a^2 + c^2 < 4, both
// a and c nonzero, and a or c outside the polyhedral trace set. For such
// kappa the two x-axis points below form a twist-invariant pair whose
// classes nevertheless have dense image.

struct ExceptionalFamily {
  double a = 0.0, c = 0.0;
};

// The family parameters (a, c) when kappa has the shape (a, a, c, -c) and
// meets all three conditions; empty otherwise.
inline std::optional<ExceptionalFamily> family_parameters(const BoundaryData& k,
                                                          double tol = 1e-9,
                                                          double s_tol = 1e-6) {
  if (std::abs(k.b - k.a) > tol || std::abs(k.d + k.c) > tol) return std::nullopt;
  if (k.a * k.a + k.c * k.c >= 4.0) return std::nullopt;
  if (std::abs(k.a) <= tol || std::abs(k.c) <= tol) return std::nullopt;
  if (is_polyhedral_trace(k.a, s_tol) && is_polyhedral_trace(k.c, s_tol))
    return std::nullopt;
  return ExceptionalFamily{k.a, k.c};
}

inline bool is_in_family_f(const BoundaryData& k, double tol = 1e-9,
                           double s_tol = 1e-6) {
  return family_parameters(k, tol, s_tol).has_value();
}

// The invariant pair {(a^2-2, 0, 0), (2-c^2, 0, 0)}; both lie on the surface
// (they are the two roots of the relation restricted to the x-axis).
inline std::pair<CharPoint, CharPoint> exceptional_orbit(const BoundaryData& k) {
  auto fam = family_parameters(k);
  if (!fam)
    throw InvalidInput("exceptional_orbit: kappa is not in the exceptional family");
  return {CharPoint{fam->a * fam->a - 2.0, 0.0, 0.0},
          CharPoint{2.0 - fam->c * fam->c, 0.0, 0.0}};
}

// ---------------------------------------------------------------------------
// Full verdict.

enum class ClosureKind { Spin2, Pin2NotSpin2, FiniteCandidate, Dense, Inconclusive };

inline const char* to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::Spin2: return "Spin2";
    case ClosureKind::Pin2NotSpin2: return "Pin2NotSpin2";
    case ClosureKind::FiniteCandidate: return "FiniteCandidate";
    case ClosureKind::Dense: return "Dense";
    case ClosureKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

struct ClosureVerdict {
  ClosureKind kind = ClosureKind::Inconclusive;
  std::string evidence;
};

struct ClassifyOptions {
  double surface_tol = 1e-8;   // robust to twist-iteration drift
  double endpoint_tol = 1e-7;  // interval endpoint matching
  double s_tol = 1e-6;         // polyhedral trace set (minimum gap ~0.118)
  double boundary_tol = 1e-7;  // "trace equals +-2" test
};

// Decide the closure of the image subgroup from the seven trace coordinates.
// Dense is only claimed when Spin(2) is excluded (by the full criterion away
// from boundary traces +-2, by endpoint necessity otherwise), the Pin(2)
// patterns fail, and some coordinate falls outside the polyhedral trace set.
// All seven coordinates inside S cannot certify a finite image, so that case
// stays FiniteCandidate; a boundary trace at +-2 with the endpoint conditions
// satisfied stays Inconclusive.
inline ClosureVerdict classify_closure(const BoundaryData& k, const CharPoint& p,
                                       const ClassifyOptions& opt = {}) {
  double res = relation(k, p);
  if (std::abs(res) > opt.surface_tol)
    throw InvalidInput("classify_closure: point is off the surface (residual " +
                       std::to_string(res) + ")");

  bool hypothesis = true;
  for (double t : {k.a, k.b, k.c, k.d})
    if (std::abs(std::abs(t) - 2.0) <= opt.boundary_tol) hypothesis = false;

  bool endpoints = spin2_endpoint_conditions(k, p, opt.endpoint_tol);
  if (endpoints) {
    if (hypothesis)
      return {ClosureKind::Spin2,
              "x, y, z each match an endpoint of both of their trace intervals"};
    return {ClosureKind::Inconclusive,
            "boundary trace at +-2: endpoint conditions hold but are not "
            "sufficient there"};
  }

  // Not Spin(2): the endpoint conditions are necessary unconditionally.
  if (is_pin2_class(k, p, opt.endpoint_tol, opt.surface_tol)) {
    return {ClosureKind::Pin2NotSpin2, "zero-trace pattern matches a Pin(2) class"};
  }

  const char* names[7] = {"a", "b", "c", "d", "x", "y", "z"};
  double vals[7] = {k.a, k.b, k.c, k.d, p.x, p.y, p.z};
  for (int i = 0; i < 7; ++i) {
    double dist = polyhedral_trace_distance(vals[i]);
    if (dist > opt.s_tol) {
      return {ClosureKind::Dense,
              std::string("not Spin(2) or Pin(2), and trace ") + names[i] + " = " +
                  std::to_string(vals[i]) +
                  " is outside the polyhedral trace set (distance " +
                  std::to_string(dist) + ")"};
    }
  }
  return {ClosureKind::FiniteCandidate,
          "all seven coordinates lie in the polyhedral trace set; the trace "
          "data alone cannot certify a finite image"};
}

}  // namespace charvar
