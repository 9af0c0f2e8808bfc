#pragma once

// The mapping class group action in trace coordinates. The group is
// generated by three Dehn twists; each acts on (x, y, z) as a composition
// of two Vieta swaps, where a swap replaces one coordinate by the other
// root of the surface relation viewed as a quadratic in that coordinate:
//
//   swap_x: x -> (ab+cd) - yz - x
//   swap_y: y -> (ad+bc) - xz - y
//   swap_z: z -> (ac+bd) - xy - z
//
//   twist_x = swap_y after swap_z     (fixes x)
//   twist_y = swap_z after swap_x     (fixes y)
//   twist_z = swap_x after swap_y     (fixes z)
//
// Expanding either composition reproduces the familiar simultaneous
// polynomial form of the twist. Each swap is an involution for fixed other
// coordinates and preserves the relation value identically, so inverses are
// the same two swaps in reverse order and the whole action stays on the
// surface exactly (up to rounding).

#include <string>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/surface.hpp"

namespace charvar {

enum class Generator { X, Y, Z };

struct TwistLetter {
  Generator gen = Generator::X;
  int power = 1;  // +1 or -1
};

using TwistWord = std::vector<TwistLetter>;

namespace detail {

inline double swap_x(const SurfaceCoefficients& s, const CharPoint& p) {
  return s.cx - p.y * p.z - p.x;
}
inline double swap_y(const SurfaceCoefficients& s, const CharPoint& p) {
  return s.cy - p.x * p.z - p.y;
}
inline double swap_z(const SurfaceCoefficients& s, const CharPoint& p) {
  return s.cz - p.x * p.y - p.z;
}

}  // namespace detail

inline CharPoint twist_x(const SurfaceCoefficients& s, CharPoint p) {
  p.z = detail::swap_z(s, p);
  p.y = detail::swap_y(s, p);
  return p;
}

inline CharPoint twist_y(const SurfaceCoefficients& s, CharPoint p) {
  p.x = detail::swap_x(s, p);
  p.z = detail::swap_z(s, p);
  return p;
}

inline CharPoint twist_z(const SurfaceCoefficients& s, CharPoint p) {
  p.y = detail::swap_y(s, p);
  p.x = detail::swap_x(s, p);
  return p;
}

inline CharPoint twist_x(const BoundaryData& k, const CharPoint& p) {
  return twist_x(coefficients(k), p);
}
inline CharPoint twist_y(const BoundaryData& k, const CharPoint& p) {
  return twist_y(coefficients(k), p);
}
inline CharPoint twist_z(const BoundaryData& k, const CharPoint& p) {
  return twist_z(coefficients(k), p);
}

inline CharPoint twist_x_inverse(const SurfaceCoefficients& s, CharPoint p) {
  p.y = detail::swap_y(s, p);
  p.z = detail::swap_z(s, p);
  return p;
}

inline CharPoint twist_y_inverse(const SurfaceCoefficients& s, CharPoint p) {
  p.z = detail::swap_z(s, p);
  p.x = detail::swap_x(s, p);
  return p;
}

inline CharPoint twist_z_inverse(const SurfaceCoefficients& s, CharPoint p) {
  p.x = detail::swap_x(s, p);
  p.y = detail::swap_y(s, p);
  return p;
}

inline CharPoint apply_twist(Generator g, int power, const SurfaceCoefficients& s,
                             const CharPoint& p) {
  switch (g) {
    case Generator::X:
      return power >= 0 ? twist_x(s, p) : twist_x_inverse(s, p);
    case Generator::Y:
      return power >= 0 ? twist_y(s, p) : twist_y_inverse(s, p);
    case Generator::Z:
    default:
      return power >= 0 ? twist_z(s, p) : twist_z_inverse(s, p);
  }
}

// Exact functional inverse of the named twist.
inline CharPoint twist_inverse(Generator g, const BoundaryData& k, const CharPoint& p) {
  return apply_twist(g, -1, coefficients(k), p);
}

// Apply the letters of w left to right.
inline CharPoint apply_word(const BoundaryData& k, CharPoint p, const TwistWord& w) {
  SurfaceCoefficients s = coefficients(k);
  for (const auto& letter : w) p = apply_twist(letter.gen, letter.power, s, p);
  return p;
}

// Word text format: one character per letter over {X,Y,Z,x,y,z}; lowercase
// means the inverse twist. "YZx" = twist_y, then twist_z, then twist_x^-1.
inline TwistWord parse_word(const std::string& text) {
  TwistWord w;
  w.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'X': w.push_back({Generator::X, 1}); break;
      case 'Y': w.push_back({Generator::Y, 1}); break;
      case 'Z': w.push_back({Generator::Z, 1}); break;
      case 'x': w.push_back({Generator::X, -1}); break;
      case 'y': w.push_back({Generator::Y, -1}); break;
      case 'z': w.push_back({Generator::Z, -1}); break;
      default:
        throw InvalidInput(std::string("parse_word: invalid letter '") + ch +
                           "' (expected one of X x Y y Z z)");
    }
  }
  return w;
}

inline std::string to_string(const TwistWord& w) {
  std::string s;
  s.reserve(w.size());
  for (const auto& letter : w) {
    char upper = letter.gen == Generator::X ? 'X' : letter.gen == Generator::Y ? 'Y' : 'Z';
    s.push_back(letter.power >= 0 ? upper : static_cast<char>(upper + 'a' - 'A'));
  }
  return s;
}

}  // namespace charvar
