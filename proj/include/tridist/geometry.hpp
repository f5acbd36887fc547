#pragma once

#include <cmath>
#include <string>

namespace tridist {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
inline Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
inline Vec2 operator*(double s, Vec2 p) { return {s * p.x, s * p.y}; }
inline double dot(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
inline double norm(Vec2 p) { return std::hypot(p.x, p.y); }
inline double distance(Vec2 p, Vec2 q) { return norm(p - q); }

// A triangle in canonical labeling: sides a >= b >= c, with alpha, beta,
// gamma the angles opposite a, b, c (so alpha >= beta >= gamma).  h_a, h_b,
// h_c are the altitudes onto a, b, c; u is the perimeter.  Instances are
// immutable values produced by the factory functions below, which validate
// their inputs and reject flat or impossible shapes.
struct Triangle {
    double a, b, c;
    double alpha, beta, gamma;
    double h_a, h_b, h_c;
    double u;
    double area;
};

// Builds a triangle from three side lengths (any order; canonicalized).
// Throws DegenerateTriangle if the triangle inequality fails strictly, the
// area falls below 1e-12 * a^2, or any angle falls below 1e-9 rad.
Triangle triangle_from_sides(double s1, double s2, double s3);

// Builds a triangle from three angles in radians (any order) and the length
// of the longest side.  Throws InvalidAngles if any angle is below 1e-9 rad
// or the sum deviates from pi by more than 1e-9; after acceptance the
// smallest angle is recomputed so the sum is exactly pi.  Throws
// DegenerateTriangle for a non-positive side or a numerically flat result.
Triangle triangle_from_angles(double a1, double a2, double a3, double longest_side);

// Shape classes that determine which breakpoint layout the chord-length
// distribution uses.  Ties go to the later class: a right angle is not
// Obtuse, and h_c == c lands in AcuteHighAltitude.
enum class CaseLabel {
    Obtuse,            // alpha > pi/2
    AcuteLowAltitude,  // alpha <= pi/2 and h_c < c
    AcuteHighAltitude, // alpha <= pi/2 and h_c >= c
};

CaseLabel classify(const Triangle& t);

// Canonical placement used by the rotational scan and the samplers:
// C at the origin, B at (a, 0), A in the upper half plane.
struct PlacedTriangle {
    Vec2 A, B, C;
};

PlacedTriangle place(const Triangle& t);

// Parses the CLI textual forms:
//   "angles:<alpha>,<beta>,<gamma>@a=<len>"  (degrees on the wire)
//   "sides:<a>,<b>,<c>"
// Throws ParseError on malformed input; propagates factory errors.
Triangle parse_triangle_spec(const std::string& spec);

} // namespace tridist
