#pragma once

#include "isoptics/errors.hpp"
#include "isoptics/linalg.hpp"

namespace isoptics {

/// Relative tolerance used wherever a sign test has to tolerate roundoff
/// (classification against the absolute conic, Gram determinants, incidence).
inline constexpr double kSignEps = 1e-12;

/// Homogeneous point (x : y : w). Any nonzero scalar multiple names the same
/// point; the affine position is (x/w, y/w) when w != 0.
struct HomPoint {
    double x = 0, y = 0, w = 1;

    static HomPoint affine(double px, double py) { return {px, py, 1.0}; }
    Vec3 vec() const { return {x, y, w}; }
};

/// Homogeneous line with coefficient triple (a : b : c); a point lies on the
/// line when a*x + b*y + c*w = 0.
struct HomLine {
    double a = 0, b = 0, c = 0;

    Vec3 vec() const { return {a, b, c}; }
};

enum class PointClass { Proper, Boundary, Outer };
enum class LineClass { Proper, Boundary, Outer };

const char* to_string(PointClass c);
const char* to_string(LineClass c);

/// Signature (2,1) bilinear form: x1*y1 + x2*y2 - x3*y3.
double lorentz(const HomPoint& p, const HomPoint& q);
double lorentz(const HomLine& u, const HomLine& v);

/// Plain pairing of a line form with a point vector (zero means incident).
double incidence(const HomLine& u, const HomPoint& p);

/// Proper <=> <x,x> < 0, Boundary <=> = 0, Outer <=> > 0 (with kSignEps
/// relative to the largest squared coordinate).
PointClass classify_point(const HomPoint& p);

/// Proper <=> <u,u> > 0 (the line crosses the model), Boundary <=> = 0,
/// Outer <=> < 0.
LineClass classify_line(const HomLine& u);

/// Pole of a line under the absolute polarity: (a, b, c) -> (a, b, -c).
HomPoint pole_of_line(const HomLine& u);

/// Polar of a point: (x, y, w) -> (x, y, -w). Inverse of pole_of_line up to
/// scale.
HomLine polar_line(const HomPoint& p);

/// Hyperbolic distance of two proper points (curvature -1):
///     cosh d = |<x,y>| / sqrt(<x,x><y,y>).
/// The absolute value makes the result independent of the representatives.
/// Throws NonProperPoint unless both points are proper.
double distance(const HomPoint& p, const HomPoint& q);

/// Affine coordinates of a finite point; throws IdealPoint when w ~ 0.
struct Affine2 {
    double x = 0, y = 0;
};
Affine2 dehomogenize(const HomPoint& p);

} // namespace isoptics
