#pragma once

#include "isoptics/projective.hpp"

namespace isoptics {

enum class ConicFamily { Central, Parabola, SemiHyperbola, OsculatingParabola };

/// Normal-form parameters of a generalized conic.
///
/// Central:            a x^2 + b y^2 = 1, canonicalized so a <= b
/// Parabola:           a x^2 + (b+1) y^2 - 2 y = b - 1
/// SemiHyperbola:      a x^2 + 2 b y^2 - 2 y = 0, with |b| < 1
/// OsculatingParabola: (1 - x^2 - y^2) + 2 a y (x+1) = 0, with a > 0
struct ConicSpec {
    ConicFamily family = ConicFamily::Central;
    double a = 0;
    double b = 0; // unused for OsculatingParabola

    /// Swaps (a, b) -> (b, a) when a > b (the x<->y axis exchange).
    static ConicSpec central(double a, double b);
    static ConicSpec parabola(double a, double b);
    static ConicSpec semi_hyperbola(double a, double b);
    static ConicSpec osculating_parabola(double a);
};

enum class ConicClass {
    // central family
    AbsoluteConic,
    Circle,
    CircleEnclosingAbsolute,
    Hypercycle,
    HypercycleEnclosingAbsolute,
    HypercycleExcludingAbsolute,
    ConcaveHyperbola,
    ConvexHyperbola,
    HyperbolaExcludingAbsolute,
    Ellipse,
    EllipseEnclosingAbsolute,
    Empty,
    // parabola family
    Horocycle,
    HorocycleEnclosingAbsolute,
    EllipticParabola,
    ParabolaEnclosingAbsolute,
    TwoSidedParabola,
    ConcaveHyperbolicParabola,
    ConvexHyperbolicParabola,
    ParabolaExcludingAbsolute,
    // one-class families
    SemiHyperbola,
    OsculatingParabola,
};

const char* to_string(ConicClass c);
const char* to_string(ConicFamily f);

/// Point conic form and its inverse (the line conic satisfied by tangents).
struct ConicMatrices {
    Mat3 point_matrix;
    Mat3 line_matrix;
};

/// Classification per the central / parabola tables; semi-hyperbolas and
/// osculating parabolas each form a single class. Parameter combinations the
/// tables omit (zero parameters, |b| >= 1 for the semi-hyperbola, a <= 0 for
/// the osculating parabola) throw UnclassifiableParameters.
ConicClass classify(const ConicSpec& spec);

/// Dual conic under the absolute polarity:
///   Central (a, b)       -> (1/a, 1/b)
///   Parabola (a, b)      -> (-b^2/a, -b)
///   SemiHyperbola (a, b) -> (1/a, -b)
///   OsculatingParabola   -> itself
/// Throws DivisionByZeroParameter where the map divides by zero.
ConicSpec dual(const ConicSpec& spec);

/// Symmetric homogenized matrix of the normal form plus its inverse.
/// Throws SingularConic when the determinant vanishes.
ConicMatrices matrices(const ConicSpec& spec);

/// Inhomogeneous normal-form residual (LHS - RHS) at an affine point; zero
/// exactly on the curve. Throws IdealPoint for points at infinity.
double conic_residual(const ConicSpec& spec, const HomPoint& p);

} // namespace isoptics
