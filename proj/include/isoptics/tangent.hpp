#pragma once

#include "isoptics/conic.hpp"

namespace isoptics {

/// The two tangent lines through an external point, each normalized to third
/// coefficient 1 where possible. coincident is set when the discriminant is
/// zero (point on the conic), in which case u == v.
struct TangentPair {
    HomLine u;
    HomLine v;
    bool coincident = false;
};

/// Sign convention of the linear term inside the radicand of the
/// semi-hyperbola u2/v2 closed form. Only MinusOne produces lines that are
/// incident with the query point and tangent to the conic; PlusOne is kept so
/// the tests can demonstrate that the alternative fails against the generic
/// solver.
enum class SemiRadicandSign { MinusOne, PlusOne };

/// Closed-form tangents for a x^2 + b y^2 = 1 from (x, y). Falls back to the
/// generic solver on the symmetry axes and wherever a printed denominator
/// degenerates. Throws NotExternalPoint for interior points.
TangentPair tangents_central(double a, double b, double px, double py);

/// Closed-form tangents for a x^2 + (b+1) y^2 - 2 y = b - 1.
TangentPair tangents_parabola(double a, double b, double px, double py);

/// Closed-form tangents for a x^2 + 2 b y^2 - 2 y = 0.
TangentPair tangents_semi_hyperbola(double a, double b, double px, double py,
                                    SemiRadicandSign sign = SemiRadicandSign::MinusOne);

/// Closed-form tangents for (1 - x^2 - y^2) + 2 a y (x+1) = 0.
TangentPair tangents_osculating(double a, double px, double py);

/// Generic oracle: intersects the pencil of lines through p with the line
/// conic u A u^T = 0 and solves the resulting quadratic. Works for any
/// nondegenerate conic and any position of p. Throws NoRealTangent when the
/// quadratic has no real root (interior point); a point on the conic yields
/// coincident = true with the polar as the single tangent.
TangentPair tangents_generic(const ConicMatrices& m, const HomPoint& p);

/// Family dispatch on a ConicSpec; interior points throw NotExternalPoint
/// regardless of which solver handled the query.
TangentPair tangents(const ConicSpec& spec, double px, double py);

} // namespace isoptics
