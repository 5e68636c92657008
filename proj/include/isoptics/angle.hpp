#pragma once

#include "isoptics/projective.hpp"

namespace isoptics {

enum class AngleKind { EllipticAngle, DistanceType, Zero, Undefined, Infinite };
enum class AngleFormula { CosForm, CoshForm, SinhForm, None };

const char* to_string(AngleKind k);
const char* to_string(AngleFormula f);

/// Unified angle measure between two extended-hyperbolic lines.
///
/// Two proper lines meeting inside the model enclose an ordinary (elliptic)
/// angle; every other measurable configuration yields a distance-type value
/// (the length of the common perpendicular, the distance of the poles, or the
/// distance of a pole to a line). The +/- ambiguity of the defining formulas
/// is resolved to the principal value: EllipticAngle in [0, pi/2],
/// DistanceType >= 0. Callers wanting the complementary angle take pi - value.
struct GeneralizedAngle {
    AngleKind kind = AngleKind::Undefined;
    double value = 0;
    AngleFormula formula = AngleFormula::None;
};

/// cos of the angle of two proper lines meeting in a proper point.
/// Requires Gram = <u,u><v,v> - <u,v>^2 > 0; throws PreconditionViolated.
double cos_angle(const HomLine& u, const HomLine& v);

/// cosh of the distance-type angle: two proper ultraparallel lines
/// (Gram < 0) or two outer lines (distance of their poles). Returns >= 1.
double cosh_angle(const HomLine& u, const HomLine& v);

/// sinh of the distance of the outer line's pole to the proper line.
/// Exactly one argument must be proper and the other outer (any order).
double sinh_angle(const HomLine& u, const HomLine& v);

/// Total dispatch over all line-class configurations. Boundary lines yield
/// Undefined when the other line passes through the contact point (the
/// boundary line's own pole) and Infinite otherwise.
GeneralizedAngle generalized_angle(const HomLine& u, const HomLine& v);

} // namespace isoptics
