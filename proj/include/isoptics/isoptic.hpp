#pragma once

#include "isoptics/angle.hpp"
#include "isoptics/conic.hpp"
#include "isoptics/tangent.hpp"

namespace isoptics {

/// Which regime of the compound isoptic equation applies at a point: the
/// right-hand side reads cosh^2(alpha), cos^2(alpha) or sinh^2(alpha).
enum class IsopticBranch { CoshBranch, CosBranch, SinhBranch, Invalid };

const char* to_string(IsopticBranch b);

/// A point query against the compound alpha-isoptic of a conic. One alpha
/// serves all three branches; each branch reads it through its own function.
struct IsopticQuery {
    ConicSpec conic;
    double alpha = 0; // in (0, pi) for the elliptic branch
    double x = 0;
    double y = 0;
};

/// Raw pieces of the family-specific isoptic quotient: the signed first-power
/// numerator (the printed equation squares it), the signed denominator (the
/// quotient divides by its absolute value) and the sum of the denominator's
/// term magnitudes.
struct IsopticQuotient {
    double numerator = 0;
    double denominator = 0;
    double denominator_scale = 0;
};

IsopticQuotient isoptic_quotient(const ConicSpec& spec, double x, double y);

/// Left-hand side of the compound isoptic equation,
/// numerator^2 / |denominator|. Throws SingularDenominator where the
/// denominator vanishes (asymptote/axis loci of the printed formula).
double isoptic_lhs(const ConicSpec& spec, double x, double y);

/// External-point discriminant of the family's tangent formulas; negative
/// values mean no real tangents. For every family this is a fixed multiple of
/// the conic residual at the point.
double family_discriminant(const ConicSpec& spec, double x, double y);

/// Branch classification: discriminant >= 0 is required everywhere;
/// <u,u><v,v> < 0 selects the sinh branch, otherwise x^2+y^2 below/above 1
/// selects cos/cosh. Points with no real tangents, with a boundary tangent,
/// or exactly on the absolute are Invalid. Total (never throws).
IsopticBranch classify_branch(const ConicSpec& spec, double x, double y);

/// cosh^2, cos^2 or sinh^2 of alpha per branch.
double isoptic_rhs(IsopticBranch branch, double alpha);

/// isoptic_lhs minus the branch's right-hand side; zero exactly on that
/// branch of the compound isoptic. Throws InvalidRegion off every branch.
double isoptic_residual(const IsopticQuery& query);

/// Independent route: tangent pair through the point, then the generalized
/// angle of the pair. Throws NotExternalPoint and UndefinedAngle.
GeneralizedAngle isoptic_angle_direct(const ConicSpec& spec, double x, double y);

/// |isoptic_lhs - f^2(direct angle)| with f = cosh/cos/sinh per branch; the
/// cross-validation of the closed-form equation against the direct chain.
double oracle_consistency(const ConicSpec& spec, double x, double y);

} // namespace isoptics
