#include "isoptics/isoptic.hpp"

#include <algorithm>
#include <cmath>

namespace isoptics {

namespace {

constexpr double kSingularDenom = 1e-14;

IsopticQuotient quotient_central(double a, double b, double x, double y) {
    const double x2 = x * x, y2 = y * y;
    const double num = a * ((b + 1) * x2 - 1) + (a + 1) * b * y2 - b;

    const double t1 = (a - 1) * (a - 1) * b * b * y2 * y2;
    const double t2 = 2 * (a - 1) * b * (b + a * ((b - 1) * x2 - 1)) * y2;
    const double t3c = a * (b - 1) * x2 + a - b;
    const double t3 = t3c * t3c;
    return {num, t1 + t2 + t3, std::fabs(t1) + std::fabs(t2) + std::fabs(t3)};
}

IsopticQuotient quotient_parabola(double a, double b, double x, double y) {
    const double x2 = x * x, y2 = y * y;
    const double b2 = b * b;
    const double num = a * (b * (2 * x2 + y2 - 1) + (y - 1) * (y - 1)) + b2 * (y2 - 1);

    const double ym = (y - 1) * (y - 1);
    const double yp = (y + 1) * (y + 1);
    const double t1 = yp * b2 * b2;
    const double t2 = -2 * a * (2 * x2 + y2 + b * yp - 1) * b2;
    const double t3 = a * a * (ym + b2 * yp + 2 * b * (2 * x2 + y2 - 1));
    return {num, ym * (t1 + t2 + t3), ym * (std::fabs(t1) + std::fabs(t2) + std::fabs(t3))};
}

IsopticQuotient quotient_semi_hyperbola(double a, double b, double x, double y) {
    const double x2 = x * x, y2 = y * y;
    const double num = 2 * a * (b * (x2 + y2) - y) + y2 - 1;

    const double t1 = y2 * y2;
    const double t2 = 4 * a * a * (x2 + y2) * ((b * b - 1) * x2 + (b * y - 1) * (b * y - 1));
    const double t3 = -4 * a * (y - (2 * x2 + y2) * y + b * (y2 * y2 + (x2 - 1) * y2 + x2));
    const double t4 = -2 * y2;
    const double t5 = 1;
    return {num, t1 + t2 + t3 + t4 + t5,
            std::fabs(t1) + std::fabs(t2) + std::fabs(t3) + std::fabs(t4) + t5};
}

IsopticQuotient quotient_osculating(double a, double x, double y) {
    const double x2 = x * x, y2 = y * y;
    const double xp = x + 1;
    const double num = -2 * (x2 + y2 - 1) + 2 * a * xp * y + a * a * xp * xp;

    const double lead = a * a * xp * xp * xp;
    const double t1 = 4 * (1 - x);
    const double t2 = 4 * a * y;
    const double t3 = a * a * xp;
    return {num, lead * (t1 + t2 + t3),
            std::fabs(lead) * (std::fabs(t1) + std::fabs(t2) + std::fabs(t3))};
}

} // namespace

const char* to_string(IsopticBranch b) {
    switch (b) {
        case IsopticBranch::CoshBranch: return "CoshBranch";
        case IsopticBranch::CosBranch: return "CosBranch";
        case IsopticBranch::SinhBranch: return "SinhBranch";
        case IsopticBranch::Invalid: return "Invalid";
    }
    return "?";
}

IsopticQuotient isoptic_quotient(const ConicSpec& spec, double x, double y) {
    switch (spec.family) {
        case ConicFamily::Central:
            return quotient_central(spec.a, spec.b, x, y);
        case ConicFamily::Parabola:
            return quotient_parabola(spec.a, spec.b, x, y);
        case ConicFamily::SemiHyperbola:
            return quotient_semi_hyperbola(spec.a, spec.b, x, y);
        case ConicFamily::OsculatingParabola:
            return quotient_osculating(spec.a, x, y);
    }
    return {};
}

double isoptic_lhs(const ConicSpec& spec, double x, double y) {
    const IsopticQuotient q = isoptic_quotient(spec, x, y);
    const double num2 = q.numerator * q.numerator;
    const double floor = kSingularDenom * std::max({1.0, num2, q.denominator_scale});
    if (std::fabs(q.denominator) < floor)
        throw SingularDenominator("isoptic quotient denominator vanishes here");
    return num2 / std::fabs(q.denominator);
}

double family_discriminant(const ConicSpec& spec, double x, double y) {
    const double a = spec.a, b = spec.b;
    switch (spec.family) {
        case ConicFamily::Central:
            return a * b * y * y * (a * x * x + b * y * y - 1);
        case ConicFamily::Parabola:
            return a * b * b * x * x *
                   (a * x * x + b * (y * y - 1) + (y - 1) * (y - 1));
        case ConicFamily::SemiHyperbola:
            // radicand of the tangent formulas, a * (conic residual)
            return a * (a * x * x + 2 * y * (b * y - 1));
        case ConicFamily::OsculatingParabola:
            return x * x + y * y - 1 - 2 * a * (x + 1) * y;
    }
    return -1;
}

IsopticBranch classify_branch(const ConicSpec& spec, double x, double y) {
    if (family_discriminant(spec, x, y) < 0) return IsopticBranch::Invalid;

    TangentPair pair;
    try {
        pair = tangents(spec, x, y);
    } catch (const Error&) {
        return IsopticBranch::Invalid;
    }

    // sign of (1 - u1^2 - u2^2)(1 - v1^2 - v2^2) in scale-free form
    const double qu = lorentz(pair.u, pair.u);
    const double qv = lorentz(pair.v, pair.v);
    const double su = pair.u.a * pair.u.a + pair.u.b * pair.u.b + pair.u.c * pair.u.c;
    const double sv = pair.v.a * pair.v.a + pair.v.b * pair.v.b + pair.v.c * pair.v.c;
    if (std::fabs(qu) <= kSignEps * su || std::fabs(qv) <= kSignEps * sv)
        return IsopticBranch::Invalid; // a boundary tangent has no angle

    if (qu * qv < 0) return IsopticBranch::SinhBranch;
    const double r2 = x * x + y * y;
    if (r2 > 1) return IsopticBranch::CoshBranch;
    if (r2 < 1) return IsopticBranch::CosBranch;
    return IsopticBranch::Invalid;
}

double isoptic_rhs(IsopticBranch branch, double alpha) {
    switch (branch) {
        case IsopticBranch::CoshBranch: {
            const double c = std::cosh(alpha);
            return c * c;
        }
        case IsopticBranch::CosBranch: {
            const double c = std::cos(alpha);
            return c * c;
        }
        case IsopticBranch::SinhBranch: {
            const double s = std::sinh(alpha);
            return s * s;
        }
        case IsopticBranch::Invalid:
            break;
    }
    throw InvalidRegion("no isoptic branch applies at this point");
}

double isoptic_residual(const IsopticQuery& query) {
    const IsopticBranch branch = classify_branch(query.conic, query.x, query.y);
    if (branch == IsopticBranch::Invalid)
        throw InvalidRegion("no isoptic branch applies at this point");
    return isoptic_lhs(query.conic, query.x, query.y) - isoptic_rhs(branch, query.alpha);
}

GeneralizedAngle isoptic_angle_direct(const ConicSpec& spec, double x, double y) {
    const TangentPair pair = tangents(spec, x, y);
    const GeneralizedAngle angle = generalized_angle(pair.u, pair.v);
    if (angle.kind == AngleKind::Undefined || angle.kind == AngleKind::Infinite)
        throw UndefinedAngle("a tangent through this point is a boundary line");
    return angle;
}

double oracle_consistency(const ConicSpec& spec, double x, double y) {
    const IsopticBranch branch = classify_branch(spec, x, y);
    if (branch == IsopticBranch::Invalid)
        throw InvalidRegion("no isoptic branch applies at this point");
    const double lhs = isoptic_lhs(spec, x, y);
    const GeneralizedAngle angle = isoptic_angle_direct(spec, x, y);
    double f = 0;
    switch (branch) {
        case IsopticBranch::CoshBranch: f = std::cosh(angle.value); break;
        case IsopticBranch::CosBranch: f = std::cos(angle.value); break;
        case IsopticBranch::SinhBranch: f = std::sinh(angle.value); break;
        case IsopticBranch::Invalid: break;
    }
    return std::fabs(lhs - f * f);
}

} // namespace isoptics
