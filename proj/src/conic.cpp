#include "isoptics/conic.hpp"

#include <cmath>
#include <utility>

namespace isoptics {

ConicSpec ConicSpec::central(double a, double b) {
    if (a > b) std::swap(a, b);
    return {ConicFamily::Central, a, b};
}

ConicSpec ConicSpec::parabola(double a, double b) {
    return {ConicFamily::Parabola, a, b};
}

ConicSpec ConicSpec::semi_hyperbola(double a, double b) {
    return {ConicFamily::SemiHyperbola, a, b};
}

ConicSpec ConicSpec::osculating_parabola(double a) {
    return {ConicFamily::OsculatingParabola, a, 0};
}

const char* to_string(ConicFamily f) {
    switch (f) {
        case ConicFamily::Central: return "central";
        case ConicFamily::Parabola: return "parabola";
        case ConicFamily::SemiHyperbola: return "semihyperbola";
        case ConicFamily::OsculatingParabola: return "osculating";
    }
    return "?";
}

const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::AbsoluteConic: return "AbsoluteConic";
        case ConicClass::Circle: return "Circle";
        case ConicClass::CircleEnclosingAbsolute: return "CircleEnclosingAbsolute";
        case ConicClass::Hypercycle: return "Hypercycle";
        case ConicClass::HypercycleEnclosingAbsolute: return "HypercycleEnclosingAbsolute";
        case ConicClass::HypercycleExcludingAbsolute: return "HypercycleExcludingAbsolute";
        case ConicClass::ConcaveHyperbola: return "ConcaveHyperbola";
        case ConicClass::ConvexHyperbola: return "ConvexHyperbola";
        case ConicClass::HyperbolaExcludingAbsolute: return "HyperbolaExcludingAbsolute";
        case ConicClass::Ellipse: return "Ellipse";
        case ConicClass::EllipseEnclosingAbsolute: return "EllipseEnclosingAbsolute";
        case ConicClass::Empty: return "Empty";
        case ConicClass::Horocycle: return "Horocycle";
        case ConicClass::HorocycleEnclosingAbsolute: return "HorocycleEnclosingAbsolute";
        case ConicClass::EllipticParabola: return "EllipticParabola";
        case ConicClass::ParabolaEnclosingAbsolute: return "ParabolaEnclosingAbsolute";
        case ConicClass::TwoSidedParabola: return "TwoSidedParabola";
        case ConicClass::ConcaveHyperbolicParabola: return "ConcaveHyperbolicParabola";
        case ConicClass::ConvexHyperbolicParabola: return "ConvexHyperbolicParabola";
        case ConicClass::ParabolaExcludingAbsolute: return "ParabolaExcludingAbsolute";
        case ConicClass::SemiHyperbola: return "SemiHyperbola";
        case ConicClass::OsculatingParabola: return "OsculatingParabola";
    }
    return "?";
}

namespace {

ConicClass classify_central(double a, double b) {
    // expects a <= b
    if (a == 0 || b == 0)
        throw UnclassifiableParameters("central conic with a zero parameter is degenerate");
    if (a == b) {
        if (a == 1) return ConicClass::AbsoluteConic;
        if (a > 1) return ConicClass::Circle;
        if (a > 0) return ConicClass::CircleEnclosingAbsolute;
        return ConicClass::Empty; // a = b < 0 has no real points
    }
    if (b == 1) return a > 0 ? ConicClass::HypercycleEnclosingAbsolute
                             : ConicClass::HypercycleExcludingAbsolute;
    if (a == 1) return ConicClass::Hypercycle;
    if (b < 0) return ConicClass::Empty; // a < b < 0
    if (a > 0) {
        if (b > 1) return a > 1 ? ConicClass::Ellipse : ConicClass::ConcaveHyperbola;
        return ConicClass::EllipseEnclosingAbsolute; // 0 < a < b < 1
    }
    // a < 0 < b
    return b > 1 ? ConicClass::ConvexHyperbola : ConicClass::HyperbolaExcludingAbsolute;
}

ConicClass classify_parabola(double a, double b) {
    if (a == 0 || b == 0)
        throw UnclassifiableParameters("parabola with a zero parameter is degenerate");
    if (a == b) return a > 0 ? ConicClass::Horocycle : ConicClass::HorocycleEnclosingAbsolute;
    if (a > 0 && b > 0) return b < a ? ConicClass::EllipticParabola
                                     : ConicClass::ConcaveHyperbolicParabola;
    if (a < 0 && b < 0) return b < a ? ConicClass::ParabolaEnclosingAbsolute
                                     : ConicClass::TwoSidedParabola;
    return a < 0 ? ConicClass::ConvexHyperbolicParabola : ConicClass::ParabolaExcludingAbsolute;
}

} // namespace

ConicClass classify(const ConicSpec& spec) {
    switch (spec.family) {
        case ConicFamily::Central:
            return classify_central(spec.a, spec.b);
        case ConicFamily::Parabola:
            return classify_parabola(spec.a, spec.b);
        case ConicFamily::SemiHyperbola:
            if (spec.a == 0 || std::fabs(spec.b) >= 1)
                throw UnclassifiableParameters("semi-hyperbola requires a != 0 and |b| < 1");
            return ConicClass::SemiHyperbola;
        case ConicFamily::OsculatingParabola:
            if (!(spec.a > 0))
                throw UnclassifiableParameters("osculating parabola requires a > 0");
            return ConicClass::OsculatingParabola;
    }
    throw UnclassifiableParameters("unknown family");
}

ConicSpec dual(const ConicSpec& spec) {
    switch (spec.family) {
        case ConicFamily::Central:
            if (spec.a == 0 || spec.b == 0)
                throw DivisionByZeroParameter("central dual divides by a and b");
            return ConicSpec::central(1.0 / spec.a, 1.0 / spec.b);
        case ConicFamily::Parabola:
            if (spec.a == 0)
                throw DivisionByZeroParameter("parabola dual divides by a");
            return ConicSpec::parabola(-spec.b * spec.b / spec.a, -spec.b);
        case ConicFamily::SemiHyperbola:
            if (spec.a == 0)
                throw DivisionByZeroParameter("semi-hyperbola dual divides by a");
            return ConicSpec::semi_hyperbola(1.0 / spec.a, -spec.b);
        case ConicFamily::OsculatingParabola:
            // dual is the same curve up to a reflection
            return spec;
    }
    throw DivisionByZeroParameter("unknown family");
}

ConicMatrices matrices(const ConicSpec& spec) {
    Mat3 m;
    const double a = spec.a, b = spec.b;
    switch (spec.family) {
        case ConicFamily::Central:
            m = Mat3::diagonal(a, b, -1);
            break;
        case ConicFamily::Parabola:
            m = Mat3{{a, 0, 0, 0, b + 1, -1, 0, -1, -(b - 1)}};
            break;
        case ConicFamily::SemiHyperbola:
            m = Mat3{{a, 0, 0, 0, 2 * b, -1, 0, -1, 0}};
            break;
        case ConicFamily::OsculatingParabola:
            m = Mat3{{-1, a, 0, a, -1, a, 0, a, 1}};
            break;
    }
    const double d = det(m);
    if (std::fabs(d) <= 1e-14 * std::max(1.0, max_abs(m) * max_abs(m) * max_abs(m)))
        throw SingularConic("point conic matrix is singular at these parameters");
    return {m, inverse(m)};
}

double conic_residual(const ConicSpec& spec, const HomPoint& p) {
    const Affine2 q = dehomogenize(p);
    const double x = q.x, y = q.y;
    const double a = spec.a, b = spec.b;
    switch (spec.family) {
        case ConicFamily::Central:
            return a * x * x + b * y * y - 1;
        case ConicFamily::Parabola:
            return a * x * x + (b + 1) * y * y - 2 * y - (b - 1);
        case ConicFamily::SemiHyperbola:
            return a * x * x + 2 * b * y * y - 2 * y;
        case ConicFamily::OsculatingParabola:
            return (1 - x * x - y * y) + 2 * a * y * (x + 1);
    }
    return 0;
}

} // namespace isoptics
