#include "isoptics/tangent.hpp"

#include <algorithm>
#include <cmath>

namespace isoptics {

namespace {

constexpr double kDenomGuard = 1e-10; // relative denominator guard before falling back
constexpr double kDiscClamp = 1e-12;  // relative band in which a discriminant is treated as 0

HomLine normalized(HomLine l) {
    const double s = max_abs(l.vec());
    if (s > 0 && std::fabs(l.c) > kDenomGuard * s)
        return {l.a / l.c, l.b / l.c, 1.0};
    return l;
}

bool degenerate(double value, double scale) {
    return std::fabs(value) <= kDenomGuard * std::max(scale, 1e-300);
}

/// Clamps a slightly negative discriminant to zero; throws for real negatives.
double checked_discriminant(double d, double scale) {
    if (d < 0) {
        if (d < -kDiscClamp * std::max(scale, 1.0))
            throw NotExternalPoint("no real tangents from this point");
        return 0.0;
    }
    return d;
}

TangentPair make_pair(double u1, double u2, double v1, double v2, bool coincident) {
    return {normalized({u1, u2, 1.0}), normalized({v1, v2, 1.0}), coincident};
}

} // namespace

TangentPair tangents_generic(const ConicMatrices& m, const HomPoint& p) {
    const Vec3 pv = p.vec();
    const double pscale = dot(pv, pv);

    // a point on the conic has its polar as the unique tangent
    const double residual = quadratic_form(m.point_matrix, pv);
    if (std::fabs(residual) <= kDiscClamp * std::max(max_abs(m.point_matrix) * pscale, 1.0)) {
        const Vec3 t = m.point_matrix * pv;
        const HomLine polar = normalized({t.x, t.y, t.z});
        return {polar, polar, true};
    }

    // two independent lines through p span its pencil: any u with dot(u, p) = 0
    int k = 0;
    if (std::fabs(pv.y) < std::fabs(pv[k])) k = 1;
    if (std::fabs(pv.z) < std::fabs(pv[k])) k = 2;
    Vec3 axis{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
    Vec3 l = cross(pv, axis);
    l = (1.0 / norm(l)) * l;
    Vec3 w = cross(pv, l);
    w = (1.0 / norm(w)) * w;

    // (r l + w) A (r l + w)^T = 0  ->  A2 r^2 + 2 B2 r + C2 = 0
    const double A2 = quadratic_form(m.line_matrix, l);
    const double B2 = bilinear_form(m.line_matrix, l, w);
    const double C2 = quadratic_form(m.line_matrix, w);

    double disc = B2 * B2 - A2 * C2;
    const double dscale = B2 * B2 + std::fabs(A2 * C2);
    if (disc < 0) {
        if (disc < -kDiscClamp * std::max(dscale, 1.0))
            throw NoRealTangent("pencil quadratic has no real root");
        disc = 0.0;
    }

    Vec3 t0, t1;
    bool coincident = false;
    if (A2 == 0.0) {
        // l itself is tangent; the second root is linear in r
        t0 = l;
        t1 = (B2 != 0.0) ? (-C2 / (2 * B2)) * l + w : l;
        coincident = (B2 == 0.0);
    } else if (disc == 0.0) {
        const double r = -B2 / A2;
        t0 = t1 = r * l + w;
        coincident = true;
    } else {
        const double s = std::sqrt(disc);
        const double q = -(B2 + std::copysign(s, B2));
        t0 = (q / A2) * l + w;
        t1 = (C2 / q) * l + w;
    }

    return {normalized({t0.x, t0.y, t0.z}), normalized({t1.x, t1.y, t1.z}), coincident};
}

TangentPair tangents_central(double a, double b, double px, double py) {
    const double x = px, y = py;
    const double den1 = a * x * x + b * y * y;
    const double den1_scale = std::fabs(a) * x * x + std::fabs(b) * y * y;

    if (degenerate(y, 1 + std::fabs(x) + std::fabs(y)) || degenerate(den1, den1_scale)) {
        const ConicMatrices m = matrices(ConicSpec{ConicFamily::Central, a, b});
        return tangents_generic(m, HomPoint::affine(px, py));
    }

    const double inner = a * x * x + b * y * y - 1;
    double d = a * b * y * y * inner;
    const double d_scale = std::fabs(a * b) * y * y * (den1_scale + 1);
    d = checked_discriminant(d, d_scale);
    const double s = std::sqrt(d);

    const double den2 = y * den1; // a x^2 y + b y^3
    const double u1 = -(a * x + s) / den1;
    const double u2 = (-b * y * y + x * s) / den2;
    const double v1 = (-a * x + s) / den1;
    const double v2 = -(b * y * y + x * s) / den2;
    return make_pair(u1, u2, v1, v2, d == 0.0);
}

TangentPair tangents_parabola(double a, double b, double px, double py) {
    const double x = px, y = py;
    const double den2 = a * (b - 1) * x * x + b * b * y * y;
    const double den2_scale = std::fabs(a * (b - 1)) * x * x + b * b * y * y;

    if (degenerate(x, 1 + std::fabs(x) + std::fabs(y)) || degenerate(den2, den2_scale)) {
        const ConicMatrices m = matrices(ConicSpec{ConicFamily::Parabola, a, b});
        return tangents_generic(m, HomPoint::affine(px, py));
    }

    const double inner = a * x * x + b * (y * y - 1) + (y - 1) * (y - 1);
    double d = a * b * b * x * x * inner;
    const double d_scale =
        std::fabs(a) * b * b * x * x *
        (std::fabs(a) * x * x + std::fabs(b) * (y * y + 1) + (y - 1) * (y - 1) + 1);
    d = checked_discriminant(d, d_scale);
    const double s = std::sqrt(d);

    const double den1 = x * den2; // a (b-1) x^3 + b^2 x y^2
    const double k = a * x * x * (b + y - 1);
    const double g = a * x * x - b * b * y;
    // the y*sqrt and plain-sqrt terms must share the root sign for the line
    // to pass through (x, y); pairing them crosswise breaks incidence
    const double u1 = -(k + y * s) / den1;
    const double u2 = (g + s) / den2;
    const double v1 = -(k - y * s) / den1;
    const double v2 = (g - s) / den2;
    return make_pair(u1, u2, v1, v2, d == 0.0);
}

TangentPair tangents_semi_hyperbola(double a, double b, double px, double py,
                                    SemiRadicandSign sign) {
    const double x = px, y = py;

    if (degenerate(y, 1 + std::fabs(x) + std::fabs(y))) {
        const ConicMatrices m = matrices(ConicSpec{ConicFamily::SemiHyperbola, a, b});
        return tangents_generic(m, HomPoint::affine(px, py));
    }

    double r1 = a * (a * x * x + 2 * y * (b * y - 1));
    const double r_scale =
        std::fabs(a) * (std::fabs(a) * x * x + 2 * std::fabs(y) * (std::fabs(b * y) + 1));
    r1 = checked_discriminant(r1, r_scale);
    const double s1 = std::sqrt(r1);

    const double axis_term = (sign == SemiRadicandSign::MinusOne) ? -1.0 : 1.0;
    double r2 = a * (a * x * x + 2 * y * (b * y + axis_term));
    r2 = std::max(r2, 0.0);
    const double s2 = std::sqrt(r2);

    const double u1 = -(a * x + s1) / y;
    const double u2 = (a * x * x - y + x * s2) / (y * y);
    const double v1 = (-a * x + s1) / y;
    const double v2 = (a * x * x - y - x * s2) / (y * y);
    return make_pair(u1, u2, v1, v2, r1 == 0.0);
}

TangentPair tangents_osculating(double a, double px, double py) {
    const double x = px, y = py;
    const double den = (x * x + y * y) - 2 * a * x * y + a * a * y * y;
    const double den_scale = x * x + y * y + 2 * std::fabs(a * x * y) + a * a * y * y;

    if (degenerate(y, 1 + std::fabs(x) + std::fabs(y)) || degenerate(den, den_scale)) {
        const ConicMatrices m = matrices(ConicSpec{ConicFamily::OsculatingParabola, a, 0});
        return tangents_generic(m, HomPoint::affine(px, py));
    }

    const double inner = x * x + y * y - 1 - 2 * a * (x + 1) * y;
    double r = y * y * inner;
    const double r_scale = y * y * (x * x + y * y + 1 + 2 * std::fabs(a * (x + 1) * y));
    r = checked_discriminant(r, r_scale);
    const double s = std::sqrt(r);

    const double k = (1 + a * y) * (x - a * y);
    const double g = y * y - a * x * (x + 1) * y + a * a * (x + 1) * y * y;
    const double u1 = (-k + s) / den;
    const double u2 = -(g + x * s) / (y * den);
    const double v1 = -(k + s) / den;
    const double v2 = -(g - x * s) / (y * den);
    return make_pair(u1, u2, v1, v2, r == 0.0);
}

TangentPair tangents(const ConicSpec& spec, double px, double py) {
    try {
        switch (spec.family) {
            case ConicFamily::Central:
                return tangents_central(spec.a, spec.b, px, py);
            case ConicFamily::Parabola:
                return tangents_parabola(spec.a, spec.b, px, py);
            case ConicFamily::SemiHyperbola:
                return tangents_semi_hyperbola(spec.a, spec.b, px, py);
            case ConicFamily::OsculatingParabola:
                return tangents_osculating(spec.a, px, py);
        }
    } catch (const NoRealTangent&) {
        throw NotExternalPoint("point is interior to the conic");
    }
    throw NotExternalPoint("unknown family");
}

} // namespace isoptics
