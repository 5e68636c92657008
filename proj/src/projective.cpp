#include "isoptics/projective.hpp"

#include <algorithm>
#include <cmath>

namespace isoptics {

namespace {

double largest_square(const Vec3& v) {
    return std::max({v.x * v.x, v.y * v.y, v.z * v.z});
}

} // namespace

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Proper: return "Proper";
        case PointClass::Boundary: return "Boundary";
        case PointClass::Outer: return "Outer";
    }
    return "?";
}

const char* to_string(LineClass c) {
    switch (c) {
        case LineClass::Proper: return "Proper";
        case LineClass::Boundary: return "Boundary";
        case LineClass::Outer: return "Outer";
    }
    return "?";
}

double lorentz(const HomPoint& p, const HomPoint& q) {
    return p.x * q.x + p.y * q.y - p.w * q.w;
}

double lorentz(const HomLine& u, const HomLine& v) {
    return u.a * v.a + u.b * v.b - u.c * v.c;
}

double incidence(const HomLine& u, const HomPoint& p) {
    return u.a * p.x + u.b * p.y + u.c * p.w;
}

PointClass classify_point(const HomPoint& p) {
    const double q = lorentz(p, p);
    if (std::fabs(q) <= kSignEps * largest_square(p.vec())) return PointClass::Boundary;
    return q < 0 ? PointClass::Proper : PointClass::Outer;
}

LineClass classify_line(const HomLine& u) {
    const double q = lorentz(u, u);
    if (std::fabs(q) <= kSignEps * largest_square(u.vec())) return LineClass::Boundary;
    return q > 0 ? LineClass::Proper : LineClass::Outer;
}

HomPoint pole_of_line(const HomLine& u) {
    return {u.a, u.b, -u.c};
}

HomLine polar_line(const HomPoint& p) {
    return {p.x, p.y, -p.w};
}

double distance(const HomPoint& p, const HomPoint& q) {
    if (classify_point(p) != PointClass::Proper || classify_point(q) != PointClass::Proper)
        throw NonProperPoint("distance requires two proper points");
    const double num = std::fabs(lorentz(p, q));
    const double den = std::sqrt(lorentz(p, p) * lorentz(q, q));
    // the ratio can dip below 1 by roundoff for (nearly) identical points
    const double ratio = std::max(num / den, 1.0);
    return std::acosh(ratio);
}

Affine2 dehomogenize(const HomPoint& p) {
    if (std::fabs(p.w) <= kSignEps * max_abs(p.vec()))
        throw IdealPoint("point at infinity has no affine coordinates");
    return {p.x / p.w, p.y / p.w};
}

} // namespace isoptics
