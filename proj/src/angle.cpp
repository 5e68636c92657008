#include "isoptics/angle.hpp"

#include <algorithm>
#include <cmath>

namespace isoptics {

namespace {

double gram(const HomLine& u, const HomLine& v) {
    return lorentz(u, u) * lorentz(v, v) - lorentz(u, v) * lorentz(u, v);
}

} // namespace

const char* to_string(AngleKind k) {
    switch (k) {
        case AngleKind::EllipticAngle: return "EllipticAngle";
        case AngleKind::DistanceType: return "DistanceType";
        case AngleKind::Zero: return "Zero";
        case AngleKind::Undefined: return "Undefined";
        case AngleKind::Infinite: return "Infinite";
    }
    return "?";
}

const char* to_string(AngleFormula f) {
    switch (f) {
        case AngleFormula::CosForm: return "CosForm";
        case AngleFormula::CoshForm: return "CoshForm";
        case AngleFormula::SinhForm: return "SinhForm";
        case AngleFormula::None: return "None";
    }
    return "?";
}

double cos_angle(const HomLine& u, const HomLine& v) {
    if (classify_line(u) != LineClass::Proper || classify_line(v) != LineClass::Proper)
        throw PreconditionViolated("cos_angle requires two proper lines");
    // Gram = 0 (identical lines, or meeting on the boundary) gives cos = 1
    if (gram(u, v) < 0)
        throw PreconditionViolated("cos_angle requires a non-ultraparallel pair (Gram >= 0)");
    const double c = std::fabs(lorentz(u, v)) / std::sqrt(lorentz(u, u) * lorentz(v, v));
    return std::min(c, 1.0);
}

double cosh_angle(const HomLine& u, const HomLine& v) {
    const LineClass cu = classify_line(u), cv = classify_line(v);
    if (cu == LineClass::Proper && cv == LineClass::Proper) {
        if (!(gram(u, v) < 0))
            throw PreconditionViolated("cosh_angle on proper lines requires Gram < 0");
    } else if (!(cu == LineClass::Outer && cv == LineClass::Outer)) {
        throw PreconditionViolated("cosh_angle requires two proper or two outer lines");
    }
    // evaluated on the poles; <pole(u),pole(v)> = <u,v>, so this agrees with
    // the expression on the line coefficients wherever both are defined
    const HomPoint pu = pole_of_line(u), pv = pole_of_line(v);
    const double c = std::fabs(lorentz(pu, pv)) / std::sqrt(lorentz(pu, pu) * lorentz(pv, pv));
    return std::max(c, 1.0);
}

double sinh_angle(const HomLine& u, const HomLine& v) {
    const LineClass cu = classify_line(u), cv = classify_line(v);
    const bool mixed = (cu == LineClass::Proper && cv == LineClass::Outer) ||
                       (cu == LineClass::Outer && cv == LineClass::Proper);
    if (!mixed)
        throw PreconditionViolated("sinh_angle requires one proper and one outer line");
    const HomPoint pu = pole_of_line(u), pv = pole_of_line(v);
    return std::fabs(lorentz(pu, pv)) / std::sqrt(-lorentz(pu, pu) * lorentz(pv, pv));
}

GeneralizedAngle generalized_angle(const HomLine& u, const HomLine& v) {
    const LineClass cu = classify_line(u), cv = classify_line(v);

    if (cu == LineClass::Boundary || cv == LineClass::Boundary) {
        // the contact point of a boundary line is its own pole; the angle is
        // undefined when the other line runs through it, infinite otherwise
        const HomLine& bd = (cu == LineClass::Boundary) ? u : v;
        const HomLine& other = (cu == LineClass::Boundary) ? v : u;
        const HomPoint contact = pole_of_line(bd);
        const double inc = incidence(other, contact);
        const double scale = std::fabs(other.a * contact.x) + std::fabs(other.b * contact.y) +
                             std::fabs(other.c * contact.w);
        if (std::fabs(inc) <= kSignEps * std::max(scale, 1e-300))
            return {AngleKind::Undefined, 0, AngleFormula::None};
        return {AngleKind::Infinite, 0, AngleFormula::None};
    }

    if (cu == LineClass::Proper && cv == LineClass::Proper) {
        const double g = gram(u, v);
        const double gscale = lorentz(u, u) * lorentz(v, v); // > 0 here
        if (std::fabs(g) <= kSignEps * gscale)
            return {AngleKind::Zero, 0, AngleFormula::None};
        if (g > 0)
            return {AngleKind::EllipticAngle, std::acos(cos_angle(u, v)), AngleFormula::CosForm};
        return {AngleKind::DistanceType, std::acosh(cosh_angle(u, v)), AngleFormula::CoshForm};
    }

    if (cu == LineClass::Outer && cv == LineClass::Outer)
        return {AngleKind::DistanceType, std::acosh(cosh_angle(u, v)), AngleFormula::CoshForm};

    return {AngleKind::DistanceType, std::asinh(sinh_angle(u, v)), AngleFormula::SinhForm};
}

} // namespace isoptics
