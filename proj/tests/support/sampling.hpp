#pragma once

// Rejection sampler for "valid external points" of a conic: points of
// [-3,3]^2 where a branch of the compound isoptic applies, kept a small
// distance away from the conic itself, the absolute, boundary-tangent loci
// and the singular set of the closed-form quotient, so that every quantity
// under test is well conditioned.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "isoptics/isoptic.hpp"

namespace testsupport {

struct SamplePoint {
    double x = 0, y = 0;
};

inline bool tangent_usable(const isoptics::HomLine& l) {
    if (l.c != 1.0) return false; // not normalizable: too close to a line through the origin
    const double s = l.a * l.a + l.b * l.b + 1;
    if (s > 1e6) return false;
    return std::fabs(isoptics::lorentz(l, l)) > 1e-3 * s;
}

inline std::vector<SamplePoint> valid_external_points(const isoptics::ConicSpec& spec,
                                                      std::size_t count, std::uint32_t seed) {
    using namespace isoptics;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::vector<SamplePoint> out;
    out.reserve(count);
    for (std::size_t attempt = 0; out.size() < count && attempt < 4'000'000; ++attempt) {
        const double x = coord(rng), y = coord(rng);
        if (std::fabs(x * x + y * y - 1) < 1e-3) continue;
        if (std::fabs(conic_residual(spec, HomPoint::affine(x, y))) < 1e-3) continue;
        if (classify_branch(spec, x, y) == IsopticBranch::Invalid) continue;
        TangentPair pair;
        try {
            pair = tangents(spec, x, y);
        } catch (const Error&) {
            continue;
        }
        if (!tangent_usable(pair.u) || !tangent_usable(pair.v)) continue;
        const IsopticQuotient q = isoptic_quotient(spec, x, y);
        if (std::fabs(q.denominator) < 1e-6 * std::max(1.0, q.denominator_scale)) continue;
        if (!(q.numerator / std::fabs(q.denominator) <= 1e3)) continue;
        out.push_back({x, y});
    }
    return out;
}

} // namespace testsupport
