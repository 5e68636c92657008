#pragma once

// Shared parameter tables: the classification sweep (>= 3 parameter pairs per
// class cell where the cell has more than one member) and the figure-caption
// configurations exercised by the rendering and oracle suites.

#include <vector>

#include "isoptics/conic.hpp"

namespace testsupport {

struct SweepEntry {
    isoptics::ConicSpec spec;
    isoptics::ConicClass expected;
    isoptics::ConicClass dual_expected;
};

inline std::vector<SweepEntry> classification_sweep() {
    using isoptics::ConicClass;
    using isoptics::ConicSpec;
    std::vector<SweepEntry> t;
    auto central = [&](double a, double b, ConicClass c, ConicClass d) {
        t.push_back({ConicSpec::central(a, b), c, d});
    };
    auto parabola = [&](double a, double b, ConicClass c, ConicClass d) {
        t.push_back({ConicSpec::parabola(a, b), c, d});
    };

    // the absolute is the single point a = b = 1 of its cell
    central(1, 1, ConicClass::AbsoluteConic, ConicClass::AbsoluteConic);

    central(2, 2, ConicClass::Circle, ConicClass::CircleEnclosingAbsolute);
    central(1.5, 1.5, ConicClass::Circle, ConicClass::CircleEnclosingAbsolute);
    central(4, 4, ConicClass::Circle, ConicClass::CircleEnclosingAbsolute);

    central(0.5, 0.5, ConicClass::CircleEnclosingAbsolute, ConicClass::Circle);
    central(0.25, 0.25, ConicClass::CircleEnclosingAbsolute, ConicClass::Circle);
    central(0.9, 0.9, ConicClass::CircleEnclosingAbsolute, ConicClass::Circle);

    central(1, 2, ConicClass::Hypercycle, ConicClass::HypercycleEnclosingAbsolute);
    central(1, 1.5, ConicClass::Hypercycle, ConicClass::HypercycleEnclosingAbsolute);
    central(1, 10, ConicClass::Hypercycle, ConicClass::HypercycleEnclosingAbsolute);

    central(0.5, 1, ConicClass::HypercycleEnclosingAbsolute, ConicClass::Hypercycle);
    central(0.2, 1, ConicClass::HypercycleEnclosingAbsolute, ConicClass::Hypercycle);
    central(0.8, 1, ConicClass::HypercycleEnclosingAbsolute, ConicClass::Hypercycle);

    central(-1, 1, ConicClass::HypercycleExcludingAbsolute,
            ConicClass::HypercycleExcludingAbsolute);
    central(-0.5, 1, ConicClass::HypercycleExcludingAbsolute,
            ConicClass::HypercycleExcludingAbsolute);
    central(-4, 1, ConicClass::HypercycleExcludingAbsolute,
            ConicClass::HypercycleExcludingAbsolute);

    central(0.3, 2, ConicClass::ConcaveHyperbola, ConicClass::ConcaveHyperbola);
    central(0.5, 1.5, ConicClass::ConcaveHyperbola, ConicClass::ConcaveHyperbola);
    central(0.8, 3, ConicClass::ConcaveHyperbola, ConicClass::ConcaveHyperbola);

    central(-1.5, 1.1, ConicClass::ConvexHyperbola, ConicClass::HyperbolaExcludingAbsolute);
    central(-1, 2, ConicClass::ConvexHyperbola, ConicClass::HyperbolaExcludingAbsolute);
    central(-0.2, 5, ConicClass::ConvexHyperbola, ConicClass::HyperbolaExcludingAbsolute);

    central(-2, 0.5, ConicClass::HyperbolaExcludingAbsolute, ConicClass::ConvexHyperbola);
    central(-1, 0.9, ConicClass::HyperbolaExcludingAbsolute, ConicClass::ConvexHyperbola);
    central(-0.3, 0.1, ConicClass::HyperbolaExcludingAbsolute, ConicClass::ConvexHyperbola);

    central(2, 3, ConicClass::Ellipse, ConicClass::EllipseEnclosingAbsolute);
    central(1.5, 2, ConicClass::Ellipse, ConicClass::EllipseEnclosingAbsolute);
    central(5, 9, ConicClass::Ellipse, ConicClass::EllipseEnclosingAbsolute);

    central(0.45, 0.8, ConicClass::EllipseEnclosingAbsolute, ConicClass::Ellipse);
    central(0.1, 0.2, ConicClass::EllipseEnclosingAbsolute, ConicClass::Ellipse);
    central(0.5, 0.99, ConicClass::EllipseEnclosingAbsolute, ConicClass::Ellipse);

    central(-2, -1, ConicClass::Empty, ConicClass::Empty);
    central(-3, -3, ConicClass::Empty, ConicClass::Empty);
    central(-5, -0.5, ConicClass::Empty, ConicClass::Empty);

    parabola(1, 1, ConicClass::Horocycle, ConicClass::HorocycleEnclosingAbsolute);
    parabola(0.5, 0.5, ConicClass::Horocycle, ConicClass::HorocycleEnclosingAbsolute);
    parabola(2, 2, ConicClass::Horocycle, ConicClass::HorocycleEnclosingAbsolute);

    parabola(-1, -1, ConicClass::HorocycleEnclosingAbsolute, ConicClass::Horocycle);
    parabola(-0.5, -0.5, ConicClass::HorocycleEnclosingAbsolute, ConicClass::Horocycle);
    parabola(-2, -2, ConicClass::HorocycleEnclosingAbsolute, ConicClass::Horocycle);

    parabola(2, 1.5, ConicClass::EllipticParabola, ConicClass::ParabolaEnclosingAbsolute);
    parabola(1, 0.5, ConicClass::EllipticParabola, ConicClass::ParabolaEnclosingAbsolute);
    parabola(3, 0.1, ConicClass::EllipticParabola, ConicClass::ParabolaEnclosingAbsolute);

    parabola(-2.5, -5, ConicClass::ParabolaEnclosingAbsolute, ConicClass::EllipticParabola);
    parabola(-1, -2, ConicClass::ParabolaEnclosingAbsolute, ConicClass::EllipticParabola);
    parabola(-0.1, -0.5, ConicClass::ParabolaEnclosingAbsolute, ConicClass::EllipticParabola);

    parabola(-5, -2.7, ConicClass::TwoSidedParabola, ConicClass::ConcaveHyperbolicParabola);
    parabola(-2, -1, ConicClass::TwoSidedParabola, ConicClass::ConcaveHyperbolicParabola);
    parabola(-0.5, -0.1, ConicClass::TwoSidedParabola, ConicClass::ConcaveHyperbolicParabola);

    parabola(1, 2, ConicClass::ConcaveHyperbolicParabola, ConicClass::TwoSidedParabola);
    parabola(0.5, 1, ConicClass::ConcaveHyperbolicParabola, ConicClass::TwoSidedParabola);
    parabola(0.1, 3, ConicClass::ConcaveHyperbolicParabola, ConicClass::TwoSidedParabola);

    parabola(-2, 1.5, ConicClass::ConvexHyperbolicParabola,
             ConicClass::ParabolaExcludingAbsolute);
    parabola(-1, 1, ConicClass::ConvexHyperbolicParabola, ConicClass::ParabolaExcludingAbsolute);
    parabola(-0.5, 3, ConicClass::ConvexHyperbolicParabola,
             ConicClass::ParabolaExcludingAbsolute);

    parabola(0.8, -0.4, ConicClass::ParabolaExcludingAbsolute,
             ConicClass::ConvexHyperbolicParabola);
    parabola(1, -1, ConicClass::ParabolaExcludingAbsolute, ConicClass::ConvexHyperbolicParabola);
    parabola(2, -0.5, ConicClass::ParabolaExcludingAbsolute,
             ConicClass::ConvexHyperbolicParabola);

    for (auto [a, b] : {std::pair{1.4, 0.5}, {2.0, -0.3}, {0.7, 0.9}, {-1.5, 0.5}})
        t.push_back({ConicSpec::semi_hyperbola(a, b), ConicClass::SemiHyperbola,
                     ConicClass::SemiHyperbola});
    for (double a : {0.4, 1.0, 2.5})
        t.push_back({ConicSpec::osculating_parabola(a), ConicClass::OsculatingParabola,
                     ConicClass::OsculatingParabola});
    return t;
}

struct FigureConfig {
    isoptics::ConicSpec conic;
    double alpha;
    isoptics::ConicClass expected;
    const char* name;
};

inline constexpr double kPi = 3.14159265358979323846;

/// The thirteen caption configurations, one per distinct conic.
inline std::vector<FigureConfig> figure_configs() {
    using isoptics::ConicClass;
    using isoptics::ConicSpec;
    return {
        {ConicSpec::central(0.3, 2), kPi / 2, ConicClass::ConcaveHyperbola,
         "concave hyperbola"},
        {ConicSpec::central(0.5, -2), kPi / 3, ConicClass::HyperbolaExcludingAbsolute,
         "hyperbola excluding the absolute"},
        {ConicSpec::central(1.1, -1.5), 19 * kPi / 36, ConicClass::ConvexHyperbola,
         "convex hyperbola"},
        {ConicSpec::central(2, 3), 7 * kPi / 18, ConicClass::Ellipse, "ellipse"},
        {ConicSpec::central(0.45, 0.8), kPi / 2, ConicClass::EllipseEnclosingAbsolute,
         "ellipse enclosing the absolute"},
        {ConicSpec::parabola(2, 1.5), kPi / 3, ConicClass::EllipticParabola,
         "elliptic parabola"},
        {ConicSpec::parabola(-2.5, -5), 7 * kPi / 18, ConicClass::ParabolaEnclosingAbsolute,
         "parabola enclosing the absolute"},
        {ConicSpec::parabola(-5, -2.7), kPi / 2, ConicClass::TwoSidedParabola,
         "two sided parabola"},
        {ConicSpec::parabola(1, 2), kPi / 2, ConicClass::ConcaveHyperbolicParabola,
         "concave hyperbolic parabola"},
        {ConicSpec::parabola(-2, 1.5), kPi / 3, ConicClass::ConvexHyperbolicParabola,
         "convex hyperbolic parabola"},
        {ConicSpec::parabola(0.8, -0.4), kPi / 3, ConicClass::ParabolaExcludingAbsolute,
         "parabola excluding the absolute"},
        {ConicSpec::semi_hyperbola(1.4, 0.5), kPi / 4, ConicClass::SemiHyperbola,
         "semi-hyperbola"},
        {ConicSpec::osculating_parabola(0.4), kPi / 3, ConicClass::OsculatingParabola,
         "osculating parabola"},
    };
}

/// One representative scene per staged figure.
inline std::vector<FigureConfig> figure_scenes() {
    const std::vector<FigureConfig> all = figure_configs();
    return {all[0], all[1], all[3], all[5], all[7], all[9], all[11], all[12]};
}

} // namespace testsupport
