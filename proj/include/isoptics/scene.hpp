#pragma once

#include <string>

#include "isoptics/contour.hpp"

namespace isoptics {

struct RenderOptions {
    Window window;
    int resolution = 512;      // grid nodes per axis
    int circle_segments = 512; // polyline resolution of the model circle
    double refine_tol = 1e-7;  // residual bound for emitted contour vertices
};

/// Model-circle outline, dashed conic curve and one contour set per isoptic
/// branch, all in model coordinates.
struct Scene {
    Window window;
    std::vector<Polyline> absolute;
    std::vector<Polyline> conic;
    std::array<std::vector<Polyline>, 3> branches; // Cosh, Cos, Sinh order
};

Scene render_scene(const ConicSpec& conic, double alpha, const RenderOptions& options = {});

/// SVG 1.1 document (paths only), 1000x1000 viewBox, y axis flipped.
std::string to_svg(const Scene& scene);

/// `branch,polyline,x,y` rows, 9 significant digits, LF line endings.
std::string to_csv(const Scene& scene);

} // namespace isoptics
