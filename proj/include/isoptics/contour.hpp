#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "isoptics/isoptic.hpp"

namespace isoptics {

struct Window {
    double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
};

/// Scalar samples over a regular grid with a validity mask. Node (ix, iy)
/// lives at values[iy * nx + ix]; both axes include their window endpoints.
struct ScalarField {
    Window window;
    int nx = 0, ny = 0;
    std::vector<double> values;
    std::vector<std::uint8_t> mask;

    double x_at(int ix) const { return window.xmin + ix * (window.xmax - window.xmin) / (nx - 1); }
    double y_at(int iy) const { return window.ymin + iy * (window.ymax - window.ymin) / (ny - 1); }
};

using Point2 = std::array<double, 2>;
using Polyline = std::vector<Point2>;

/// Continuous re-evaluation hook; nullopt where the function is undefined.
using FieldFn = std::function<std::optional<double>(double, double)>;

/// Contouring value at (x, y) when the point lies on `branch`: the isoptic
/// residual, except in the exact orthoptic case (cos branch with rhs == 0)
/// where the residual only touches zero; there the signed quotient numerator
/// is used, which vanishes on the same curve but crosses it transversally.
/// nullopt off-branch or where the quotient is singular.
std::optional<double> contour_value(const ConicSpec& conic, double alpha, IsopticBranch branch,
                                    double x, double y);

/// Isoptic residual per grid node; nodes where no branch applies or the
/// quotient is singular are masked out. Rows are computed in parallel when
/// OpenMP is enabled.
ScalarField sample_field(const ConicSpec& conic, double alpha, const Window& window,
                         int nx, int ny);

/// Single-threaded reference producing byte-identical values and mask.
ScalarField sample_field_serial(const ConicSpec& conic, double alpha, const Window& window,
                                int nx, int ny);

/// Residual field plus the branch every node fell into (Invalid == masked).
struct BranchedField {
    ScalarField residual;
    std::vector<IsopticBranch> branch;
};

BranchedField sample_branched_field(const ConicSpec& conic, double alpha, const Window& window,
                                    int nx, int ny);

/// Samples an arbitrary function (serial); masks nullopt and non-finite nodes.
ScalarField sample_function(const FieldFn& fn, const Window& window, int nx, int ny);

/// Zero-set extraction by marching squares with linear interpolation along
/// cell edges. Cells touching a masked node are skipped; ambiguous saddle
/// cells are resolved by the sign of the cell's mean value. Crossing vertices
/// are optionally tightened by bisection of `refine` along their grid edge
/// until |value| <= refine_tol.
std::vector<Polyline> extract_contours(const ScalarField& field);
std::vector<Polyline> extract_contours(const ScalarField& field, const FieldFn& refine,
                                       double refine_tol);

/// Splits polylines at vertices rejected by `keep`, dropping runs shorter
/// than two vertices.
std::vector<Polyline> split_polylines(const std::vector<Polyline>& lines,
                                      const std::function<bool(double, double)>& keep);

/// Sum of segment lengths over a polyline set.
double total_length(const std::vector<Polyline>& lines);

/// Fixed exclusion margins for isoptic contouring. The compound curve
/// approaches the absolute conic and the branch-switch locus (where a tangent
/// becomes a boundary line) asymptotically, and the printed quotient
/// degenerates on both, so contours are clipped at resolution-independent
/// margins there; likewise for nearly vanishing denominators.
inline constexpr double kContourAbsoluteBand = 0.05; // on |x^2 + y^2 - 1|
inline constexpr double kContourSwitchBand = 0.05;   // on the normalized <u,u><v,v>
inline constexpr double kContourDenomBand = 1e-9;    // relative to the term sum

} // namespace isoptics
