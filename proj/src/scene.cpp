#include "isoptics/scene.hpp"

#include <cmath>
#include <cstdio>

namespace isoptics {

namespace {

constexpr double kPi = 3.14159265358979323846;

void append_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    out += buf;
}

bool orthoptic_case(double alpha) {
    const double c = std::cos(alpha);
    return c * c <= 1e-30;
}

// well-conditioned quotient pieces, or nullopt
std::optional<IsopticQuotient> conditioned_quotient(const ConicSpec& conic, double x, double y) {
    const IsopticQuotient q = isoptic_quotient(conic, x, y);
    if (!std::isfinite(q.numerator) || !std::isfinite(q.denominator)) return std::nullopt;
    if (std::fabs(q.denominator) < kContourDenomBand * std::max(1.0, q.denominator_scale))
        return std::nullopt;
    return q;
}

// The quotient is one smooth function across branch boundaries, so each
// branch's arc is extracted as a level set of it over the whole conditioned
// region and trimmed to the branch afterwards. Masking cells by branch
// instead would chop the curve wherever it runs closer to a branch boundary
// than a grid cell, which it does along extended stretches.
std::optional<double> level_value(const ConicSpec& conic, double alpha, IsopticBranch branch,
                                  double x, double y) {
    const std::optional<IsopticQuotient> q = conditioned_quotient(conic, x, y);
    if (!q) return std::nullopt;
    if (branch == IsopticBranch::CosBranch && orthoptic_case(alpha))
        return q->numerator; // lhs - 0 only touches zero; the numerator crosses it
    const double lhs = q->numerator * q->numerator / std::fabs(q->denominator);
    return lhs - isoptic_rhs(branch, alpha);
}

// one parallel pass filling the quotient value and the signed numerator
void sample_quotient_grids(const ConicSpec& conic, ScalarField& lhs, ScalarField& num) {
    const int nx = lhs.nx, ny = lhs.ny;
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < ny; ++iy) {
        const double y = lhs.y_at(iy);
        for (int ix = 0; ix < nx; ++ix) {
            const std::size_t idx = static_cast<std::size_t>(iy) * nx + ix;
            const std::optional<IsopticQuotient> q =
                conditioned_quotient(conic, lhs.x_at(ix), y);
            if (!q) continue;
            lhs.values[idx] = q->numerator * q->numerator / std::fabs(q->denominator);
            num.values[idx] = q->numerator;
            lhs.mask[idx] = 1;
            num.mask[idx] = 1;
        }
    }
}

ScalarField blank_field(const Window& window, int n) {
    ScalarField f;
    f.window = window;
    f.nx = f.ny = n;
    f.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    f.mask.assign(static_cast<std::size_t>(n) * n, 0);
    return f;
}

} // namespace

Scene render_scene(const ConicSpec& conic, double alpha, const RenderOptions& options) {
    Scene scene;
    scene.window = options.window;
    const int n = options.resolution;

    // model circle
    Polyline circle;
    circle.reserve(options.circle_segments + 1);
    for (int i = 0; i <= options.circle_segments; ++i) {
        const double t = 2 * kPi * i / options.circle_segments;
        circle.push_back({std::cos(t), std::sin(t)});
    }
    scene.absolute.push_back(std::move(circle));

    // conic curve: zero set of the normal-form residual
    const FieldFn conic_fn = [&](double x, double y) -> std::optional<double> {
        return conic_residual(conic, HomPoint::affine(x, y));
    };
    const ScalarField conic_field = sample_function(conic_fn, options.window, n, n);
    scene.conic = extract_contours(conic_field, conic_fn, options.refine_tol);

    // per-branch level sets of the shared quotient, then a per-vertex trim to
    // the branch region and away from the absolute
    ScalarField lhs_field = blank_field(options.window, n);
    ScalarField num_field = blank_field(options.window, n);
    sample_quotient_grids(conic, lhs_field, num_field);

    const IsopticBranch order[3] = {IsopticBranch::CoshBranch, IsopticBranch::CosBranch,
                                    IsopticBranch::SinhBranch};
    for (int bi = 0; bi < 3; ++bi) {
        const IsopticBranch branch = order[bi];
        ScalarField f;
        if (branch == IsopticBranch::CosBranch && orthoptic_case(alpha)) {
            f = num_field;
        } else {
            f = lhs_field;
            const double rhs = isoptic_rhs(branch, alpha);
            for (double& v : f.values) v -= rhs;
        }
        const FieldFn fn = [&conic, alpha, branch](double x, double y) {
            return level_value(conic, alpha, branch, x, y);
        };
        const auto raw = extract_contours(f, fn, options.refine_tol);
        scene.branches[bi] = split_polylines(raw, [&](double x, double y) {
            if (std::fabs(x * x + y * y - 1) < kContourAbsoluteBand) return false;
            if (classify_branch(conic, x, y) != branch) return false;
            try {
                const TangentPair t = tangents(conic, x, y);
                const double qu = lorentz(t.u, t.u) /
                                  (t.u.a * t.u.a + t.u.b * t.u.b + t.u.c * t.u.c);
                const double qv = lorentz(t.v, t.v) /
                                  (t.v.a * t.v.a + t.v.b * t.v.b + t.v.c * t.v.c);
                return std::fabs(qu * qv) >= kContourSwitchBand;
            } catch (const Error&) {
                return false;
            }
        });
    }
    return scene;
}

namespace {

void append_paths(std::string& out, const std::vector<Polyline>& lines, const Window& w,
                  const char* style) {
    const double sx = 1000.0 / (w.xmax - w.xmin);
    const double sy = 1000.0 / (w.ymax - w.ymin);
    for (const Polyline& line : lines) {
        if (line.size() < 2) continue;
        out += "<path d=\"";
        for (std::size_t i = 0; i < line.size(); ++i) {
            out += (i == 0) ? "M " : " L ";
            append_num(out, (line[i][0] - w.xmin) * sx);
            out += ' ';
            append_num(out, 1000.0 - (line[i][1] - w.ymin) * sy);
        }
        out += "\" ";
        out += style;
        out += "/>\n";
    }
}

} // namespace

std::string to_svg(const Scene& scene) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    append_paths(out, scene.absolute, scene.window,
                 "fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"");
    append_paths(out, scene.conic, scene.window,
                 "fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" "
                 "stroke-dasharray=\"10 8\"");
    static const char* branch_styles[3] = {
        "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"",
        "fill=\"none\" stroke=\"#2471a3\" stroke-width=\"2\"",
        "fill=\"none\" stroke=\"#1e8449\" stroke-width=\"2\"",
    };
    for (int bi = 0; bi < 3; ++bi)
        append_paths(out, scene.branches[bi], scene.window, branch_styles[bi]);
    out += "</svg>\n";
    return out;
}

std::string to_csv(const Scene& scene) {
    std::string out = "branch,polyline,x,y\n";
    auto rows = [&out](const char* label, const std::vector<Polyline>& lines) {
        for (std::size_t li = 0; li < lines.size(); ++li)
            for (const Point2& p : lines[li]) {
                out += label;
                out += ',';
                append_num(out, static_cast<double>(li));
                out += ',';
                append_num(out, p[0]);
                out += ',';
                append_num(out, p[1]);
                out += '\n';
            }
    };
    rows("absolute", scene.absolute);
    rows("conic", scene.conic);
    rows("CoshBranch", scene.branches[0]);
    rows("CosBranch", scene.branches[1]);
    rows("SinhBranch", scene.branches[2]);
    return out;
}

} // namespace isoptics
