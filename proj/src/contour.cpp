#include "isoptics/contour.hpp"

#include <cmath>
#include <unordered_map>

namespace isoptics {

std::optional<double> contour_value(const ConicSpec& conic, double alpha, IsopticBranch branch,
                                    double x, double y) {
    if (branch == IsopticBranch::Invalid) return std::nullopt;
    if (classify_branch(conic, x, y) != branch) return std::nullopt;
    double value = 0;
    try {
        const double rhs = isoptic_rhs(branch, alpha);
        if (branch == IsopticBranch::CosBranch && rhs <= 1e-30) {
            // the orthoptic: lhs - 0 >= 0 touches zero without a sign change
            value = isoptic_quotient(conic, x, y).numerator;
            isoptic_lhs(conic, x, y); // still reject singular denominators
        } else {
            value = isoptic_lhs(conic, x, y) - rhs;
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

namespace {

struct NodeSample {
    double residual = 0;
    IsopticBranch branch = IsopticBranch::Invalid;
    bool ok = false;
};

NodeSample sample_node(const ConicSpec& conic, double alpha, double x, double y) {
    NodeSample s;
    s.branch = classify_branch(conic, x, y);
    if (s.branch == IsopticBranch::Invalid) return s;
    if (std::fabs(x * x + y * y - 1) < kContourAbsoluteBand) return s;
    const IsopticQuotient q = isoptic_quotient(conic, x, y);
    if (std::fabs(q.denominator) < kContourDenomBand * std::max(1.0, q.denominator_scale))
        return s;
    const std::optional<double> v = contour_value(conic, alpha, s.branch, x, y);
    if (!v) return s;
    s.residual = *v;
    s.ok = true;
    return s;
}

void sample_row(const ConicSpec& conic, double alpha, ScalarField& f,
                std::vector<IsopticBranch>* branches, int iy) {
    const double y = f.y_at(iy);
    for (int ix = 0; ix < f.nx; ++ix) {
        const NodeSample s = sample_node(conic, alpha, f.x_at(ix), y);
        const std::size_t idx = static_cast<std::size_t>(iy) * f.nx + ix;
        f.values[idx] = s.ok ? s.residual : 0.0;
        f.mask[idx] = s.ok ? 1 : 0;
        if (branches) (*branches)[idx] = s.ok ? s.branch : IsopticBranch::Invalid;
    }
}

ScalarField make_field(const Window& window, int nx, int ny) {
    ScalarField f;
    f.window = window;
    f.nx = nx;
    f.ny = ny;
    f.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    f.mask.assign(static_cast<std::size_t>(nx) * ny, 0);
    return f;
}

} // namespace

ScalarField sample_field(const ConicSpec& conic, double alpha, const Window& window,
                         int nx, int ny) {
    ScalarField f = make_field(window, nx, ny);
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < ny; ++iy) sample_row(conic, alpha, f, nullptr, iy);
    return f;
}

ScalarField sample_field_serial(const ConicSpec& conic, double alpha, const Window& window,
                                int nx, int ny) {
    ScalarField f = make_field(window, nx, ny);
    for (int iy = 0; iy < ny; ++iy) sample_row(conic, alpha, f, nullptr, iy);
    return f;
}

BranchedField sample_branched_field(const ConicSpec& conic, double alpha, const Window& window,
                                    int nx, int ny) {
    BranchedField out;
    out.residual = make_field(window, nx, ny);
    out.branch.assign(static_cast<std::size_t>(nx) * ny, IsopticBranch::Invalid);
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < ny; ++iy) sample_row(conic, alpha, out.residual, &out.branch, iy);
    return out;
}

ScalarField sample_function(const FieldFn& fn, const Window& window, int nx, int ny) {
    ScalarField f = make_field(window, nx, ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const std::optional<double> v = fn(f.x_at(ix), f.y_at(iy));
            const std::size_t idx = static_cast<std::size_t>(iy) * nx + ix;
            if (v && std::isfinite(*v)) {
                f.values[idx] = *v;
                f.mask[idx] = 1;
            }
        }
    return f;
}

namespace {

class ContourBuilder {
public:
    ContourBuilder(const ScalarField& f, const FieldFn* refine, double tol)
        : f_(f), refine_(refine), tol_(tol) {}

    std::vector<Polyline> run() {
        for (int iy = 0; iy + 1 < f_.ny; ++iy)
            for (int ix = 0; ix + 1 < f_.nx; ++ix) emit_cell(ix, iy);
        return chain();
    }

private:
    // edge ids: horizontal edge from node (ix,iy) to (ix+1,iy) is 2*node,
    // vertical edge from (ix,iy) to (ix,iy+1) is 2*node+1
    long long node(int ix, int iy) const { return static_cast<long long>(iy) * f_.nx + ix; }
    double value(int ix, int iy) const { return f_.values[static_cast<std::size_t>(node(ix, iy))]; }
    bool valid(int ix, int iy) const { return f_.mask[static_cast<std::size_t>(node(ix, iy))] != 0; }

    int vertex_on_edge(int ix0, int iy0, int ix1, int iy1, long long id) {
        if (auto it = vertex_by_edge_.find(id); it != vertex_by_edge_.end()) return it->second;
        const double v0 = value(ix0, iy0), v1 = value(ix1, iy1);
        const Point2 p0{f_.x_at(ix0), f_.y_at(iy0)};
        const Point2 p1{f_.x_at(ix1), f_.y_at(iy1)};
        double t = (v0 == v1) ? 0.5 : v0 / (v0 - v1);
        t = std::min(std::max(t, 0.0), 1.0);
        Point2 p{p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])};
        if (refine_) p = bisect(p0, v0, p1, v1, p);
        const int idx = static_cast<int>(verts_.size());
        verts_.push_back(p);
        vertex_by_edge_.emplace(id, idx);
        return idx;
    }

    Point2 bisect(Point2 p0, double v0, Point2 p1, double v1, Point2 fallback) const {
        if (v0 == 0) return p0;
        if (v1 == 0) return p1;
        double t0 = 0, t1 = 1;
        const bool neg0 = v0 < 0;
        for (int i = 0; i < 80; ++i) {
            const double tm = 0.5 * (t0 + t1);
            const Point2 pm{p0[0] + tm * (p1[0] - p0[0]), p0[1] + tm * (p1[1] - p0[1])};
            const std::optional<double> fm = (*refine_)(pm[0], pm[1]);
            if (!fm || !std::isfinite(*fm)) return fallback;
            if (std::fabs(*fm) <= tol_) return pm;
            if ((*fm < 0) == neg0)
                t0 = tm;
            else
                t1 = tm;
        }
        const double tm = 0.5 * (t0 + t1);
        return {p0[0] + tm * (p1[0] - p0[0]), p0[1] + tm * (p1[1] - p0[1])};
    }

    void emit_cell(int ix, int iy) {
        if (!valid(ix, iy) || !valid(ix + 1, iy) || !valid(ix + 1, iy + 1) ||
            !valid(ix, iy + 1))
            return;
        const double v00 = value(ix, iy), v10 = value(ix + 1, iy);
        const double v11 = value(ix + 1, iy + 1), v01 = value(ix, iy + 1);
        const int idx = (v00 > 0 ? 1 : 0) | (v10 > 0 ? 2 : 0) | (v11 > 0 ? 4 : 0) |
                        (v01 > 0 ? 8 : 0);
        if (idx == 0 || idx == 15) return;

        const long long eB = 2 * node(ix, iy);
        const long long eT = 2 * node(ix, iy + 1);
        const long long eL = 2 * node(ix, iy) + 1;
        const long long eR = 2 * node(ix + 1, iy) + 1;
        auto B = [&] { return vertex_on_edge(ix, iy, ix + 1, iy, eB); };
        auto T = [&] { return vertex_on_edge(ix, iy + 1, ix + 1, iy + 1, eT); };
        auto L = [&] { return vertex_on_edge(ix, iy, ix, iy + 1, eL); };
        auto R = [&] { return vertex_on_edge(ix + 1, iy, ix + 1, iy + 1, eR); };
        auto seg = [&](int a, int b) { segs_.push_back({a, b}); };

        switch (idx) {
            case 1: case 14: seg(L(), B()); break;
            case 2: case 13: seg(B(), R()); break;
            case 3: case 12: seg(L(), R()); break;
            case 4: case 11: seg(T(), R()); break;
            case 6: case 9: seg(B(), T()); break;
            case 7: case 8: seg(L(), T()); break;
            case 5: // corners 00 and 11 positive
                if ((v00 + v10 + v11 + v01) * 0.25 > 0) {
                    seg(L(), T());
                    seg(B(), R());
                } else {
                    seg(L(), B());
                    seg(T(), R());
                }
                break;
            case 10: // corners 10 and 01 positive
                if ((v00 + v10 + v11 + v01) * 0.25 > 0) {
                    seg(L(), B());
                    seg(T(), R());
                } else {
                    seg(L(), T());
                    seg(B(), R());
                }
                break;
            default: break;
        }
    }

    std::vector<Polyline> chain() const {
        // vertex degree is at most 2, so every component is a path or a loop
        std::vector<std::array<int, 2>> adj(verts_.size(), {-1, -1});
        auto attach = [&](int v, int s) {
            if (adj[v][0] < 0)
                adj[v][0] = s;
            else
                adj[v][1] = s;
        };
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            attach(segs_[i][0], static_cast<int>(i));
            attach(segs_[i][1], static_cast<int>(i));
        }

        std::vector<bool> used(segs_.size(), false);
        std::vector<Polyline> out;
        for (std::size_t start = 0; start < segs_.size(); ++start) {
            if (used[start]) continue;
            std::vector<int> fwd = walk(static_cast<int>(start), segs_[start][1], adj, used);
            used[start] = false;
            std::vector<int> bwd = walk(static_cast<int>(start), segs_[start][0], adj, used);

            Polyline line;
            for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) line.push_back(verts_[*it]);
            line.push_back(verts_[segs_[start][0]]);
            line.push_back(verts_[segs_[start][1]]);
            for (int v : fwd) line.push_back(verts_[v]);
            out.push_back(std::move(line));
        }
        return out;
    }

    // follows unused segments from `vertex`, marking them used; returns the
    // vertices visited after `vertex`
    std::vector<int> walk(int start_seg, int vertex, const std::vector<std::array<int, 2>>& adj,
                          std::vector<bool>& used) const {
        used[start_seg] = true;
        std::vector<int> visited;
        int prev_seg = start_seg;
        int cur = vertex;
        for (;;) {
            int next_seg = -1;
            for (int s : adj[cur])
                if (s >= 0 && s != prev_seg && !used[s]) next_seg = s;
            if (next_seg < 0) break;
            used[next_seg] = true;
            cur = (segs_[next_seg][0] == cur) ? segs_[next_seg][1] : segs_[next_seg][0];
            visited.push_back(cur);
            prev_seg = next_seg;
        }
        return visited;
    }

    const ScalarField& f_;
    const FieldFn* refine_;
    double tol_;
    std::vector<Point2> verts_;
    std::vector<std::array<int, 2>> segs_;
    std::unordered_map<long long, int> vertex_by_edge_;
};

} // namespace

std::vector<Polyline> extract_contours(const ScalarField& field) {
    return ContourBuilder(field, nullptr, 0).run();
}

std::vector<Polyline> extract_contours(const ScalarField& field, const FieldFn& refine,
                                       double refine_tol) {
    return ContourBuilder(field, &refine, refine_tol).run();
}

std::vector<Polyline> split_polylines(const std::vector<Polyline>& lines,
                                      const std::function<bool(double, double)>& keep) {
    std::vector<Polyline> out;
    for (const Polyline& line : lines) {
        Polyline run;
        for (const Point2& p : line) {
            if (keep(p[0], p[1])) {
                run.push_back(p);
            } else {
                if (run.size() >= 2) out.push_back(std::move(run));
                run.clear();
            }
        }
        if (run.size() >= 2) out.push_back(std::move(run));
    }
    return out;
}

double total_length(const std::vector<Polyline>& lines) {
    double sum = 0;
    for (const Polyline& line : lines)
        for (std::size_t i = 1; i < line.size(); ++i)
            sum += std::hypot(line[i][0] - line[i - 1][0], line[i][1] - line[i - 1][1]);
    return sum;
}

} // namespace isoptics
