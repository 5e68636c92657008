// Command-line front end: conic classification, duality, matrices, tangents,
// generalized angles, isoptic evaluation, oracle cross-checks and scene
// rendering. Machine output is line-oriented key=value with fixed key order
// and 9 significant digits.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoptics/angle.hpp"
#include "isoptics/conic.hpp"
#include "isoptics/isoptic.hpp"
#include "isoptics/scene.hpp"
#include "isoptics/tangent.hpp"

namespace {

using namespace isoptics;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::optional<std::vector<double>> parse_reals(const std::string& text, std::size_t count) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (out.size() != count) return std::nullopt;
    return out;
}

std::string line_text(const HomLine& l) {
    return fmt9(l.a) + "," + fmt9(l.b) + "," + fmt9(l.c);
}

std::string mat_text(const Mat3& m) {
    std::string out;
    for (int i = 0; i < 9; ++i) {
        if (i) out += ',';
        out += fmt9(m.m[i]);
    }
    return out;
}

struct MissingParameter {};

struct Cli {
    std::string family;
    double a = 0, alpha = 0;
    double b = std::numeric_limits<double>::quiet_NaN();
    std::string point, u, v, window, out, format = "kv";
    int resolution = 512;
    bool human() const { return format == "human"; }

    void emit(const char* key, const std::string& value) const {
        if (human())
            std::cout << key << ": " << value << "\n";
        else
            std::cout << key << "=" << value << "\n";
    }

    ConicSpec conic() const {
        if (family != "osculating" && std::isnan(b)) throw MissingParameter{};
        if (family == "central") return ConicSpec::central(a, b);
        if (family == "parabola") return ConicSpec::parabola(a, b);
        if (family == "semihyperbola") return ConicSpec::semi_hyperbola(a, b);
        return ConicSpec::osculating_parabola(a);
    }
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

int run_classify(const Cli& cli) {
    cli.emit("class", to_string(classify(cli.conic())));
    return 0;
}

int run_dual(const Cli& cli) {
    const ConicSpec d = dual(cli.conic());
    cli.emit("family", to_string(d.family));
    cli.emit("a", fmt9(d.a));
    if (d.family != ConicFamily::OsculatingParabola) cli.emit("b", fmt9(d.b));
    return 0;
}

int run_matrices(const Cli& cli) {
    const ConicMatrices m = matrices(cli.conic());
    cli.emit("point", mat_text(m.point_matrix));
    cli.emit("line", mat_text(m.line_matrix));
    return 0;
}

int run_tangents(const Cli& cli) {
    const auto p = parse_reals(cli.point, 2);
    if (!p) return usage_error("--point expects x,y");
    const TangentPair pair = tangents(cli.conic(), (*p)[0], (*p)[1]);
    cli.emit("u", line_text(pair.u));
    cli.emit("v", line_text(pair.v));
    cli.emit("coincident", pair.coincident ? "true" : "false");
    return 0;
}

int run_angle(const Cli& cli) {
    const auto ut = parse_reals(cli.u, 3);
    const auto vt = parse_reals(cli.v, 3);
    if (!ut || !vt) return usage_error("--u and --v expect a,b,c");
    const GeneralizedAngle angle =
        generalized_angle({(*ut)[0], (*ut)[1], (*ut)[2]}, {(*vt)[0], (*vt)[1], (*vt)[2]});
    cli.emit("kind", to_string(angle.kind));
    if (angle.kind == AngleKind::EllipticAngle || angle.kind == AngleKind::DistanceType ||
        angle.kind == AngleKind::Zero)
        cli.emit("value", fmt9(angle.value));
    cli.emit("formula", to_string(angle.formula));
    return 0;
}

int run_isoptic_eval(const Cli& cli) {
    const auto p = parse_reals(cli.point, 2);
    if (!p) return usage_error("--point expects x,y");
    const ConicSpec spec = cli.conic();
    const IsopticBranch branch = classify_branch(spec, (*p)[0], (*p)[1]);
    cli.emit("branch", to_string(branch));
    if (branch == IsopticBranch::Invalid) return 0;
    const double lhs = isoptic_lhs(spec, (*p)[0], (*p)[1]);
    const double rhs = isoptic_rhs(branch, cli.alpha);
    cli.emit("lhs", fmt9(lhs));
    cli.emit("rhs", fmt9(rhs));
    cli.emit("residual", fmt9(lhs - rhs));
    return 0;
}

int run_oracle(const Cli& cli) {
    const auto p = parse_reals(cli.point, 2);
    if (!p) return usage_error("--point expects x,y");
    const ConicSpec spec = cli.conic();
    const IsopticBranch branch = classify_branch(spec, (*p)[0], (*p)[1]);
    cli.emit("branch", to_string(branch));
    if (branch == IsopticBranch::Invalid) return 0;
    const GeneralizedAngle angle = isoptic_angle_direct(spec, (*p)[0], (*p)[1]);
    cli.emit("kind", to_string(angle.kind));
    cli.emit("value", fmt9(angle.value));
    cli.emit("lhs", fmt9(isoptic_lhs(spec, (*p)[0], (*p)[1])));
    cli.emit("deviation", fmt9(oracle_consistency(spec, (*p)[0], (*p)[1])));
    return 0;
}

int run_render(const Cli& cli) {
    RenderOptions options;
    options.resolution = cli.resolution;
    if (!cli.window.empty()) {
        const auto w = parse_reals(cli.window, 4);
        if (!w) return usage_error("--window expects xmin,xmax,ymin,ymax");
        options.window = {(*w)[0], (*w)[1], (*w)[2], (*w)[3]};
        if (!(options.window.xmin < options.window.xmax &&
              options.window.ymin < options.window.ymax))
            return usage_error("--window must satisfy xmin < xmax and ymin < ymax");
    }
    if (options.resolution < 2) return usage_error("--resolution must be at least 2");

    const Scene scene = render_scene(cli.conic(), cli.alpha, options);
    const std::string bytes = (cli.format == "csv") ? to_csv(scene) : to_svg(scene);
    std::ofstream file(cli.out, std::ios::binary);
    if (!file) throw Error("cannot open output file: " + cli.out);
    file << bytes;
    file.close();
    if (!file) throw Error("failed writing output file: " + cli.out);
    cli.emit("out", cli.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized conics and their isoptic curves in the projective disk model"};
    app.require_subcommand(1);

    Cli cli;
    const auto family_check =
        CLI::IsMember({"central", "parabola", "semihyperbola", "osculating"});
    const auto format_check = CLI::IsMember({"human", "kv", "csv"});

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", cli.family, "conic family")
            ->required()
            ->check(family_check);
        cmd->add_option("--a", cli.a, "first normal-form parameter")->required();
        cmd->add_option("--b", cli.b, "second normal-form parameter (all but osculating)");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", cli.format, "output format")->check(format_check);
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a conic");
    add_family(classify_cmd);
    add_format(classify_cmd);

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual conic parameters");
    add_family(dual_cmd);
    add_format(dual_cmd);

    CLI::App* matrices_cmd = app.add_subcommand("matrices", "point and line conic matrices");
    add_family(matrices_cmd);
    add_format(matrices_cmd);

    CLI::App* tangents_cmd = app.add_subcommand("tangents", "tangent lines from a point");
    add_family(tangents_cmd);
    tangents_cmd->add_option("--point", cli.point, "query point x,y")->required();
    add_format(tangents_cmd);

    CLI::App* angle_cmd = app.add_subcommand("angle", "generalized angle of two lines");
    angle_cmd->add_option("--u", cli.u, "first line a,b,c")->required();
    angle_cmd->add_option("--v", cli.v, "second line a,b,c")->required();
    add_format(angle_cmd);

    CLI::App* isoptic_cmd = app.add_subcommand("isoptic", "isoptic curve queries");
    isoptic_cmd->require_subcommand(1);
    CLI::App* eval_cmd = isoptic_cmd->add_subcommand("eval", "evaluate the compound equation");
    add_family(eval_cmd);
    eval_cmd->add_option("--alpha", cli.alpha, "angle parameter in radians")->required();
    eval_cmd->add_option("--point", cli.point, "query point x,y")->required();
    add_format(eval_cmd);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "closed form vs direct-angle cross-check");
    add_family(oracle_cmd);
    oracle_cmd->add_option("--point", cli.point, "query point x,y")->required();
    add_format(oracle_cmd);

    CLI::App* render_cmd = app.add_subcommand("render", "render a scene to SVG or CSV");
    add_family(render_cmd);
    render_cmd->add_option("--alpha", cli.alpha, "angle parameter in radians")->required();
    render_cmd->add_option("--window", cli.window, "xmin,xmax,ymin,ymax (default -2,2,-2,2)");
    render_cmd->add_option("--resolution", cli.resolution, "grid nodes per axis");
    render_cmd->add_option("--out", cli.out, "output path")->required();
    add_format(render_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) return run_classify(cli);
        if (*dual_cmd) return run_dual(cli);
        if (*matrices_cmd) return run_matrices(cli);
        if (*tangents_cmd) return run_tangents(cli);
        if (*angle_cmd) return run_angle(cli);
        if (*eval_cmd) return run_isoptic_eval(cli);
        if (*oracle_cmd) return run_oracle(cli);
        if (*render_cmd) return run_render(cli);
    } catch (const MissingParameter&) {
        return usage_error("--b is required for this family");
    } catch (const isoptics::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
