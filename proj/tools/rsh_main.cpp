// rsh: construct, analyze, and verify rectifying slant helices.
//
// Subcommands:
//   generate    closed-form family member -> CSV (s,x,y,z)
//   analyze     sampled curve CSV -> JSON classification report
//   verify      run the closed-form invariant suite for given parameters
//   indicatrix  tangent/normal/binormal spherical trace -> CSV (s,ux,uy,uz)
//   plot        curve CSV -> SVG projection (optionally with cone silhouette)
//
// Exit codes: 0 verified / success, 1 checks failed, 2 invalid input.
// Env: RSH_TOL scales every tolerance; RSH_KAPPA_SCALE is a mutation-testing
// hook that perturbs the closed-form curvature inside `verify`.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsh/rsh.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// Accepts "0.25", "1e-3", and plain fractions like "1/3" (the natural way
// to pass cos(theta) for the worked examples).
double parse_real(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) return rsh::parse_double(text);
    const double num = rsh::parse_double(text.substr(0, slash));
    const double den = rsh::parse_double(text.substr(slash + 1));
    if (den == 0.0) throw rsh::invalid_params("fraction with zero denominator: " + text);
    return num / den;
}

double env_real(const char* name, double fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    return parse_real(raw);
}

rsh::Tolerances tolerances_from_env() {
    const double scale = env_real("RSH_TOL", 1.0);
    return rsh::Tolerances{}.scaled(scale);
}

// Shared --c1/--c2/--cos-theta/--theta-deg block. The numeric options are
// read as text so fractions like 1/3 survive; exactly one of the two angle
// spellings is required.
struct ParamArgs {
    std::string c1_text;
    std::string c2_text;
    std::string cos_theta_text;
    std::optional<double> theta_deg;

    void attach(CLI::App* cmd) {
        cmd->add_option("--c1", c1_text, "slope of tau/kappa (accepts fractions, e.g. 1/2)")
            ->required();
        cmd->add_option("--c2", c2_text, "intercept of tau/kappa (accepts fractions)")
            ->required();
        auto* ct = cmd->add_option("--cos-theta", cos_theta_text,
                                   "cosine of the slant angle (accepts fractions, e.g. 1/3)");
        auto* td = cmd->add_option("--theta-deg", theta_deg, "slant angle in degrees");
        ct->excludes(td);
        td->excludes(ct);
    }

    rsh::FamilyParams resolve() const {
        const double c1 = parse_real(c1_text);
        const double c2 = parse_real(c2_text);
        if (!cos_theta_text.empty())
            return rsh::FamilyParams::from_cos_theta(c1, c2, parse_real(cos_theta_text));
        if (theta_deg)
            return rsh::FamilyParams::from_theta(c1, c2, *theta_deg * M_PI / 180.0);
        throw rsh::invalid_params("give exactly one of --cos-theta or --theta-deg");
    }
};

// Default grid spans tau/kappa over [-3, 3]: the window scales with the
// parameters, so slow members (small |c1|) still cover three full ratio
// units instead of a sliver of arc.
struct GridArgs {
    std::optional<double> s_min;
    std::optional<double> s_max;
    int n = 1001;

    void attach(CLI::App* cmd, int default_n) {
        n = default_n;
        cmd->add_option("--s-min", s_min, "arc-length start (default: where tau/kappa = -3)");
        cmd->add_option("--s-max", s_max, "arc-length end (default: where tau/kappa = +3)");
        cmd->add_option("--n", n, "number of samples")->capture_default_str();
    }

    rsh::Interval resolve(const rsh::FamilyParams& p) const {
        double lo = (-3.0 - p.c2) / p.c1;
        double hi = (3.0 - p.c2) / p.c1;
        if (lo > hi) std::swap(lo, hi);
        if (s_min) lo = *s_min;
        if (s_max) hi = *s_max;
        return rsh::Interval{lo, hi};  // validates lo < hi
    }
};

// "-" means stdout; anything else is a file path.
void write_output(const std::string& out, const std::string& content) {
    if (out == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) throw rsh::invalid_params("cannot open output file: " + out);
    os << content;
    if (!os) throw rsh::invalid_params("failed writing output file: " + out);
}

rsh::CurveSamples read_csv_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw rsh::invalid_params("cannot open input file: " + path);
    return rsh::read_curve_csv(is);
}

int run_generate(const ParamArgs& pa, const GridArgs& ga, const std::string& out) {
    if (ga.n < 2) throw rsh::invalid_params("generate: need --n >= 2");
    const rsh::FamilyParams p = pa.resolve();
    const rsh::Interval dom = ga.resolve(p);
    const rsh::AnalyticCurve curve = rsh::make_rs_helix(p, dom);
    const rsh::CurveSamples samples =
        rsh::sample_curve(curve, rsh::uniform_grid(dom, ga.n));
    std::ostringstream os;
    rsh::write_curve_csv(os, samples);
    write_output(out, os.str());
    return 0;
}

int run_analyze(const std::string& in, const std::string& report_path,
                const rsh::Tolerances& tol) {
    const rsh::CurveSamples raw = read_csv_file(in);
    const rsh::SampledFrameEstimate est = rsh::estimate_frames(raw, tol);
    const rsh::ClassificationReport rep =
        rsh::classify_full(est.with_frames, tol, /*sampled_input=*/true);

    ordered_json j;
    j["rectifying_fit"] = {{"c1", rep.fit.c1_hat},
                           {"c2", rep.fit.c2_hat},
                           {"rms", rep.fit.rms_residual}};
    j["slant"] = {{"sigma_mean", rep.slant.sigma_mean},
                  {"max_dev", rep.slant.sigma_max_dev}};
    j["normal_leak_max"] = rep.normal_leak_max;
    j["verdict"] = rep.is_rectifying_slant_helix;
    write_output(report_path, j.dump(2) + "\n");
    return rep.is_rectifying_slant_helix ? 0 : 1;
}

int run_verify(const ParamArgs& pa, const GridArgs& ga, const std::string& report_path,
               const rsh::Tolerances& tol) {
    const rsh::FamilyParams p = pa.resolve();
    rsh::VerifyOptions opt;
    opt.s_min = ga.s_min.value_or(-3.0);
    opt.s_max = ga.s_max.value_or(3.0);
    opt.n = ga.n;
    opt.kappa_scale = env_real("RSH_KAPPA_SCALE", 1.0);
    const rsh::VerificationReport rep = rsh::run_family_verification(p, opt, tol);

    ordered_json j;
    j["provenance"] = {{"c1", p.c1},
                       {"c2", p.c2},
                       {"cos_theta", p.cos_theta},
                       {"s_min", rep.provenance.s_min},
                       {"s_max", rep.provenance.s_max},
                       {"n", rep.provenance.n},
                       {"backend", rep.provenance.backend},
                       {"tool_version", rep.provenance.tool_version},
                       {"kappa_scale", opt.kappa_scale}};
    ordered_json checks = ordered_json::array();
    for (const auto& e : rep.entries)
        checks.push_back({{"name", e.name},
                          {"residual", e.residual},
                          {"tolerance", e.tolerance},
                          {"pass", e.pass}});
    j["checks"] = checks;
    j["overall"] = rep.overall();
    write_output(report_path, j.dump(2) + "\n");
    return rep.overall() ? 0 : 1;
}

int run_indicatrix(const ParamArgs& pa, const GridArgs& ga, const std::string& which,
                   const std::string& out, const rsh::Tolerances& tol) {
    if (ga.n < 2) throw rsh::invalid_params("indicatrix: need --n >= 2");
    rsh::FrameVector fv;
    if (which == "tangent") fv = rsh::FrameVector::tangent;
    else if (which == "normal") fv = rsh::FrameVector::normal;
    else if (which == "binormal") fv = rsh::FrameVector::binormal;
    else throw rsh::invalid_params("--which must be tangent, normal, or binormal");

    const rsh::FamilyParams p = pa.resolve();
    const rsh::Interval dom = ga.resolve(p);
    const rsh::AnalyticCurve curve = rsh::make_rs_helix(p, dom);
    const rsh::SphericalTrace trace =
        rsh::indicatrix(curve, fv, rsh::uniform_grid(dom, ga.n), tol);
    std::ostringstream os;
    rsh::write_trace_csv(os, trace);
    write_output(out, os.str());
    return 0;
}

int run_plot(const std::string& in, const std::string& projection,
             std::optional<double> cone_slope_sq, const std::string& out) {
    const rsh::CurveSamples samples = read_csv_file(in);
    const rsh::Projection proj = rsh::parse_projection(projection);
    std::vector<rsh::Point2> pts;
    pts.reserve(samples.size());
    for (const rsh::Vec3& p : samples.p) pts.push_back(rsh::project(p, proj));
    rsh::SvgOptions opt;
    if (cone_slope_sq) {
        if (!(*cone_slope_sq > 0.0))
            throw rsh::invalid_params("--cone expects a positive squared slope");
        opt.cone_slope_sq = *cone_slope_sq;
    }
    std::ostringstream os;
    rsh::write_svg(os, pts, proj, opt);
    write_output(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rectifying slant helix toolkit"};
    app.set_version_flag("--version", rsh::kVersion);
    app.require_subcommand(1);

    ParamArgs gen_params, ver_params, ind_params;
    GridArgs gen_grid, ver_grid, ind_grid;
    std::string gen_out = "-", analyze_in, analyze_report = "-", verify_report = "-";
    std::string ind_which, ind_out = "-", plot_in, plot_proj, plot_out;
    std::optional<double> plot_cone;

    auto* gen = app.add_subcommand("generate", "emit a family member as CSV");
    gen_params.attach(gen);
    gen_grid.attach(gen, 1001);
    gen->add_option("--out", gen_out, "output path, - for stdout")->capture_default_str();

    auto* ana = app.add_subcommand("analyze", "classify a sampled curve CSV");
    ana->add_option("--in", analyze_in, "input CSV (s,x,y,z)")->required();
    ana->add_option("--report", analyze_report, "JSON report path, - for stdout")
        ->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run the closed-form invariant suite");
    ver_params.attach(ver);
    ver_grid.attach(ver, 1001);
    ver->add_option("--report", verify_report, "JSON report path, - for stdout")
        ->capture_default_str();

    auto* ind = app.add_subcommand("indicatrix", "emit a spherical frame trace as CSV");
    ind_params.attach(ind);
    ind_grid.attach(ind, 512);
    ind->add_option("--which", ind_which, "tangent | normal | binormal")->required();
    ind->add_option("--out", ind_out, "output path, - for stdout")->capture_default_str();

    auto* plt = app.add_subcommand("plot", "project a curve CSV to SVG");
    plt->add_option("--in", plot_in, "input CSV (s,x,y,z)")->required();
    plt->add_option("--projection", plot_proj, "xy | xz | yz")->required();
    plt->add_option("--cone", plot_cone,
                    "squared silhouette slope tan^2(theta) to draw (xz/yz only)");
    plt->add_option("--out", plot_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    try {
        const rsh::Tolerances tol = tolerances_from_env();
        if (gen->parsed()) return run_generate(gen_params, gen_grid, gen_out);
        if (ana->parsed()) return run_analyze(analyze_in, analyze_report, tol);
        if (ver->parsed()) return run_verify(ver_params, ver_grid, verify_report, tol);
        if (ind->parsed()) return run_indicatrix(ind_params, ind_grid, ind_which, ind_out, tol);
        if (plt->parsed()) return run_plot(plot_in, plot_proj, plot_cone, plot_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
