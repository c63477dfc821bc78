#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "rsh/csv.hpp"
#include "rsh/family.hpp"
#include "rsh/samples.hpp"
#include "rsh/svg.hpp"

using rsh::AnalyticCurve;
using rsh::CurveSamples;
using rsh::FamilyParams;
using rsh::Interval;
using rsh::Vec3;

namespace {

AnalyticCurve example_one(Interval dom = {-3.0, 3.0}) {
    return rsh::make_rs_helix(FamilyParams::from_cos_theta(1.0, 0.0, 1.0 / 3.0), dom);
}

// pull the payload of points="..." out of an SVG document
std::vector<rsh::Point2> parse_svg_points(const std::string& svg) {
    const std::string key = "points=\"";
    const size_t start = svg.find(key);
    REQUIRE(start != std::string::npos);
    const size_t end = svg.find('"', start + key.size());
    REQUIRE(end != std::string::npos);
    std::string payload = svg.substr(start + key.size(), end - start - key.size());

    std::vector<rsh::Point2> pts;
    std::istringstream is(payload);
    std::string pair;
    while (is >> pair) {
        const size_t comma = pair.find(',');
        REQUIRE(comma != std::string::npos);
        pts.push_back({rsh::parse_double(pair.substr(0, comma)),
                       rsh::parse_double(pair.substr(comma + 1))});
    }
    return pts;
}

}  // namespace

TEST_CASE("uniform grids hit both endpoints exactly") {
    const auto g = rsh::uniform_grid(-0.3, 2.7, 11);
    REQUIRE(g.size() == 11);
    CHECK(g.front() == -0.3);
    CHECK(g.back() == 2.7);
    for (size_t i = 0; i + 1 < g.size(); ++i)
        CHECK(g[i + 1] - g[i] == Catch::Approx(0.3).margin(1e-15));

    const auto g2 = rsh::uniform_grid(Interval{0.0, 1.0}, 2);
    CHECK(g2 == std::vector<double>{0.0, 1.0});

    CHECK_THROWS_AS(rsh::uniform_grid(0.0, 1.0, 1), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::uniform_grid(1.0, 1.0, 5), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::uniform_grid(2.0, 1.0, 5), rsh::invalid_params);
}

TEST_CASE("sampling a curve records positions and, on request, frames") {
    const AnalyticCurve curve = example_one();
    const auto grid = rsh::uniform_grid(-2.0, 2.0, 33);

    const auto bare = rsh::sample_curve(curve, grid);
    REQUIRE(bare.size() == grid.size());
    CHECK_FALSE(bare.has_frames());
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(bare.p[i] == curve.evaluate(grid[i], 0));

    const auto framed = rsh::sample_curve(curve, grid, true);
    REQUIRE(framed.has_frames());
    REQUIRE(framed.frames.size() == grid.size());
    CHECK(framed.frames[16].kappa == Catch::Approx(2.0 * std::sqrt(2.0)).margin(1e-12));

    // unit-speed data never lets a chord outrun arc length
    CHECK(rsh::max_chord_excess(framed) <= 0.0);

    CurveSamples jump;
    jump.s = {0.0, 1.0};
    jump.p = {Vec3{0.0, 0.0, 0.0}, Vec3{2.0, 0.0, 0.0}};
    CHECK(rsh::max_chord_excess(jump) == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("frame estimation from positions alone tracks the closed form") {
    const AnalyticCurve curve = example_one();
    const auto p = FamilyParams::from_cos_theta(1.0, 0.0, 1.0 / 3.0);
    const auto samples = rsh::sample_curve(curve, rsh::uniform_grid(-3.0, 3.0, 1001));

    const auto est = rsh::estimate_frames(samples);
    REQUIRE(est.usable.size() >= 3);
    REQUIRE(est.with_frames.size() == est.usable.size());
    REQUIRE(est.with_frames.has_frames());

    for (size_t q = 0; q < est.usable.size(); ++q) {
        const double s = est.with_frames.s[q];
        const auto ref = rsh::closed_form_kappa_tau(p, s);
        const auto& ap = est.with_frames.frames[q];
        CHECK(ap.kappa == Catch::Approx(ref.kappa).margin(1e-6));
        CHECK(ap.tau == Catch::Approx(ref.tau).margin(1e-6));
        CHECK(rsh::norm(ap.t - rsh::frenet_at(curve, s).t) < 1e-6);
        CHECK(ap.sigma == Catch::Approx(p.sigma_constant()).margin(1e-4));
    }

    // indices refer into the original arrays and stay strictly increasing
    for (size_t q = 0; q + 1 < est.usable.size(); ++q)
        CHECK(est.usable[q] < est.usable[q + 1]);
    CHECK(est.usable.front() >= 0);
    CHECK(est.usable.back() < static_cast<int>(samples.size()));
}

TEST_CASE("frame estimation rejects grids it cannot difference") {
    const AnalyticCurve curve = example_one();

    auto six = rsh::sample_curve(curve, rsh::uniform_grid(-1.0, 1.0, 6));
    CHECK_THROWS_AS(rsh::estimate_frames(six), rsh::insufficient_samples);

    auto warped = rsh::sample_curve(curve, rsh::uniform_grid(-1.0, 1.0, 9));
    warped.s[4] += 0.05;
    CHECK_THROWS_AS(rsh::estimate_frames(warped), rsh::invalid_params);

    auto folded = rsh::sample_curve(curve, rsh::uniform_grid(-1.0, 1.0, 9));
    folded.s[4] = folded.s[2];
    CHECK_THROWS_AS(rsh::estimate_frames(folded), rsh::invalid_params);
}

TEST_CASE("curve CSV round trips bit for bit") {
    const AnalyticCurve curve = example_one();
    const auto samples = rsh::sample_curve(curve, rsh::uniform_grid(-2.9, 2.9, 17));

    std::ostringstream out;
    rsh::write_curve_csv(out, samples);
    const std::string text = out.str();
    CHECK(text.rfind("s,x,y,z\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);

    std::istringstream in(text);
    const auto back = rsh::read_curve_csv(in);
    REQUIRE(back.size() == samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        CHECK(back.s[i] == samples.s[i]);
        CHECK(back.p[i] == samples.p[i]);
    }
}

TEST_CASE("trace CSV uses the unit-vector header") {
    rsh::SphericalTrace trace;
    trace.s = {0.0, 1.0};
    trace.points = {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}};
    std::ostringstream out;
    rsh::write_trace_csv(out, trace);
    CHECK(out.str() == "s,ux,uy,uz\n0,1,0,0\n1,0,1,0\n");
}

TEST_CASE("CSV reader accepts CR endings and blank lines, nothing else") {
    {
        std::istringstream in("s,x,y,z\r\n0,1,2,3\r\n\r\n0.5,4,5,6\r\n");
        const auto got = rsh::read_curve_csv(in);
        REQUIRE(got.size() == 2);
        CHECK(got.s[1] == 0.5);
        CHECK(got.p[0] == Vec3{1.0, 2.0, 3.0});
    }
    auto reject = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(rsh::read_curve_csv(in), rsh::invalid_params);
    };
    reject("");
    reject("x,y,z,s\n0,1,2,3\n");
    reject("s,x,y,z\n0,1,2\n");
    reject("s,x,y,z\n0,1,2,3,4\n");
    reject("s,x,y,z\n0,one,2,3\n");
    reject("s,x,y,z\n0,1,2,3\n0,4,5,6\n");    // s stalls
    reject("s,x,y,z\n1,1,2,3\n0,4,5,6\n");    // s decreases
}

TEST_CASE("doubles survive the text format unchanged") {
    for (double x : {0.0, -0.0, 1.0 / 3.0, 0.1, 1e300, 5e-324, -2.5e-17, 123456789.123456789,
                     2.0 * std::sqrt(2.0)}) {
        CHECK(rsh::parse_double(rsh::format_double(x)) == x);
    }
    CHECK(rsh::format_double(0.5) == "0.5");

    CHECK_THROWS_AS(rsh::parse_double("abc"), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::parse_double("1.2.3"), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::parse_double(""), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::parse_double(" 1"), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::parse_double("inf"), rsh::invalid_params);
    CHECK_THROWS_AS(rsh::parse_double("nan"), rsh::invalid_params);
}

TEST_CASE("SVG output keeps data coordinates recoverable") {
    const AnalyticCurve curve = example_one();
    const auto samples = rsh::sample_curve(curve, rsh::uniform_grid(-3.0, 3.0, 100));
    std::vector<rsh::Point2> pts;
    for (const Vec3& p : samples.p) pts.push_back(rsh::project(p, rsh::Projection::xz));

    rsh::SvgOptions opt;
    opt.cone_slope_sq = 8.0;
    std::ostringstream out;
    rsh::write_svg(out, pts, rsh::Projection::xz, opt);
    const std::string svg = out.str();

    CHECK(svg.find("viewBox=\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // two silhouette lines for a side view with a cone
    CHECK(svg.find("<line") != svg.rfind("<line"));

    const auto parsed = parse_svg_points(svg);
    REQUIRE(parsed.size() == pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(parsed[i].a == pts[i].a);      // horizontal axis is verbatim
        CHECK(parsed[i].b == -pts[i].b);     // vertical axis flipped, exactly
    }
}

TEST_CASE("SVG edge cases: top view, single point, no points") {
    rsh::SvgOptions opt;
    opt.cone_slope_sq = 8.0;

    // the cone silhouette only makes sense from the side
    std::ostringstream top;
    rsh::write_svg(top, {{0.0, 0.0}, {1.0, 1.0}}, rsh::Projection::xy, opt);
    CHECK(top.str().find("<line") == std::string::npos);

    std::ostringstream lone;
    rsh::write_svg(lone, {{0.25, -0.5}}, rsh::Projection::xy);
    CHECK(lone.str().find("<polyline") != std::string::npos);
    CHECK(parse_svg_points(lone.str()).size() == 1);

    std::ostringstream empty;
    CHECK_THROWS_AS(rsh::write_svg(empty, {}, rsh::Projection::xy), rsh::empty_trace);
}
