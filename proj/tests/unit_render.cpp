#include <doctest.h>

#include <mutex>
#include <set>
#include <sstream>

#include "tropsand/config.hpp"
#include "tropsand/relax.hpp"
#include "tropsand/render.hpp"
#include "tropsand/sweep.hpp"

using namespace tropsand;

namespace {

LatticePolygon unit_square() { return validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("palette names") {
    CHECK(parse_palette("mono") == Palette::Mono);
    CHECK(parse_palette("color") == Palette::Color);
    CHECK_THROWS_AS(parse_palette("sepia"), std::invalid_argument);
}

TEST_CASE("all-3 grid renders blank") {
    const auto s = max_stable(make_domain(unit_square(), 20));
    RenderOptions opts;
    opts.cell = 4;
    RenderSummary sum;
    const auto img = render_raster(s, opts, &sum);
    CHECK(sum.width_cells == 21 + 2 * opts.margin);
    CHECK(sum.height_cells == 21 + 2 * opts.margin);
    CHECK(img.width == sum.width_cells * 4);
    CHECK(img.height == sum.height_cells * 4);
    CHECK(img.pixels.size() == static_cast<std::size_t>(img.width * img.height * 3));
    // background inside, margin outside: at most two colours
    std::set<std::array<std::uint8_t, 3>> colours;
    for (std::size_t i = 0; i < img.pixels.size(); i += 3) colours.insert({img.pixels[i], img.pixels[i + 1], img.pixels[i + 2]});
    CHECK(colours.size() <= 2);
    CHECK(sum.marks == MarkCounts{0, 0, 0, 21 * 21, 0});
    const auto svg = render_svg(s, opts);
    CHECK(count(svg, "class=\"mark") == 0);

    std::stringstream ppm;
    write_ppm(ppm, img);
    const auto bytes = ppm.str();
    CHECK(bytes.rfind("P6\n", 0) == 0);
    CHECK(bytes.size() == img.pixels.size() + ("P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n").size());
}

TEST_CASE("svg marks match the height histogram") {
    const auto d = make_domain(unit_square(), 48);
    auto s = perturb(max_stable(d), PerturbationConfig(unit_square(), {{Coordinate(Rational(1, 2)), Coordinate(Rational(1, 3))}}));
    s.at_site({5, 5}) = 6;  // one unstable site, drawn as a disc
    s.at_site({6, 5}) = 0;
    const auto hist = height_histogram(s);
    for (auto palette : {Palette::Mono, Palette::Color}) {
        RenderOptions opts;
        opts.palette = palette;
        RenderSummary sum;
        const auto svg = render_svg(s, opts, &sum);
        CHECK(sum.marks == hist);
        CHECK(count(svg, "class=\"mark h0\"") == hist[0]);
        CHECK(count(svg, "class=\"mark h1\"") == hist[1]);
        CHECK(count(svg, "class=\"mark h2\"") == hist[2]);
        CHECK(count(svg, "class=\"mark h4\"") == hist[4]);
    }
    const auto r = relax_queue(s).final;
    const auto h = height_histogram(r);
    CHECK(h[0] + h[1] + h[2] + h[3] + h[4] == r.size());
    CHECK(h[4] == 0);
}

TEST_CASE("overlay labels the weight-2 edges") {
    const auto poly = validate_polygon({{0, 0}, {2, 1}, {1, 3}, {-1, 2}});
    std::optional<SandState> final_state;
    std::mutex m;
    SweepOptions o;
    o.run_probe = false;
    o.on_relaxed = [&](std::int64_t, const RelaxationResult& r) {
        std::lock_guard lock(m);
        final_state = r.final;
    };
    const auto report = convergence_sweep(poly, {{Coordinate(Rational(1, 2)), Coordinate(Rational(3, 2))}}, {64}, o);
    REQUIRE(report.records[0].ok);
    REQUIRE(final_state);
    RenderOptions opts;
    opts.overlay = report.records[0].curve->curve();
    opts.weights = report.records[0].weights;
    RenderSummary sum;
    const auto svg = render_svg(*final_state, opts, &sum);
    CHECK(sum.labels == std::vector<std::string>{"2", "2", "2", "2"});
    CHECK(count(svg, "class=\"weight\"") == 4);
    CHECK(count(svg, "class=\"edge\"") == report.records[0].curve->curve().edges().size());
    RenderSummary raster;
    render_raster(*final_state, opts, &raster);
    CHECK(raster.labels == sum.labels);
}
