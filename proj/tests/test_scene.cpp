#include <doctest.h>

#include "cyclekit/scene.hpp"

using namespace cyclekit;

namespace {

const char* kBasicScene = R"(# demo
sigma -1
viewport -3 3 -3 3
samples 64
cycle unit 1 0 0 -1 color=#1f6feb
point origin 0 0
ghost-of unit
)";

}  // namespace

TEST_CASE("scene parsing") {
    const Scene scene = parse_scene(kBasicScene);
    CHECK(scene.sigma.elliptic());
    CHECK(scene.sigma_breve.elliptic());  // defaults to sigma
    CHECK(scene.elements.size() == 3);
    CHECK(scene.elements[0].name == "unit");
    CHECK(scene.elements[2].target == "unit");

    CHECK_THROWS_AS(parse_scene("sigma 2\n"), SceneError);
    CHECK_THROWS_AS(parse_scene("viewport 1 1 0 2\ncycle c 1 0 0 -1\n"), SceneError);
    CHECK_THROWS_AS(parse_scene("samples 8\n"), SceneError);
    CHECK_THROWS_AS(parse_scene("frobnicate 1\n"), SceneError);
}

TEST_CASE("rendering is deterministic") {
    const Scene scene = parse_scene(kBasicScene);
    const std::string a = render(scene);
    const std::string b = render(scene);
    CHECK(a == b);
    CHECK(a.find("<polyline") != std::string::npos);
    CHECK(a.find("<svg") == 0);
}

TEST_CASE("hex colors survive comment stripping") {
    const Scene scene = parse_scene("cycle c 1 0 0 -1 color=#d73a49  # trailing comment\n");
    REQUIRE(scene.elements.size() == 1);
    CHECK(scene.elements[0].style.color == "#d73a49");
}

TEST_CASE("unresolved references are reported") {
    const Scene scene = parse_scene("cycle a 1 0 0 -1\ns-ghost-of missing\n");
    CHECK_THROWS_AS(render(scene), SceneError);
}

TEST_CASE("curve sampling and conic classification") {
    Viewport vp;
    const auto circle = sample_cycle_curve(Cycle::unit_circle(), kElliptic, vp, 128);
    REQUIRE(!circle.empty());
    std::vector<Point> pts;
    for (const auto& piece : circle) pts.insert(pts.end(), piece.begin(), piece.end());
    double res = 0.0;
    CHECK(classify_conic(pts, &res) == -1);
    CHECK(res < 1e-9);

    const auto par = sample_cycle_curve(Cycle{1, 0, 0.5, 0}, kParabolic, vp, 128);
    pts.clear();
    for (const auto& piece : par) pts.insert(pts.end(), piece.begin(), piece.end());
    CHECK(classify_conic(pts, &res) == 0);

    const auto hyp = sample_cycle_curve(Cycle{1, 0, 0, 1}, kHyperbolic, vp, 128);
    pts.clear();
    for (const auto& piece : hyp) pts.insert(pts.end(), piece.begin(), piece.end());
    CHECK(classify_conic(pts, &res) == 1);
}

TEST_CASE("zero-radius grid renders in all nine variants") {
    for (int si : {-1, 0, 1})
        for (int bi : {-1, 0, 1}) {
            std::string text = "sigma " + std::to_string(si) + "\nsigma-breve " +
                               std::to_string(bi) +
                               "\nviewport -2 2 -2 2\nsamples 64\nzero-radius z 0.5 0.8\n";
            const std::string svg = render(parse_scene(text));
            CHECK(svg.find("<svg") == 0);
            CHECK(render(parse_scene(text)) == svg);
        }
}

TEST_CASE("nine-case zero-radius panel") {
    const std::string grid = render_zero_radius_grid({0.5, 0.8});
    CHECK(grid == render_zero_radius_grid({0.5, 0.8}));
    CHECK(grid.find("<svg") == 0);
    // nine marked base points, one per panel
    std::size_t marks = 0, at = 0;
    while ((at = grid.find("fill=\"#d73a49\"", at)) != std::string::npos) {
        ++marks;
        ++at;
    }
    CHECK(marks == 9);
}

TEST_CASE("orbit scenes carry their conic type") {
    for (int si : {-1, 0, 1}) {
        std::string text = "sigma " + std::to_string(si) +
                           "\nviewport -4 4 -4 4\nsamples 96\norbit k 0 1.3\n";
        const std::string svg = render(parse_scene(text));
        CHECK(svg.find("polyline") != std::string::npos);
    }
}
