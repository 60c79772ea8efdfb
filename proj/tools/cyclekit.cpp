#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclekit/hardy.hpp"
#include "cyclekit/jets.hpp"
#include "cyclekit/metric.hpp"
#include "cyclekit/orthogonality.hpp"
#include "cyclekit/scene.hpp"
#include "cyclekit/verify.hpp"

namespace {

using namespace cyclekit;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Dense text: first token is the order n, then n*n entries, each "re" or
// "re,im". Block text: terms J(k,re,im) joined by "+" (or unicode o-plus).
CMatrix read_matrix(const std::string& path) {
    std::string text = slurp(path);
    std::string stripped;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        stripped += text[i];
    }
    const auto jpos = stripped.find("J(");
    if (jpos != std::string::npos) {
        std::vector<CMatrix> blocks;
        std::size_t at = jpos;
        while ((at = stripped.find("J(", at)) != std::string::npos) {
            const auto close = stripped.find(')', at);
            if (close == std::string::npos) throw Error("unterminated block term");
            std::string body = stripped.substr(at + 2, close - at - 2);
            for (auto& ch : body)
                if (ch == ',') ch = ' ';
            std::istringstream in(body);
            int k;
            double re, im = 0.0;
            if (!(in >> k >> re)) throw Error("block term needs J(k, re[, im])");
            in >> im;
            if (k < 1) throw Error("block length must be positive");
            blocks.push_back(jordan_block(k, Complex(re, im)));
            at = close + 1;
        }
        return direct_sum(blocks);
    }
    for (auto& ch : stripped)
        if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
    std::istringstream in(stripped);
    int n;
    if (!(in >> n) || n < 1) throw Error("dense matrix file must start with the order");
    std::vector<double> nums;
    double v;
    while (in >> v) nums.push_back(v);
    CMatrix a = CMatrix::Zero(n, n);
    if (nums.size() == static_cast<std::size_t>(n) * n) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = nums[i * n + j];
    } else if (nums.size() == 2u * n * n) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = Complex(nums[2 * (i * n + j)], nums[2 * (i * n + j) + 1]);
    } else {
        throw Error("dense matrix file needs n*n real or n*n re,im entries");
    }
    return a;
}

int print_verdicts(const std::vector<verify::Verdict>& verdicts) {
    bool ok = true;
    for (const auto& v : verdicts) {
        std::printf("%-40s residual=%-12.4g tol=%-10.4g %s\n", v.name.c_str(), v.residual, v.tol,
                    v.pass ? "PASS" : "FAIL");
        ok = ok && v.pass;
    }
    return ok ? 0 : 1;
}

Sigma sigma_from_int(int v) { return Sigma(v); }

std::string spectrum_svg(const JetSpectrum& spec) {
    // oblique projection of the disk with one stem per spectral point,
    // stem height proportional to the jet order
    std::ostringstream out;
    const int w = 640, h = 480;
    const double cx = w * 0.5, cy = h * 0.72, R = 190.0, squash = 0.38, rise = 46.0;
    const auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
        << "\" height=\"" << h << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
    out << "<ellipse cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" rx=\"" << fmt(R)
        << "\" ry=\"" << fmt(R * squash)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.200000\"/>\n";
    for (const auto& p : spec.points) {
        const double x = cx + p.lambda.real() * R;
        const double y = cy - p.lambda.imag() * R * squash;
        const double top = y - rise * p.order;
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(top)
            << "\" stroke=\"#1f6feb\" stroke-width=\"2.000000\"/>\n";
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(top)
            << "\" r=\"4.000000\" fill=\"#1f6feb\"/>\n";
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"2.200000\" fill=\"#d73a49\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle geometry and jet-spectrum toolkit"};
    app.require_subcommand(1);

    // render
    auto* render_cmd = app.add_subcommand("render", "render a scene file to SVG");
    std::string scene_path, out_path = "out.svg";
    std::vector<double> grid_at;
    render_cmd->add_option("scene", scene_path, "scene file");
    render_cmd->add_option("-o,--output", out_path, "output SVG path");
    render_cmd
        ->add_option("--zero-radius-grid", grid_at,
                     "instead of a scene: 3x3 panel of the zero-radius cycle at u v")
        ->expected(2);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify::Options vopts;
    verify_cmd->add_option("suite", suite, "one of: moebius fscc orthogonality ghosts metric spectrum analytic")
        ->required();
    verify_cmd->add_option("--samples", vopts.samples, "main sample count override");
    verify_cmd->add_option("--seed", vopts.seed, "random seed");
    verify_cmd->add_option("--tol", vopts.tol, "main tolerance override");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "jet spectrum of a matrix file");
    std::string matrix_path, spectrum_svg_path;
    double spectrum_tol = 1e-7;
    spectrum_cmd->add_option("matrix", matrix_path, "dense or block-form matrix file")->required();
    spectrum_cmd->add_option("--svg", spectrum_svg_path, "also write a figure");
    spectrum_cmd->add_option("--tol", spectrum_tol, "eigenvalue clustering tolerance");

    // measure
    auto* measure_cmd = app.add_subcommand("measure", "distances, lengths, perpendicularity");
    int m_sigma = -1, m_breve = -1;
    double m_s = 1.0;
    std::string m_kind = "distance";
    std::vector<double> m_a, m_b, m_dir;
    measure_cmd->add_option("--sigma", m_sigma, "point-space unit: -1, 0, 1");
    measure_cmd->add_option("--sigma-breve", m_breve, "cycle-space unit: -1, 0, 1");
    measure_cmd->add_option("--s", m_s, "cycle-space sign");
    measure_cmd->add_option("--kind", m_kind, "distance | extremal | centre:-1|0|1 | focus");
    measure_cmd->add_option("--a", m_a, "first point: u v")->expected(2)->required();
    measure_cmd->add_option("--b", m_b, "second point: u v")->expected(2)->required();
    measure_cmd->add_option("--perp", m_dir, "also test perpendicularity to direction: du dv")
        ->expected(2);

    // analytic
    auto* analytic_cmd = app.add_subcommand("analytic", "recovery and convergence tables");
    long a_samples = 0;
    std::uint64_t a_seed = 20260809;
    analytic_cmd->add_option("--samples", a_samples, "sample count override");
    analytic_cmd->add_option("--seed", a_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*render_cmd) {
            std::string svg;
            if (grid_at.size() == 2) {
                svg = render_zero_radius_grid({grid_at[0], grid_at[1]});
            } else if (!scene_path.empty()) {
                svg = render(parse_scene(slurp(scene_path)));
            } else {
                std::fprintf(stderr, "render needs a scene file or --zero-radius-grid\n");
                return 2;
            }
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw Error("cannot write: " + out_path);
            out << svg;
            std::printf("wrote %s (%zu bytes)\n", out_path.c_str(), svg.size());
            return 0;
        }
        if (*verify_cmd) {
            std::vector<verify::Verdict> verdicts;
            try {
                verdicts = verify::run_suite(suite, vopts);
            } catch (const verify::UnknownSuiteError& e) {
                std::fprintf(stderr, "%s\n", e.what());
                return 2;
            }
            return print_verdicts(verdicts);
        }
        if (*spectrum_cmd) {
            const CMatrix a = read_matrix(matrix_path);
            const JetSpectrum spec = jet_spectrum(a, spectrum_tol);
            for (const auto& p : spec.points)
                std::printf("point % .12f % .12f %d\n", p.lambda.real(), p.lambda.imag(), p.order);
            if (!spectrum_svg_path.empty()) {
                std::ofstream out(spectrum_svg_path, std::ios::binary);
                if (!out) throw Error("cannot write: " + spectrum_svg_path);
                out << spectrum_svg(spec);
            }
            return 0;
        }
        if (*measure_cmd) {
            const Sigma sg = sigma_from_int(m_sigma);
            const FsccParams params(sigma_from_int(m_breve), m_s);
            const Point a{m_a[0], m_a[1]}, b{m_b[0], m_b[1]};
            LengthKind kind = LengthKind::distance();
            if (m_kind == "distance") {
                std::printf("distance_sq %.12g\n", distance_sq(a, b, sg));
            } else if (m_kind == "extremal") {
                std::printf("extremal_distance_sq %.12g\n",
                            extremal_distance_sq(a, b, sg, params));
            } else if (m_kind.rfind("centre:", 0) == 0) {
                kind = LengthKind::from_centre(sigma_from_int(std::stoi(m_kind.substr(7))));
                std::printf("length %.12g\n", length(a, b, kind, sg, params));
            } else if (m_kind == "focus") {
                kind = LengthKind::from_focus();
                std::printf("length %.12g\n", length(a, b, kind, sg, params));
            } else {
                std::fprintf(stderr, "unknown kind: %s\n", m_kind.c_str());
                return 2;
            }
            if (m_dir.size() == 2) {
                const bool perp =
                    is_perpendicular(a, b, {m_dir[0], m_dir[1]}, kind, sg, params);
                std::printf("perpendicular %s\n", perp ? "true" : "false");
            }
            return 0;
        }
        if (*analytic_cmd) {
            verify::Options aopts;
            aopts.samples = a_samples;
            aopts.seed = a_seed;
            return print_verdicts(verify::suite_analytic(aopts));
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
