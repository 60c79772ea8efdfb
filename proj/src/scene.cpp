#include "cyclekit/scene.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "cyclekit/orthogonality.hpp"

namespace cyclekit {

namespace {

Sigma parse_sigma(const std::string& tok) {
    if (tok == "-1") return kElliptic;
    if (tok == "0") return kParabolic;
    if (tok == "1" || tok == "+1") return kHyperbolic;
    throw SceneError("bad sigma value: " + tok);
}

bool parse_style_token(const std::string& tok, Style& style) {
    if (tok == "dash") {
        style.dashed = true;
        return true;
    }
    if (tok.rfind("color=", 0) == 0) {
        style.color = tok.substr(6);
        return true;
    }
    if (tok.rfind("width=", 0) == 0) {
        style.width = std::stod(tok.substr(6));
        return true;
    }
    return false;
}

double num(std::istringstream& in, const char* what) {
    double v;
    if (!(in >> v)) throw SceneError(std::string("expected a number for ") + what);
    return v;
}

std::string fmt(double v) {
    char buf[48];
    if (v == 0.0) v = 0.0;  // normalize -0
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

Scene parse_scene(const std::string& text) {
    Scene scene;
    bool breve_seen = false;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        // '#' opens a comment at line start or after whitespace; a '#' inside
        // a token (hex colors) is content
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
                line.erase(i);
                break;
            }
        }
        std::istringstream in(line);
        std::string head;
        if (!(in >> head)) continue;

        if (head == "sigma") {
            std::string tok;
            in >> tok;
            scene.sigma = parse_sigma(tok);
        } else if (head == "sigma-breve") {
            std::string tok;
            in >> tok;
            scene.sigma_breve = parse_sigma(tok);
            breve_seen = true;
        } else if (head == "s") {
            scene.s = num(in, "s");
            if (scene.s == 0.0) throw SceneError("s must be nonzero");
        } else if (head == "viewport") {
            scene.viewport.xmin = num(in, "viewport");
            scene.viewport.xmax = num(in, "viewport");
            scene.viewport.ymin = num(in, "viewport");
            scene.viewport.ymax = num(in, "viewport");
        } else if (head == "samples") {
            scene.samples = static_cast<int>(num(in, "samples"));
        } else if (head == "size") {
            scene.width_px = static_cast<int>(num(in, "size"));
            scene.height_px = static_cast<int>(num(in, "size"));
        } else if (head == "cycle" || head == "point" || head == "orbit" ||
                   head == "zero-radius" || head == "ghost-of" || head == "s-ghost-of") {
            SceneElement el;
            if (head == "cycle") {
                el.kind = SceneElement::Kind::cycle;
                in >> el.name;
                el.cycle = {num(in, "k"), num(in, "l"), num(in, "n"), num(in, "m")};
            } else if (head == "point") {
                el.kind = SceneElement::Kind::point;
                in >> el.name;
                el.point = {num(in, "u"), num(in, "v")};
            } else if (head == "orbit") {
                el.kind = SceneElement::Kind::orbit;
                in >> el.name;
                el.point = {num(in, "u"), num(in, "v")};
            } else if (head == "zero-radius") {
                el.kind = SceneElement::Kind::zero_radius;
                in >> el.name;
                el.point = {num(in, "u"), num(in, "v")};
            } else {
                el.kind = head == "ghost-of" ? SceneElement::Kind::ghost_of
                                             : SceneElement::Kind::s_ghost_of;
                in >> el.target;
                if (el.target.empty()) throw SceneError(head + " needs a target name");
                el.style.dashed = true;
            }
            std::string tok;
            while (in >> tok) {
                if (el.kind == SceneElement::Kind::orbit && tok.rfind("count=", 0) == 0) {
                    el.orbit_count = std::stoi(tok.substr(6));
                    continue;
                }
                if (!parse_style_token(tok, el.style))
                    throw SceneError("unknown attribute: " + tok);
            }
            scene.elements.push_back(std::move(el));
        } else {
            throw SceneError("unknown scene directive: " + head);
        }
    }
    if (!breve_seen) scene.sigma_breve = scene.sigma;
    if (!(scene.viewport.xmin < scene.viewport.xmax) ||
        !(scene.viewport.ymin < scene.viewport.ymax))
        throw SceneError("empty viewport");
    if (scene.samples < 32) throw SceneError("samples must be at least 32");
    return scene;
}

std::vector<std::vector<Point>> sample_cycle_curve(const Cycle& cy, Sigma sigma,
                                                   const Viewport& vp, int samples) {
    std::vector<std::vector<Point>> pieces;
    const double span = std::max(vp.width(), vp.height());
    const double margin = 0.25 * span;
    const auto inside = [&](const Point& p) {
        return p.u >= vp.xmin - margin && p.u <= vp.xmax + margin && p.v >= vp.ymin - margin &&
               p.v <= vp.ymax + margin;
    };
    const auto add_param = [&](const auto& f, double t0, double t1) {
        std::vector<Point> piece;
        for (int i = 0; i <= samples; ++i) {
            const Point p = f(t0 + (t1 - t0) * i / samples);
            if (std::isfinite(p.u) && std::isfinite(p.v) && inside(p)) {
                piece.push_back(p);
            } else if (!piece.empty()) {
                pieces.push_back(std::move(piece));
                piece.clear();
            }
        }
        if (!piece.empty()) pieces.push_back(std::move(piece));
    };
    const auto add_segment = [&](const Point& base, double du, double dv) {
        // Straight line through base with direction (du, dv), clipped by length.
        const double len = std::hypot(du, dv);
        const double reach = 1.5 * span;
        add_param(
            [&](double t) {
                return Point{base.u + t * du / len * reach, base.v + t * dv / len * reach};
            },
            -1.0, 1.0);
    };

    const Cycle c = normalize(cy);
    if (std::abs(c.k) < 1e-12) {
        if (c.l == 0.0 && c.n == 0.0) return pieces;  // empty or whole plane
        const double d = c.l * c.l + c.n * c.n;
        const Point base{c.m * c.l / (2.0 * d), c.m * c.n / (2.0 * d)};
        add_segment(base, -c.n, c.l);
        return pieces;
    }

    const double u0 = c.l / c.k;
    const double coeff_scale =
        (c.l * c.l + c.n * c.n + std::abs(c.m * c.k)) / (c.k * c.k) + 1.0;
    if (sigma.elliptic()) {
        const double v0 = c.n / c.k;
        const double r2 = (c.l * c.l + c.n * c.n - c.m * c.k) / (c.k * c.k);
        if (r2 < 1e-12 * coeff_scale) {
            // a point for vanishing radius, nothing for an imaginary one
            if (r2 > -1e-12 * coeff_scale) pieces.push_back({Point{u0, v0}});
            return pieces;
        }
        const double r = std::sqrt(r2);
        add_param(
            [&](double t) {
                return Point{u0 + r * std::cos(2.0 * M_PI * t), v0 + r * std::sin(2.0 * M_PI * t)};
            },
            0.0, 1.0);
        // close the loop visually
        return pieces;
    }
    if (sigma.parabolic()) {
        if (std::abs(c.n) < 1e-12) {
            std::array<double, 2> roots{};
            const int cnt = real_roots(c, roots);
            for (int i = 0; i < cnt; ++i) add_segment(Point{roots[i], 0.0}, 0.0, 1.0);
            return pieces;
        }
        const double reach = std::max(std::abs(vp.xmin - u0), std::abs(vp.xmax - u0)) + margin;
        add_param(
            [&](double t) {
                const double u = u0 + t * reach;
                return Point{u, (c.k * u * u - 2.0 * c.l * u + c.m) / (2.0 * c.n)};
            },
            -1.0, 1.0);
        return pieces;
    }

    // hyperbolic drawing: (u-u0)^2 - (v-v0)^2 = R
    const double v0 = -c.n / c.k;
    const double R = (c.l * c.l - c.n * c.n - c.m * c.k) / (c.k * c.k);
    if (std::abs(R) < 1e-12 * coeff_scale) {
        add_segment(Point{u0, v0}, 1.0, 1.0);
        add_segment(Point{u0, v0}, 1.0, -1.0);
        return pieces;
    }
    const double r = std::sqrt(std::abs(R));
    const double tmax = std::acosh(std::max(2.0, (1.5 * span + margin) / r));
    for (int branch : {-1, 1}) {
        if (R > 0.0) {
            add_param(
                [&](double t) {
                    return Point{u0 + branch * r * std::cosh(t), v0 + r * std::sinh(t)};
                },
                -tmax, tmax);
        } else {
            add_param(
                [&](double t) {
                    return Point{u0 + r * std::sinh(t), v0 + branch * r * std::cosh(t)};
                },
                -tmax, tmax);
        }
    }
    return pieces;
}

int classify_conic(const std::vector<Point>& pts, double* residual) {
    if (pts.size() < 6) throw Error("need at least six points to classify");
    Eigen::MatrixXd design(pts.size(), 6);
    double scale = 1e-30;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double u = pts[i].u, v = pts[i].v;
        design(static_cast<int>(i), 0) = u * u;
        design(static_cast<int>(i), 1) = u * v;
        design(static_cast<int>(i), 2) = v * v;
        design(static_cast<int>(i), 3) = u;
        design(static_cast<int>(i), 4) = v;
        design(static_cast<int>(i), 5) = 1.0;
        scale = std::max(scale, std::abs(u) + std::abs(v));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
    const Eigen::VectorXd coef = svd.matrixV().col(5);
    if (residual)
        *residual = svd.singularValues()(5) /
                    (std::sqrt(static_cast<double>(pts.size())) * scale * scale);
    const double disc = coef(1) * coef(1) - 4.0 * coef(0) * coef(2);
    const double magnitude = coef.head(3).cwiseAbs().maxCoeff();
    if (std::abs(disc) < 1e-8 * magnitude * magnitude) return 0;
    return disc > 0.0 ? 1 : -1;
}

std::string render_zero_radius_grid(const Point& p, int panel_px) {
    // rows: cycle-space unit; columns: drawing unit
    std::ostringstream out;
    const int w = 3 * panel_px, h = 3 * panel_px;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) {
            Scene cell;
            cell.sigma = Sigma(col - 1);
            cell.sigma_breve = Sigma(row - 1);
            cell.s = 1.0;
            cell.samples = 128;
            cell.width_px = cell.height_px = panel_px;
            const double reach = 2.0 + std::max(std::abs(p.u), std::abs(p.v));
            cell.viewport = {p.u - reach, p.u + reach, p.v - reach, p.v + reach};
            SceneElement z;
            z.kind = SceneElement::Kind::zero_radius;
            z.name = "z";
            z.point = p;
            z.style.color = "#6f42c1";
            z.style.width = 1.5;
            cell.elements.push_back(z);
            SceneElement mark;
            mark.kind = SceneElement::Kind::point;
            mark.name = "p";
            mark.point = p;
            mark.style.color = "#d73a49";
            cell.elements.push_back(mark);

            const std::string inner = render(cell);
            // strip the inner document wrapper, keep the drawable content
            const auto start = inner.find('\n') + 1;
            const auto stop = inner.rfind("</svg>");
            out << "<g transform=\"translate(" << fmt(col * panel_px) << ","
                << fmt(row * panel_px) << ")\">\n";
            out << inner.substr(start, stop - start);
            out << "</g>\n";
        }
    }
    // panel separators
    for (int i = 1; i < 3; ++i) {
        out << "<line x1=\"" << fmt(i * panel_px) << "\" y1=\"0.000000\" x2=\""
            << fmt(i * panel_px) << "\" y2=\"" << fmt(h)
            << "\" stroke=\"#888888\" stroke-width=\"1.000000\"/>\n";
        out << "<line x1=\"0.000000\" y1=\"" << fmt(i * panel_px) << "\" x2=\"" << fmt(w)
            << "\" y2=\"" << fmt(i * panel_px)
            << "\" stroke=\"#888888\" stroke-width=\"1.000000\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render(const Scene& scene) {
    const Viewport& vp = scene.viewport;
    const double sx = scene.width_px / vp.width();
    const double sy = scene.height_px / vp.height();
    const auto px = [&](const Point& p) {
        return std::pair<double, double>((p.u - vp.xmin) * sx, (vp.ymax - p.v) * sy);
    };

    std::map<std::string, Cycle> named;
    const auto resolve = [&](const std::string& target) {
        const auto it = named.find(target);
        if (it == named.end()) throw SceneError("unresolved reference: " + target);
        return it->second;
    };
    // Collect names first so ghosts may reference later elements too.
    for (const auto& el : scene.elements) {
        if (el.kind == SceneElement::Kind::cycle && !el.name.empty()) named[el.name] = el.cycle;
        if (el.kind == SceneElement::Kind::zero_radius && !el.name.empty())
            named[el.name] = zero_radius_at(el.point, scene.params());
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << scene.width_px
        << "\" height=\"" << scene.height_px << "\" viewBox=\"0 0 " << scene.width_px << " "
        << scene.height_px << "\">\n";
    out << "<rect width=\"" << scene.width_px << "\" height=\"" << scene.height_px
        << "\" fill=\"#ffffff\"/>\n";

    // axes
    if (vp.ymin < 0.0 && vp.ymax > 0.0) {
        const auto [x0, y0] = px({vp.xmin, 0.0});
        const auto [x1, y1] = px({vp.xmax, 0.0});
        out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
            << "\" y2=\"" << fmt(y1) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.8\"/>\n";
    }
    if (vp.xmin < 0.0 && vp.xmax > 0.0) {
        const auto [x0, y0] = px({0.0, vp.ymin});
        const auto [x1, y1] = px({0.0, vp.ymax});
        out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
            << "\" y2=\"" << fmt(y1) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.8\"/>\n";
    }

    const auto emit_polyline = [&](const std::vector<Point>& piece, const Style& style) {
        if (piece.size() < 2) return;
        out << "<polyline fill=\"none\" stroke=\"" << style.color << "\" stroke-width=\""
            << fmt(style.width) << "\"";
        if (style.dashed) out << " stroke-dasharray=\"6 4\"";
        out << " points=\"";
        for (std::size_t i = 0; i < piece.size(); ++i) {
            const auto [x, y] = px(piece[i]);
            if (i) out << ' ';
            out << fmt(x) << ',' << fmt(y);
        }
        out << "\"/>\n";
    };
    const auto emit_dot = [&](const Point& p, const Style& style) {
        const auto [x, y] = px(p);
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3.000000\" fill=\""
            << style.color << "\"/>\n";
    };
    const auto emit_cycle = [&](const Cycle& c, const Style& style) {
        for (const auto& piece : sample_cycle_curve(c, scene.sigma, vp, scene.samples)) {
            if (piece.size() == 1)
                emit_dot(piece[0], style);
            else
                emit_polyline(piece, style);
        }
    };

    for (const auto& el : scene.elements) {
        switch (el.kind) {
            case SceneElement::Kind::cycle:
                emit_cycle(el.cycle, el.style);
                break;
            case SceneElement::Kind::zero_radius:
                emit_cycle(zero_radius_at(el.point, scene.params()), el.style);
                break;
            case SceneElement::Kind::point:
                emit_dot(el.point, el.style);
                break;
            case SceneElement::Kind::orbit: {
                const int count = el.orbit_count > 0 ? el.orbit_count : scene.samples;
                std::vector<double> phis(count);
                for (int i = 0; i < count; ++i)
                    phis[i] = -M_PI / 2 + M_PI * (i + 0.5) / count;
                const auto orbit = k_orbit({el.point.u, el.point.v, scene.sigma}, phis);
                std::vector<Point> piece;
                for (const auto& z : orbit) {
                    if (z && std::isfinite(z->re) && std::isfinite(z->im) &&
                        std::abs(z->re) < 1e3 && std::abs(z->im) < 1e3) {
                        piece.push_back({z->re, z->im});
                    } else if (!piece.empty()) {
                        emit_polyline(piece, el.style);
                        piece.clear();
                    }
                }
                emit_polyline(piece, el.style);
                break;
            }
            case SceneElement::Kind::ghost_of:
                emit_cycle(ghost(resolve(el.target), scene.sigma, scene.params()), el.style);
                break;
            case SceneElement::Kind::s_ghost_of:
                emit_cycle(s_ghost(resolve(el.target), scene.sigma, scene.params()), el.style);
                break;
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace cyclekit
