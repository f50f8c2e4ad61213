#include "geography.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "errors.hpp"

namespace geolab::geography {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<Int> parse_list(const std::string& text, const std::string& where) {
    std::vector<Int> values;
    if (text.empty()) return values;
    for (const auto& item : split(text, ',')) {
        try {
            values.push_back(parse_int(item));
        } catch (const std::domain_error& e) {
            throw std::domain_error(where + ": " + e.what());
        }
    }
    return values;
}

std::string tuple_name(const families::FamilyParams& params) {
    return families::variant_name(params.variant) + " " + to_string(params.alpha) + " " + to_string(params.beta) +
           " " + to_string(params.d) + " " + to_string(params.p);
}

// ---- chart -----------------------------------------------------------------

// plot rectangle inside the 1000x800 canvas
constexpr double kLeft = 90.0, kRight = 970.0, kTop = 40.0, kBottom = 730.0;

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Tick label: plain for small values, two-digit mantissa + exponent for big.
std::string fmt_axis(double v) {
    if (v == 0.0) return "0";
    double k = std::floor(std::log10(v));
    char buf[48];
    if (k >= 7.0) {
        double mant = v / std::pow(10.0, k);
        std::snprintf(buf, sizeof buf, "%.2fe%d", mant, static_cast<int>(k));
    } else if (v == std::floor(v)) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.2f", v);
    }
    return buf;
}

struct Window {
    double x0, x1, y0, y1;  // in transformed (possibly log10) data coordinates
};

struct Mapper {
    Window w;
    double px(double tx) const { return kLeft + (tx - w.x0) / (w.x1 - w.x0) * (kRight - kLeft); }
    double py(double ty) const { return kBottom - (ty - w.y0) / (w.y1 - w.y0) * (kBottom - kTop); }
};

void add_line(std::string& svg, const Mapper& map, double tx0, double ty0, double tx1, double ty1,
              const std::string& color, const std::string& dash) {
    svg += "<line x1=\"" + fmt2(map.px(tx0)) + "\" y1=\"" + fmt2(map.py(ty0)) + "\" x2=\"" + fmt2(map.px(tx1)) +
           "\" y2=\"" + fmt2(map.py(ty1)) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\" stroke-dasharray=\"" +
           dash + "\"/>\n";
}

void add_end_label(std::string& svg, const Mapper& map, double tx, double ty, const std::string& text,
                   const std::string& color) {
    svg += "<text x=\"" + fmt2(map.px(tx) - 6.0) + "\" y=\"" + fmt2(map.py(ty) - 8.0) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"13\" fill=\"" + color + "\">" + text +
           "</text>\n";
}

}  // namespace

SubGrid parse_subgrid(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() != 5)
        throw std::domain_error("grid block '" + text + "': expected variant:alphas:betas:ds:ps");
    SubGrid grid;
    grid.variant = families::parse_variant(parts[0]);
    grid.alphas = parse_list(parts[1], "grid alphas");
    grid.betas = parse_list(parts[2], "grid betas");
    grid.ds = parse_list(parts[3], "grid ds");
    grid.ps = parse_list(parts[4], "grid ps");
    return grid;
}

std::vector<SubGrid> parse_grid(const std::string& text) {
    std::vector<SubGrid> grids;
    if (text.empty()) return grids;
    for (const auto& block : split(text, ';')) grids.push_back(parse_subgrid(block));
    return grids;
}

std::vector<families::FamilyParams> expand(const std::vector<SubGrid>& grids) {
    std::vector<families::FamilyParams> tuples;
    for (const auto& grid : grids)
        for (const auto& alpha : grid.alphas)
            for (const auto& beta : grid.betas)
                for (const auto& d : grid.ds)
                    for (const auto& p : grid.ps) {
                        families::FamilyParams params{grid.variant, alpha, beta, d, p};
                        try {
                            families::validate_params(params);
                        } catch (const std::domain_error& e) {
                            throw std::domain_error("grid tuple (" + tuple_name(params) + "): " + e.what());
                        }
                        tuples.push_back(params);
                    }
    return tuples;
}

std::vector<GridPoint> compute_points(const std::vector<families::FamilyParams>& tuples) {
    std::vector<GridPoint> points;
    points.reserve(tuples.size());
    for (const auto& params : tuples) {
        families::FamilyReport report = families::build_family(params);
        if (!report.all_checks_pass)
            for (const auto& check : report.checks)
                if (!check.pass)
                    throw identity_error("family (" + tuple_name(params) + ") failed check '" + check.name + "'");
        points.push_back(GridPoint{report.params, report.invariants, report.limit, report.slope_gap});
    }
    return points;
}

std::string to_csv(const std::vector<GridPoint>& points) {
    std::string out = "variant,alpha,beta,d,p,c2,c1sq,slope\n";
    for (const auto& pt : points) {
        out += families::variant_name(pt.params.variant) + "," + to_string(pt.params.alpha) + "," +
               to_string(pt.params.beta) + "," + to_string(pt.params.d) + "," + to_string(pt.params.p) + "," +
               to_string(pt.invariants.c2) + "," + to_string(pt.invariants.c1sq) + "," +
               decimal_string(pt.invariants.slope, 6) + "\n";
    }
    return out;
}

std::string to_svg(const std::vector<GridPoint>& points, const ChartOptions& options) {
    const bool loglog = options.loglog;

    // Transformed data coordinates: identity for linear, log10 for log-log.
    std::vector<double> txs, tys;
    txs.reserve(points.size());
    tys.reserve(points.size());
    for (const auto& pt : points) {
        if (loglog && (pt.invariants.c2 <= 0 || pt.invariants.c1sq <= 0))
            throw std::domain_error("log-log chart requires positive Chern numbers");
        double x = pt.invariants.c2.convert_to<double>();
        double y = pt.invariants.c1sq.convert_to<double>();
        txs.push_back(loglog ? std::log10(x) : x);
        tys.push_back(loglog ? std::log10(y) : y);
    }

    Window w{};
    if (points.empty()) {
        w = loglog ? Window{0.0, 2.0, 0.0, 3.0} : Window{0.0, 100.0, 0.0, 300.0};
    } else if (loglog) {
        double xmin = txs[0], xmax = txs[0], ymin = tys[0], ymax = tys[0];
        for (std::size_t i = 1; i < txs.size(); ++i) {
            xmin = std::min(xmin, txs[i]);
            xmax = std::max(xmax, txs[i]);
            ymin = std::min(ymin, tys[i]);
            ymax = std::max(ymax, tys[i]);
        }
        w.x0 = std::floor(xmin);
        w.x1 = std::ceil(xmax);
        w.y0 = std::floor(ymin);
        w.y1 = std::ceil(ymax);
        if (w.x1 <= w.x0) w.x1 = w.x0 + 1.0;
        if (w.y1 <= w.y0) w.y1 = w.y0 + 1.0;
    } else {
        double xmax = 0.0, ymax = 0.0;
        for (std::size_t i = 0; i < txs.size(); ++i) {
            xmax = std::max(xmax, txs[i]);
            ymax = std::max(ymax, tys[i]);
        }
        w = Window{0.0, xmax * 1.05, 0.0, ymax * 1.05};
        if (w.x1 <= 0.0) w.x1 = 100.0;
        if (w.y1 <= 0.0) w.y1 = 300.0;
    }
    Mapper map{w};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"800\" viewBox=\"0 0 1000 800\">\n";
    svg += "<title>Chern plane</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"800\" fill=\"#ffffff\"/>\n";

    // axes
    svg += "<line x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kTop) + "\" x2=\"" + fmt2(kLeft) + "\" y2=\"" +
           fmt2(kBottom) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kBottom) + "\" x2=\"" + fmt2(kRight) + "\" y2=\"" +
           fmt2(kBottom) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    // ticks and labels
    if (loglog) {
        for (int k = static_cast<int>(std::ceil(w.x0)); k <= static_cast<int>(std::floor(w.x1)); ++k) {
            double px = map.px(static_cast<double>(k));
            svg += "<line x1=\"" + fmt2(px) + "\" y1=\"" + fmt2(kBottom) + "\" x2=\"" + fmt2(px) + "\" y2=\"" +
                   fmt2(kBottom + 6.0) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            svg += "<text x=\"" + fmt2(px) + "\" y=\"" + fmt2(kBottom + 22.0) +
                   "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">1e" + std::to_string(k) +
                   "</text>\n";
        }
        for (int k = static_cast<int>(std::ceil(w.y0)); k <= static_cast<int>(std::floor(w.y1)); ++k) {
            double py = map.py(static_cast<double>(k));
            svg += "<line x1=\"" + fmt2(kLeft - 6.0) + "\" y1=\"" + fmt2(py) + "\" x2=\"" + fmt2(kLeft) + "\" y2=\"" +
                   fmt2(py) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            svg += "<text x=\"" + fmt2(kLeft - 10.0) + "\" y=\"" + fmt2(py + 4.0) +
                   "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">1e" + std::to_string(k) +
                   "</text>\n";
        }
    } else {
        for (int i = 0; i <= 4; ++i) {
            double vx = w.x1 * i / 4.0;
            double px = map.px(vx);
            svg += "<line x1=\"" + fmt2(px) + "\" y1=\"" + fmt2(kBottom) + "\" x2=\"" + fmt2(px) + "\" y2=\"" +
                   fmt2(kBottom + 6.0) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            svg += "<text x=\"" + fmt2(px) + "\" y=\"" + fmt2(kBottom + 22.0) +
                   "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" + fmt_axis(vx) +
                   "</text>\n";
            double vy = w.y1 * i / 4.0;
            double py = map.py(vy);
            svg += "<line x1=\"" + fmt2(kLeft - 6.0) + "\" y1=\"" + fmt2(py) + "\" x2=\"" + fmt2(kLeft) + "\" y2=\"" +
                   fmt2(py) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            svg += "<text x=\"" + fmt2(kLeft - 10.0) + "\" y=\"" + fmt2(py + 4.0) +
                   "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">" + fmt_axis(vy) + "</text>\n";
        }
    }

    // axis titles
    svg += "<text x=\"" + fmt2((kLeft + kRight) / 2.0) + "\" y=\"770.00\" text-anchor=\"middle\" "
           "font-family=\"monospace\" font-size=\"14\">" +
           std::string(loglog ? "log10 c2" : "c2") + "</text>\n";
    svg += "<text x=\"30.00\" y=\"" + fmt2((kTop + kBottom) / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\" transform=\"rotate(-90 30 " +
           fmt2((kTop + kBottom) / 2.0) + ")\">" + std::string(loglog ? "log10 c1^2" : "c1^2") + "</text>\n";

    // reference lines: c1^2 = 3 c2, c1^2 = 2 c2, 5 c1^2 = c2 - 36
    struct Ray {
        double a;
        const char* label;
        const char* color;
        const char* dash;
    };
    const Ray rays[2] = {{3.0, "c1^2 = 3 c2", "#444444", "6 3"}, {2.0, "c1^2 = 2 c2", "#888888", "4 3"}};
    for (const Ray& ray : rays) {
        if (loglog) {
            double c = std::log10(ray.a);
            double tx0 = std::max(w.x0, w.y0 - c), tx1 = std::min(w.x1, w.y1 - c);
            if (tx0 < tx1) {
                add_line(svg, map, tx0, tx0 + c, tx1, tx1 + c, ray.color, ray.dash);
                add_end_label(svg, map, tx1, tx1 + c, ray.label, ray.color);
            }
        } else {
            double x_end = std::min(w.x1, w.y1 / ray.a);
            if (x_end > 0.0) {
                add_line(svg, map, 0.0, 0.0, x_end, ray.a * x_end, ray.color, ray.dash);
                add_end_label(svg, map, x_end, ray.a * x_end, ray.label, ray.color);
            }
        }
    }
    const char* noether_label = "5 c1^2 = c2 - 36";
    const char* noether_color = "#bb7700";
    if (loglog) {
        double start = std::max(w.x0, std::log10(36.0) + 1e-9);
        std::string poly;
        double last_tx = 0.0, last_ty = 0.0;
        int vertices = 0;
        for (int i = 0; i <= 64; ++i) {
            double tx = start + (w.x1 - start) * i / 64.0;
            double y = (std::pow(10.0, tx) - 36.0) / 5.0;
            if (y <= 0.0) continue;
            double ty = std::log10(y);
            if (ty < w.y0 || ty > w.y1) continue;
            poly += fmt2(map.px(tx)) + "," + fmt2(map.py(ty)) + " ";
            last_tx = tx;
            last_ty = ty;
            ++vertices;
        }
        if (vertices >= 2) {
            poly.pop_back();
            svg += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"" + noether_color +
                   "\" stroke-width=\"1.5\" stroke-dasharray=\"2 3\"/>\n";
            add_end_label(svg, map, last_tx, last_ty, noether_label, noether_color);
        }
    } else if (w.x1 > 36.0) {
        double x_end = std::min(w.x1, 5.0 * w.y1 + 36.0);
        add_line(svg, map, 36.0, 0.0, x_end, (x_end - 36.0) / 5.0, noether_color, "2 3");
        add_end_label(svg, map, x_end, (x_end - 36.0) / 5.0, noether_label, noether_color);
    }

    // data points, spin and non-spin in distinct colors
    const char* kSpinColor = "#1f77b4";
    const char* kNonspinColor = "#d62728";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const char* color = points[i].params.variant == families::Variant::spin ? kSpinColor : kNonspinColor;
        svg += "<circle cx=\"" + fmt2(map.px(txs[i])) + "\" cy=\"" + fmt2(map.py(tys[i])) + "\" r=\"4\" fill=\"" +
               color + "\" fill-opacity=\"0.85\"/>\n";
    }

    // legend for the variants present
    bool has_spin = false, has_nonspin = false;
    for (const auto& pt : points) (pt.params.variant == families::Variant::spin ? has_spin : has_nonspin) = true;
    double legend_y = kTop + 18.0;
    auto legend_row = [&](const char* color, const char* name) {
        svg += "<circle cx=\"" + fmt2(kRight - 140.0) + "\" cy=\"" + fmt2(legend_y - 4.0) + "\" r=\"4\" fill=\"" +
               std::string(color) + "\"/>\n";
        svg += "<text x=\"" + fmt2(kRight - 128.0) + "\" y=\"" + fmt2(legend_y) +
               "\" font-family=\"monospace\" font-size=\"13\">" + name + "</text>\n";
        legend_y += 20.0;
    };
    if (has_spin) legend_row(kSpinColor, "spin");
    if (has_nonspin) legend_row(kNonspinColor, "non-spin");

    svg += "</svg>\n";
    return svg;
}

}  // namespace geolab::geography
