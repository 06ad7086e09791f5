#include <cstdio>
#include <sstream>
#include <string>

#include "hyperlip/errors.hpp"
#include "hyperlip_cli/cli.hpp"

namespace hyperlip::cli {

namespace {

// Fixed-point formatting keeps the output byte-stable.
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Frame {
    Box view;
    double scale_x;
    double scale_y;
    int pixels;

    double px(double x) const { return (x - view.lo[0]) * scale_x; }
    double py(double y) const { return (view.hi[1] - y) * scale_y; }
};

}  // namespace

std::string render_svg(const BoxLipschitzSet& q, const PlotOptions& options) {
    if (q.dim() != 2) throw InputError("plot: only n = 2 sets can be plotted");
    const Box& view = options.view;
    if (view.dim() != 2) throw DimensionMismatch(2, view.dim());
    if (!(options.resolution > 0.0)) throw InputError("plot: resolution must be positive");
    if (options.pixels <= 0) throw InputError("plot: pixels must be positive");
    const double width = view.hi[0] - view.lo[0];
    const double height = view.hi[1] - view.lo[1];
    if (!(width > 0.0) || !(height > 0.0)) throw InputError("plot: view box must have positive extent");

    const Frame frame{view, options.pixels / width, options.pixels / height, options.pixels};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << frame.pixels << "\" height=\"" << frame.pixels
        << "\" viewBox=\"0 0 " << frame.pixels << ' ' << frame.pixels << "\">\n";
    svg << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << frame.pixels << "\" height=\""
        << frame.pixels << "\"/></clipPath></defs>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << frame.pixels << "\" height=\"" << frame.pixels
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    // Region: one cell per grid step, membership tested at the cell centre.
    // Horizontal runs of member cells are merged into a single rect.
    const double r = options.resolution;
    const auto cols = static_cast<long>(width / r + 1e-9);
    const auto rows = static_cast<long>(height / r + 1e-9);
    svg << "<g id=\"region\" fill=\"#9ecae1\" stroke=\"none\">\n";
    for (long row = 0; row < rows; ++row) {
        const double y = view.lo[1] + (static_cast<double>(row) + 0.5) * r;
        long col = 0;
        while (col < cols) {
            const auto inside = [&](long c) {
                return violation(q, Point{view.lo[0] + (static_cast<double>(c) + 0.5) * r, y}) == 0.0;
            };
            if (!inside(col)) {
                ++col;
                continue;
            }
            const long start = col;
            while (col < cols && inside(col)) ++col;
            const double x0 = view.lo[0] + static_cast<double>(start) * r;
            const double x1 = view.lo[0] + static_cast<double>(col) * r;
            const double y0 = view.lo[1] + static_cast<double>(row) * r;
            svg << "<rect x=\"" << num(frame.px(x0)) << "\" y=\"" << num(frame.py(y0 + r)) << "\" width=\""
                << num(frame.px(x1) - frame.px(x0)) << "\" height=\"" << num(r * frame.scale_y) << "\"/>\n";
        }
    }
    svg << "</g>\n";

    if (!options.cones.empty()) {
        // Each 2-d cone is the wedge apex + t(s e_i +- e_j), t >= 0; drawn far
        // enough to leave the view and clipped.
        const double reach = 2.0 * (width + height);
        svg << "<g id=\"cones\" clip-path=\"url(#view)\" fill=\"#fdae6b\" fill-opacity=\"0.35\" stroke=\"#e6550d\">\n";
        for (const auto& c : options.cones) {
            if (c.apex.size() != 2 || c.axis > 1) throw InputError("plot: cones must live in the plane");
            const std::size_t j = 1 - c.axis;
            const double s = sign_value(c.sign);
            Point a = c.apex, b = c.apex;
            a[c.axis] += s * reach;
            b[c.axis] += s * reach;
            a[j] += reach;
            b[j] -= reach;
            svg << "<polygon points=\"" << num(frame.px(c.apex[0])) << ',' << num(frame.py(c.apex[1])) << ' '
                << num(frame.px(a[0])) << ',' << num(frame.py(a[1])) << ' ' << num(frame.px(b[0])) << ','
                << num(frame.py(b[1])) << "\"/>\n";
        }
        svg << "</g>\n";
    }

    if (!options.orbit.empty()) {
        for (const auto& p : options.orbit) {
            if (p.size() != 2) throw DimensionMismatch(2, p.size());
        }
        svg << "<g id=\"orbit\" clip-path=\"url(#view)\">\n<polyline fill=\"none\" stroke=\"#d62728\" points=\"";
        for (std::size_t k = 0; k < options.orbit.size(); ++k) {
            if (k > 0) svg << ' ';
            svg << num(frame.px(options.orbit[k][0])) << ',' << num(frame.py(options.orbit[k][1]));
        }
        svg << "\"/>\n";
        for (const auto& p : options.orbit) {
            svg << "<circle cx=\"" << num(frame.px(p[0])) << "\" cy=\"" << num(frame.py(p[1]))
                << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hyperlip::cli
