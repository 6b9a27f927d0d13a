#include "tropsand/render.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tropsand {

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kOutside{215, 215, 215};
constexpr Rgb kCurve{200, 30, 30};

int mark_class(std::int64_t h) {
    if (h <= 0) return 0;
    if (h >= 4) return 4;
    return static_cast<int>(h);
}

Rgb mark_color(int cls, Palette palette) {
    if (palette == Palette::Mono) return kBlack;
    switch (cls) {
        case 0: return {200, 0, 0};
        case 1: return {230, 140, 0};
        case 2: return {20, 70, 200};
        default: return kBlack;
    }
}

std::string svg_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

// pixel frame shared by both outputs; y grows downwards
struct Frame {
    std::int64_t x0 = 0, y1 = 0;  // smallest x and largest y of the scaled bounding box
    int margin = 0, cell = 0, wcells = 0, hcells = 0;
    double scale = 1;

    double px(double x) const { return (x * scale - static_cast<double>(x0) + margin + 0.5) * cell; }
    double py(double y) const { return (static_cast<double>(y1) - y * scale + margin + 0.5) * cell; }
    int col(std::int64_t x) const { return static_cast<int>(x - x0) + margin; }
    int row(std::int64_t y) const { return static_cast<int>(y1 - y) + margin; }
};

Frame make_frame(const ScaledDomain& domain, const RenderOptions& options) {
    if (options.margin < 0) throw std::invalid_argument("margin must be non-negative");
    Frame f;
    const auto n = domain.scale();
    const auto lo = domain.polygon().min_corner(), hi = domain.polygon().max_corner();
    f.x0 = lo.x * n;
    f.y1 = hi.y * n;
    f.scale = static_cast<double>(n);
    f.margin = options.margin;
    f.wcells = static_cast<int>((hi.x - lo.x) * n + 1) + 2 * options.margin;
    f.hcells = static_cast<int>((hi.y - lo.y) * n + 1) + 2 * options.margin;
    f.cell = options.cell > 0 ? options.cell : std::clamp(1536 / std::max(f.wcells, f.hcells), 2, 12);
    return f;
}

struct Label {
    double x, y;  // pixels
    std::string text;
};

std::vector<Label> edge_labels(const Frame& f, const RenderOptions& options) {
    std::vector<Label> out;
    if (!options.overlay) return out;
    const auto& curve = *options.overlay;
    for (std::size_t i = 0; i < curve.edges().size(); ++i) {
        const auto& e = curve.edges()[i];
        if (e.kind != EdgeKind::Segment) continue;
        std::int64_t w = e.weight;
        if (options.weights) {
            w = 0;
            for (const auto& est : options.weights->entries)
                if (est.edge == i) w = est.rounded;
        }
        if (w < 2) continue;
        const auto& a = curve.vertices()[e.from];
        const auto& b = curve.vertices()[e.to];
        const double ax = f.px(to_double(a.x)), ay = f.py(to_double(a.y));
        const double bx = f.px(to_double(b.x)), by = f.py(to_double(b.y));
        const double len = std::hypot(bx - ax, by - ay);
        // nudge the label off the line, to the left of a -> b
        const double off = 4.0 * f.cell;
        out.push_back({(ax + bx) / 2 - off * (by - ay) / len, (ay + by) / 2 + off * (bx - ax) / len, std::to_string(w)});
    }
    return out;
}

class Canvas {
public:
    Canvas(int w, int h) : img_{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h * 3, 255)} {}

    void set(int x, int y, Rgb c) {
        if (x < 0 || y < 0 || x >= img_.width || y >= img_.height) return;
        auto* p = &img_.pixels[(static_cast<std::size_t>(y) * img_.width + x) * 3];
        p[0] = c.r, p[1] = c.g, p[2] = c.b;
    }
    void fill(int x, int y, int w, int h, Rgb c) {
        for (int j = y; j < y + h; ++j)
            for (int i = x; i < x + w; ++i) set(i, j, c);
    }
    void disc(double cx, double cy, double r, Rgb c) {
        for (int j = static_cast<int>(cy - r - 1); j <= static_cast<int>(cy + r + 1); ++j)
            for (int i = static_cast<int>(cx - r - 1); i <= static_cast<int>(cx + r + 1); ++i)
                if (std::hypot(i + 0.5 - cx, j + 0.5 - cy) <= r) set(i, j, c);
    }
    void ring(double cx, double cy, double r, double t, Rgb c) {
        for (int j = static_cast<int>(cy - r - 1); j <= static_cast<int>(cy + r + 1); ++j)
            for (int i = static_cast<int>(cx - r - 1); i <= static_cast<int>(cx + r + 1); ++i) {
                const double d = std::hypot(i + 0.5 - cx, j + 0.5 - cy);
                if (d <= r && d >= r - t) set(i, j, c);
            }
    }
    void line(double x0, double y0, double x1, double y1, double r, Rgb c) {
        const int steps = static_cast<int>(std::ceil(std::hypot(x1 - x0, y1 - y0))) + 1;
        for (int s = 0; s <= steps; ++s) {
            const double t = static_cast<double>(s) / steps;
            disc(x0 + t * (x1 - x0), y0 + t * (y1 - y0), r, c);
        }
    }
    // 3x5 digits, scaled
    void text(double cx, double cy, const std::string& s, int scale, Rgb c) {
        static const char* glyphs[10] = {"111101101101111", "010110010010111", "111001111100111", "111001111001111",
                                         "101101111001001", "111100111001111", "111100111101111", "111001001001001",
                                         "111101111101111", "111101111001111"};
        const int w = static_cast<int>(s.size()) * 4 * scale - scale;
        int x = static_cast<int>(cx) - w / 2;
        const int y = static_cast<int>(cy) - 5 * scale / 2;
        for (char ch : s) {
            if (ch >= '0' && ch <= '9') {
                const char* g = glyphs[ch - '0'];
                for (int r = 0; r < 5; ++r)
                    for (int q = 0; q < 3; ++q)
                        if (g[r * 3 + q] == '1') fill(x + q * scale, y + r * scale, scale, scale, c);
            }
            x += 4 * scale;
        }
    }
    RgbImage take() { return std::move(img_); }

private:
    RgbImage img_;
};

}  // namespace

Palette parse_palette(const std::string& name) {
    if (name == "mono") return Palette::Mono;
    if (name == "color") return Palette::Color;
    throw std::invalid_argument("unknown palette '" + name + "' (expected mono or color)");
}

MarkCounts height_histogram(const SandState& state) {
    MarkCounts counts{};
    for (auto h : state.values()) ++counts[static_cast<std::size_t>(mark_class(h))];
    return counts;
}

RgbImage render_raster(const SandState& state, const RenderOptions& options, RenderSummary* summary) {
    const auto& domain = state.domain();
    const Frame f = make_frame(domain, options);
    const int c = f.cell;
    Canvas canvas(f.wcells * c, f.hcells * c);
    canvas.fill(0, 0, f.wcells * c, f.hcells * c, kOutside);

    RenderSummary sum;
    sum.width_cells = f.wcells;
    sum.height_cells = f.hcells;
    sum.cell = c;
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        const int x = f.col(v.x) * c, y = f.row(v.y) * c;
        canvas.fill(x, y, c, c, kWhite);
        const int cls = mark_class(state[i]);
        ++sum.marks[static_cast<std::size_t>(cls)];
        const Rgb ink = mark_color(cls, options.palette);
        const double cx = x + c / 2.0, cy = y + c / 2.0;
        const int inset = std::max(1, c / 6);
        switch (cls) {
            case 0:
                for (int k = inset; k < c - inset; ++k) {
                    canvas.set(x + k, y + k, ink);
                    canvas.set(x + c - 1 - k, y + k, ink);
                }
                break;
            case 1:
                if (options.palette == Palette::Mono) canvas.ring(cx, cy, c / 2.0 - inset / 2.0, std::max(1.0, c / 6.0), ink);
                else canvas.disc(cx, cy, c / 2.0 - inset / 2.0, ink);
                break;
            case 2: canvas.fill(x + inset, y + inset, c - 2 * inset, c - 2 * inset, ink); break;
            case 4: canvas.disc(cx, cy, c / 2.0, ink); break;
            default: break;
        }
    });

    if (options.overlay) {
        for (const auto& e : options.overlay->edges()) {
            if (e.kind != EdgeKind::Segment) continue;
            const auto& a = options.overlay->vertices()[e.from];
            const auto& b = options.overlay->vertices()[e.to];
            const double r = std::max(0.5, c / 4.0) * static_cast<double>(std::min<std::int64_t>(e.weight, 4));
            canvas.line(f.px(to_double(a.x)), f.py(to_double(a.y)), f.px(to_double(b.x)), f.py(to_double(b.y)), r, kCurve);
        }
        for (const auto& l : edge_labels(f, options)) {
            canvas.text(l.x, l.y, l.text, std::max(2, c / 2), kCurve);
            sum.labels.push_back(l.text);
        }
    }
    if (summary) *summary = sum;
    return canvas.take();
}

void write_ppm(std::ostream& out, const RgbImage& image) {
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
}

std::string render_svg(const SandState& state, const RenderOptions& options, RenderSummary* summary) {
    const auto& domain = state.domain();
    const Frame f = make_frame(domain, options);
    const int c = f.cell;
    RenderSummary sum;
    sum.width_cells = f.wcells;
    sum.height_cells = f.hcells;
    sum.cell = c;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.wcells * c << "\" height=\"" << f.hcells * c
        << "\" viewBox=\"0 0 " << f.wcells * c << ' ' << f.hcells * c << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"" << svg_color(kOutside) << "\"/>\n";
    // the site rows, as white strips
    for (const auto& row : domain.rows())
        svg << "<rect x=\"" << f.col(row.x_min) * c << "\" y=\"" << f.row(row.y) * c << "\" width=\"" << row.width() * c
            << "\" height=\"" << c << "\" fill=\"#ffffff\"/>\n";

    const double half = c / 2.0;
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        const int cls = mark_class(state[i]);
        ++sum.marks[static_cast<std::size_t>(cls)];
        if (cls == 3) return;
        const double x = f.col(v.x) * c, y = f.row(v.y) * c;
        const std::string ink = svg_color(mark_color(cls, options.palette));
        switch (cls) {
            case 0:
                svg << "<path class=\"mark h0\" d=\"M" << x + 1 << ' ' << y + 1 << "L" << x + c - 1 << ' ' << y + c - 1 << "M"
                    << x + c - 1 << ' ' << y + 1 << "L" << x + 1 << ' ' << y + c - 1 << "\" stroke=\"" << ink << "\" stroke-width=\"" << c / 6.0 << "\"/>\n";
                break;
            case 1:
                svg << "<circle class=\"mark h1\" cx=\"" << x + half << "\" cy=\"" << y + half << "\" r=\"" << half * 0.75
                    << "\" fill=\"" << (options.palette == Palette::Mono ? std::string("#ffffff") : ink) << "\" stroke=\"" << ink
                    << "\" stroke-width=\"" << c / 6.0 << "\"/>\n";
                break;
            case 2:
                svg << "<rect class=\"mark h2\" x=\"" << x + c * 0.15 << "\" y=\"" << y + c * 0.15 << "\" width=\"" << c * 0.7
                    << "\" height=\"" << c * 0.7 << "\" fill=\"" << ink << "\"/>\n";
                break;
            default:
                svg << "<circle class=\"mark h4\" cx=\"" << x + half << "\" cy=\"" << y + half << "\" r=\"" << half << "\" fill=\"" << ink << "\"/>\n";
                break;
        }
    });

    if (options.overlay) {
        for (const auto& e : options.overlay->edges()) {
            if (e.kind != EdgeKind::Segment) continue;
            const auto& a = options.overlay->vertices()[e.from];
            const auto& b = options.overlay->vertices()[e.to];
            svg << "<line class=\"edge\" x1=\"" << f.px(to_double(a.x)) << "\" y1=\"" << f.py(to_double(a.y)) << "\" x2=\""
                << f.px(to_double(b.x)) << "\" y2=\"" << f.py(to_double(b.y)) << "\" stroke=\"" << svg_color(kCurve)
                << "\" stroke-opacity=\"0.6\" stroke-width=\"" << std::max(1.0, c / 2.0) * static_cast<double>(e.weight) << "\"/>\n";
        }
        for (const auto& l : edge_labels(f, options)) {
            svg << "<text class=\"weight\" x=\"" << l.x << "\" y=\"" << l.y << "\" font-size=\"" << 5 * c
                << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"" << svg_color(kCurve) << "\">" << l.text << "</text>\n";
            sum.labels.push_back(l.text);
        }
    }
    svg << "</svg>\n";
    if (summary) *summary = sum;
    return svg.str();
}

}  // namespace tropsand
