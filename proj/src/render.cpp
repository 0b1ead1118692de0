#include "kcob/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kcob {

namespace {

constexpr std::int64_t kMaxExtent = 500;

GridExtent checked(std::optional<GridExtent> e, GridExtent fallback) {
    GridExtent g = e.value_or(fallback);
    if (g.width < 1 || g.height < 1 || g.width > kMaxExtent || g.height > kMaxExtent) {
        throw std::invalid_argument("grid extent " + std::to_string(g.width) + "x" + std::to_string(g.height) +
                                    " outside 1..500");
    }
    return g;
}

bool is_corner(const QuadrantUnion& s, std::int64_t x, std::int64_t y) {
    for (const auto& c : s.corners())
        if (c.a == x && c.b == y) return true;
    return false;
}

std::string pad_left(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

std::string caption(const GenusFamily& f, std::size_t g) {
    const bool last = g + 1 == f.per_genus.size() && f.per_genus[g].is_everything();
    return (last ? "g≥" : "g=") + std::to_string(g);
}

void ascii_grid(std::ostringstream& os, const QuadrantUnion& s, GridExtent e) {
    const std::size_t lw = std::to_string(e.height - 1).size();
    const std::size_t cw = std::to_string(e.width - 1).size();
    os << "c2\n";
    for (std::int64_t y = e.height - 1; y >= 0; --y) {
        os << pad_left(std::to_string(y), lw) << " |";
        for (std::int64_t x = 0; x < e.width; ++x) {
            const char sym = is_corner(s, x, y) ? '*' : (s.member(x, y) ? 'o' : '.');
            os << ' ' << pad_left(std::string(1, sym), cw);
        }
        os << '\n';
    }
    os << std::string(lw, ' ') << " +" << std::string(static_cast<std::size_t>(e.width) * (cw + 1), '-') << '\n';
    os << std::string(lw, ' ') << "  ";
    for (std::int64_t x = 0; x < e.width; ++x) os << ' ' << pad_left(std::to_string(x), cw);
    os << "  c0\n";
}

struct SvgLayout {
    static constexpr int cell = 24;
    static constexpr int left = 40;
    static constexpr int top = 32;
    static constexpr int bottom = 36;
    static constexpr int right = 28;
    GridExtent e;

    int panel_width() const { return left + static_cast<int>(e.width) * cell + right; }
    int height() const { return top + static_cast<int>(e.height) * cell + bottom; }
    int px(std::int64_t x) const { return left + static_cast<int>(x) * cell + cell / 2; }
    int py(std::int64_t y) const { return top + static_cast<int>(e.height - 1 - y) * cell + cell / 2; }
};

void svg_panel(std::ostringstream& os, const QuadrantUnion& s, const SvgLayout& L, int offset, const std::string& cap) {
    os << "<g transform=\"translate(" << offset << ",0)\">\n";
    if (!cap.empty()) os << "<text x=\"" << L.left << "\" y=\"16\" font-size=\"14\">" << cap << "</text>\n";
    const int x0 = L.left, x1 = L.left + static_cast<int>(L.e.width) * L.cell;
    const int y0 = L.top, y1 = L.top + static_cast<int>(L.e.height) * L.cell;
    os << "<line x1=\"" << x0 << "\" y1=\"" << y1 << "\" x2=\"" << x1 << "\" y2=\"" << y1
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
       << "\" stroke=\"black\"/>\n";
    for (std::int64_t x = 0; x < L.e.width; ++x)
        os << "<text x=\"" << L.px(x) << "\" y=\"" << y1 + 16 << "\" font-size=\"11\" text-anchor=\"middle\">" << x
           << "</text>\n";
    for (std::int64_t y = 0; y < L.e.height; ++y)
        os << "<text x=\"" << x0 - 6 << "\" y=\"" << L.py(y) + 4 << "\" font-size=\"11\" text-anchor=\"end\">" << y
           << "</text>\n";
    os << "<text x=\"" << x1 + 4 << "\" y=\"" << y1 + 4 << "\" font-size=\"12\">c0</text>\n";
    os << "<text x=\"" << x0 - 4 << "\" y=\"" << y0 - 4 << "\" font-size=\"12\" text-anchor=\"end\">c2</text>\n";
    for (std::int64_t y = 0; y < L.e.height; ++y)
        for (std::int64_t x = 0; x < L.e.width; ++x) {
            os << "<circle cx=\"" << L.px(x) << "\" cy=\"" << L.py(y) << "\" ";
            if (is_corner(s, x, y)) os << "r=\"6\" fill=\"#c0392b\"/>\n";
            else if (s.member(x, y)) os << "r=\"5\" fill=\"black\"/>\n";
            else os << "r=\"2\" fill=\"#bbbbbb\"/>\n";
        }
    os << "</g>\n";
}

std::string svg_document(const std::vector<const QuadrantUnion*>& sets, const std::vector<std::string>& caps,
                         GridExtent e) {
    SvgLayout L{e};
    const int w = L.panel_width() * static_cast<int>(sets.size());
    const int h = L.height();
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"sans-serif\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < sets.size(); ++i) svg_panel(os, *sets[i], L, static_cast<int>(i) * L.panel_width(), caps[i]);
    os << "</svg>\n";
    return os.str();
}

}  // namespace

GridExtent default_extent(const QuadrantUnion& s) {
    std::int64_t ma = 0, mb = 0;
    for (const auto& c : s.corners()) {
        ma = std::max(ma, c.a);
        mb = std::max(mb, c.b);
    }
    return {ma + 3, mb + 3};
}

GridExtent default_extent(const GenusFamily& f) {
    GridExtent e{3, 3};
    for (const auto& s : f.per_genus) {
        GridExtent d = default_extent(s);
        e.width = std::max(e.width, d.width);
        e.height = std::max(e.height, d.height);
    }
    return e;
}

std::string render_ascii(const QuadrantUnion& s, std::optional<GridExtent> extent) {
    std::ostringstream os;
    ascii_grid(os, s, checked(extent, default_extent(s)));
    return os.str();
}

std::string render_ascii(const GenusFamily& f, std::optional<GridExtent> extent) {
    const GridExtent e = checked(extent, default_extent(f));
    std::ostringstream os;
    for (std::size_t g = 0; g < f.per_genus.size(); ++g) {
        if (g) os << '\n';
        os << caption(f, g) << '\n';
        ascii_grid(os, f.per_genus[g], e);
    }
    return os.str();
}

std::string render_svg(const QuadrantUnion& s, std::optional<GridExtent> extent) {
    return svg_document({&s}, {""}, checked(extent, default_extent(s)));
}

std::string render_svg(const GenusFamily& f, std::optional<GridExtent> extent) {
    std::vector<const QuadrantUnion*> sets;
    std::vector<std::string> caps;
    for (std::size_t g = 0; g < f.per_genus.size(); ++g) {
        sets.push_back(&f.per_genus[g]);
        caps.push_back(caption(f, g));
    }
    return svg_document(sets, caps, checked(extent, default_extent(f)));
}

}  // namespace kcob
