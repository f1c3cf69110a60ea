#include "barviz/svg.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "barviz/errors.hpp"

namespace barviz {

namespace {

// Fixed-point decimal keeps the output byte-stable across platforms.
std::string px(const Rational& v) { return to_decimal_string(v, 3); }

}  // namespace

std::string render_svg(const Layout& l, const RenderSpec& spec) {
    std::vector<Violation> violations = validate_layout(l);
    if (!violations.empty()) fail(Errc::InvalidLayout, violation_text(violations.front()));

    Rational minx = 0, maxx = 0, miny = 0, maxy = 0;
    if (!l.bars.empty()) {
        minx = l.bars.front().x_lo;
        maxx = l.bars.front().x_hi;
        miny = l.bars.front().y;
        maxy = l.bars.front().y;
        for (const Bar& b : l.bars) {
            minx = std::min(minx, b.x_lo);
            maxx = std::max(maxx, b.x_hi);
            miny = std::min(miny, b.y);
            maxy = std::max(maxy, b.y);
        }
    }
    const Rational margin = 20;
    Rational width = (maxx - minx) * spec.x_scale + 2 * margin;
    Rational height = (maxy - miny) * spec.y_scale + 2 * margin;
    auto tx = [&](const Rational& x) -> Rational { return (x - minx) * spec.x_scale + margin; };
    // The page's y axis grows downward, the layout's upward.
    auto ty = [&](const Rational& y) -> Rational { return (maxy - y) * spec.y_scale + margin; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(width)
        << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height)
        << "\">\n";

    if (spec.strips) {
        std::vector<VisibilityPair> pairs = visible_pairs(l);
        std::sort(pairs.begin(), pairs.end(), [](const VisibilityPair& a, const VisibilityPair& b) {
            if (a.lower != b.lower) return a.lower < b.lower;
            if (a.upper != b.upper) return a.upper < b.upper;
            return a.p < b.p;
        });
        for (const VisibilityPair& vp : pairs) {
            const Bar& lo = l.bars[static_cast<size_t>(vp.lower)];
            const Bar& hi = l.bars[static_cast<size_t>(vp.upper)];
            Rational x = tx(vp.p);
            Rational w = (vp.q - vp.p) * spec.x_scale;
            Rational y_top = ty(hi.y) + spec.thickness / 2;
            Rational h = ty(lo.y) - spec.thickness / 2 - y_top;
            out << "  <rect x=\"" << px(x) << "\" y=\"" << px(y_top) << "\" width=\"" << px(w)
                << "\" height=\"" << px(h)
                << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
                   "stroke-dasharray=\"4 3\"/>\n";
        }
    }

    std::vector<Bar> bars = l.bars;
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.y != b.y) return a.y < b.y;
        if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
        return a.vertex < b.vertex;
    });
    for (const Bar& b : bars) {
        Rational x = tx(b.x_lo);
        Rational y = ty(b.y) - spec.thickness / 2;
        Rational w = (b.x_hi - b.x_lo) * spec.x_scale;
        out << "  <rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\"" << px(w)
            << "\" height=\"" << px(spec.thickness) << "\" fill=\"#2b6cb0\"/>\n";
    }
    if (spec.labels) {
        for (const Bar& b : bars) {
            Rational x = tx(b.x_lo);
            Rational y = ty(b.y) - spec.thickness / 2 - 3;
            out << "  <text x=\"" << px(x) << "\" y=\"" << px(y)
                << "\" font-family=\"monospace\" font-size=\"10\" fill=\"#222222\">" << b.vertex
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace barviz
