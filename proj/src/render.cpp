#include "zzpa/render.hpp"

#include <sstream>
#include <string>

#include "zzpa/error.hpp"

namespace zzpa {

namespace {

std::string pixel_const(int v, int places) {
    std::string s = std::to_string(v);
    s += '.';
    s.append(static_cast<size_t>(places), '0');
    return s;
}

// Affine map from math coordinates to pixel coordinates, evaluated in the
// field and rendered at fixed precision so output is reproducible bytewise.
struct Mapper {
    FieldElement x_off, x_scale;  // px = x_off + x_scale * x
    FieldElement y_off, y_scale;  // py = y_off - y_scale * y
    int places;

    std::string px(const FieldElement& x) const {
        return (x_off + x_scale * x).decimal(places);
    }
    std::string py(const FieldElement& y) const {
        return (y_off - y_scale * y).decimal(places);
    }
    std::string px_shift(const FieldElement& x, int d) const {
        FieldElement p = x_off + x_scale * x;
        return (p + FieldElement::from_rat(p.context(), Rat(d))).decimal(places);
    }
    std::string py_shift(const FieldElement& y, int d) const {
        FieldElement p = y_off - y_scale * y;
        return (p + FieldElement::from_rat(p.context(), Rat(d))).decimal(places);
    }
};

void open_svg(std::ostringstream& out, const FigureSpec& spec) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << spec.width << "\" height=\"" << spec.height << "\" viewBox=\"0 0 "
        << spec.width << ' ' << spec.height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" fill=\"#ffffff\" stroke=\"none\"/>\n";
}

void emit_rect(std::ostringstream& out, const std::string& x,
               const std::string& y, const std::string& w,
               const std::string& h, const std::string& fill,
               const std::string& stroke) {
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"" << fill << "\" stroke=\""
        << stroke << "\" stroke-width=\"1\"/>\n";
}

void emit_polyline(std::ostringstream& out, const std::string& points,
                   const std::string& stroke, int width,
                   const std::string& dash) {
    out << "<polyline points=\"" << points << "\" fill=\"none\" stroke=\""
        << stroke << "\" stroke-width=\"" << width << "\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
}

void emit_circle(std::ostringstream& out, const std::string& cx,
                 const std::string& cy, const std::string& r,
                 const std::string& fill) {
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
        << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
}

void emit_text(std::ostringstream& out, const std::string& x,
               const std::string& y, const std::string& body) {
    out << "<text x=\"" << x << "\" y=\"" << y
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#000000\">"
        << body << "</text>\n";
}

}  // namespace

std::string render_zigzag_svg(const ZigZagMap& f, const PostcriticalData& orbit,
                              const FigureSpec& spec) {
    const FieldContextPtr& ctx = f.context();
    FieldElement zero = FieldElement::zero(ctx);
    FieldElement one = FieldElement::one(ctx);
    int inner_w = spec.width - 2 * spec.margin;
    int inner_h = spec.height - 2 * spec.margin;
    Mapper m{FieldElement::from_rat(ctx, Rat(spec.margin)),
             FieldElement::from_rat(ctx, Rat(inner_w)),
             FieldElement::from_rat(ctx, Rat(spec.height - spec.margin)),
             FieldElement::from_rat(ctx, Rat(inner_h)),
             spec.precision};

    std::ostringstream out;
    open_svg(out, spec);
    emit_rect(out, m.px(zero), m.py(one), pixel_const(inner_w, spec.precision),
              pixel_const(inner_h, spec.precision), "none", "#000000");

    for (int i = 1; i <= f.m(); ++i) {
        const FieldElement& c = f.critical_point(i);
        emit_polyline(out,
                      m.px(c) + ',' + m.py(zero) + ' ' + m.px(c) + ',' +
                          m.py(one),
                      spec.critical_color, 1, "4,4");
    }

    std::string graph = m.px(zero) + ',' + m.py(f.evaluate(zero));
    for (int i = 1; i <= f.m(); ++i) {
        const FieldElement& c = f.critical_point(i);
        graph += ' ' + m.px(c) + ',' + m.py(f.evaluate(c));
    }
    graph += ' ' + m.px(one) + ',' + m.py(f.evaluate(one));
    emit_polyline(out, graph, spec.graph_color, 2, "");

    std::string radius = pixel_const(5, spec.precision);
    for (size_t i = 0; i < orbit.points.size(); ++i) {
        const FieldElement& p = orbit.points[i];
        FieldElement v = f.evaluate(p);
        emit_circle(out, m.px(p), m.py(v), radius, spec.orbit_color);
        std::string tag = to_string(orbit.taxonomy[i]);
        emit_text(out, m.px_shift(p, 7), m.py_shift(v, 14),
                  "p" + std::to_string(orbit.label_base + static_cast<int>(i)) +
                      ":" + tag);
    }
    if (orbit.label_base == 1 && f.evaluate(zero) == zero) {
        emit_circle(out, m.px(zero), m.py(zero), radius, spec.fixed_color);
        emit_text(out, m.px_shift(zero, 7), m.py_shift(zero, -8), "p0:fixed");
    }

    out << "</svg>\n";
    return out.str();
}

std::string render_limit_set_svg(const LimitSet& L, const FigureSpec& spec) {
    if (L.rects.empty()) throw input_error("limit set has no rectangles");
    const FieldContextPtr& ctx = L.ctx;
    FieldElement y_min = L.rects[0].y_lo;
    FieldElement y_max = L.rects[0].y_hi;
    for (const Rect& r : L.rects) {
        if (r.y_lo.compare(y_min) < 0) y_min = r.y_lo;
        if (r.y_hi.compare(y_max) > 0) y_max = r.y_hi;
    }
    int inner_w = spec.width - 2 * spec.margin;
    int inner_h = spec.height - 2 * spec.margin;
    FieldElement y_span_inv = (y_max - y_min).inverse();
    FieldElement sy = FieldElement::from_rat(ctx, Rat(inner_h)) * y_span_inv;
    // py = (height - margin + sy * y_min) - sy * y
    Mapper m{FieldElement::from_rat(ctx, Rat(spec.margin)),
             FieldElement::from_rat(ctx, Rat(inner_w)),
             FieldElement::from_rat(ctx, Rat(spec.height - spec.margin)) +
                 sy * y_min,
             sy, spec.precision};

    std::ostringstream out;
    open_svg(out, spec);
    for (const Rect& r : L.rects) {
        FieldElement w = r.x_hi - r.x_lo;
        FieldElement h = r.y_hi - r.y_lo;
        emit_rect(out, m.px(r.x_lo), m.py(r.y_hi),
                  (m.x_scale * w).decimal(spec.precision),
                  (m.y_scale * h).decimal(spec.precision), spec.rect_fill,
                  spec.rect_stroke);
    }
    for (const VerticalComponent& c : L.vertical) {
        emit_polyline(out,
                      m.px(c.x) + ',' + m.py(c.y_lo) + ' ' + m.px(c.x) + ',' +
                          m.py(c.y_hi),
                      spec.component_color, 3, "");
    }
    std::string radius = pixel_const(5, spec.precision);
    for (const PeriodicLift& l : L.lifts) {
        emit_circle(out, m.px(l.x), m.py(l.y), radius, spec.lift_color);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace zzpa
