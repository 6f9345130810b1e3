#include "zzpa/report.hpp"

namespace zzpa {

std::string rat_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Json to_json(const Int& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Json to_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"coefficients_ascending", std::move(coeffs)},
                {"display", p.to_string()}};
}

Json to_json(const FieldElement& x) {
    Json coeffs = Json::array();
    for (const Rat& c : x.numerator().coeffs()) coeffs.push_back(rat_string(c));
    return Json{{"coefficients_ascending", std::move(coeffs)},
                {"decimal", x.decimal(kDecimalPlaces)}};
}

Json to_json(const AlgebraicReal& x) {
    return Json{{"defining", to_json(x.defining())},
                {"isolating_interval",
                 Json::array({rat_string(x.lo()), rat_string(x.hi())})},
                {"decimal", x.decimal(kDecimalPlaces)}};
}

Json to_json(const PostcriticalData& orbit) {
    Json pts = Json::array();
    for (const FieldElement& p : orbit.points) pts.push_back(to_json(p));
    Json tags = Json::array();
    for (PointTag t : orbit.taxonomy) tags.push_back(to_string(t));
    return Json{{"label_base", orbit.label_base},
                {"period", orbit.period},
                {"points", std::move(pts)},
                {"permutation", orbit.perm},
                {"taxonomy", std::move(tags)}};
}

Json to_json(const Rect& r) {
    return Json{{"x_lo", to_json(r.x_lo)},
                {"x_hi", to_json(r.x_hi)},
                {"y_lo", to_json(r.y_lo)},
                {"y_hi", to_json(r.y_hi)}};
}

Json to_json(const PeriodicLift& l) {
    return Json{{"x", to_json(l.x)},
                {"y", to_json(l.y)},
                {"period", l.period}};
}

Json to_json(const LimitSet& L) {
    Json cuts = Json::array();
    for (const FieldElement& c : L.cuts) cuts.push_back(to_json(c));
    Json rects = Json::array();
    for (const Rect& r : L.rects) rects.push_back(to_json(r));
    Json heights = Json::array();
    for (const FieldElement& h : L.heights) heights.push_back(to_json(h));
    Json aligns = Json::array();
    for (const AlignmentEntry& a : L.alignments) {
        aligns.push_back(Json{{"cut_index", a.cut_index},
                              {"alignment", to_string(a.alignment)},
                              {"postcritical", a.postcritical}});
    }
    Json lifts = Json::array();
    for (const PeriodicLift& l : L.lifts) lifts.push_back(to_json(l));
    Json comps = Json::array();
    for (const VerticalComponent& c : L.vertical) {
        comps.push_back(Json{{"x", to_json(c.x)},
                             {"y_lo", to_json(c.y_lo)},
                             {"y_hi", to_json(c.y_hi)},
                             {"full_edge", c.full_edge},
                             {"centered", c.centered}});
    }
    Json out{{"verdict", "rectangular"},
             {"cuts", std::move(cuts)},
             {"rectangles", std::move(rects)},
             {"heights", std::move(heights)},
             {"scale", to_json(L.scale)},
             {"area", to_json(L.area)},
             {"alignments", std::move(aligns)},
             {"periodic_lifts", std::move(lifts)},
             {"vertical_components", std::move(comps)},
             {"center_property", L.center_property},
             {"isolated_points", L.isolated_points}};
    if (!L.note.empty()) out["note"] = L.note;
    return out;
}

Json to_json(const NotRectangular& nr) {
    return Json{{"verdict", "not_rectangular"},
                {"reason", nr.reason},
                {"patterns_tried", nr.patterns_tried}};
}

Json to_json(const SingularityReport& s) {
    Json out{{"one_prongs", s.one_prongs},
             {"infinity_prongs", s.infinity_prongs},
             {"euler_sum", s.euler_sum},
             {"punctures", s.punctures},
             {"marked_points", s.marked_points}};
    if (s.double_cover_genus) {
        out["double_cover_genus"] = *s.double_cover_genus;
    } else {
        out["double_cover_genus"] = nullptr;
    }
    out["trace_field_degree"] = s.trace_field_degree;
    if (!s.note.empty()) out["note"] = s.note;
    return out;
}

Json to_json(const PAVerdict& v) {
    Json out{{"verdict", v.is_pa ? "yes" : "no"}, {"reason", v.reason}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    if (v.limit_set) out["limit_set"] = to_json(*v.limit_set);
    return out;
}

Json to_json(const SalemReport& s) {
    return Json{{"g", s.g},
                {"digit_polynomial", to_json(s.D)},
                {"salem_factor", to_json(s.d)},
                {"companion", to_json(s.q)},
                {"cross_check_vs_classify", s.cross_check_vs_classify},
                {"reciprocal", s.reciprocal},
                {"recurrence_ok", s.recurrence_ok},
                {"q_at_2", to_json(s.q_at_2)},
                {"sign_q_at_minus2", s.sign_q_at_minus2},
                {"roots_in_critical_interval", s.roots_in_critical_interval},
                {"roots_above_two", s.roots_above_two},
                {"q_totally_real", s.q_totally_real},
                {"interlaces_previous", s.interlaces_previous},
                {"cyclotomic_free", s.cyclotomic_free},
                {"unit_circle_roots", s.unit_circle_roots},
                {"lambda", to_json(s.lambda)},
                {"d_real_roots_ok", s.d_real_roots_ok},
                {"degenerate", s.degenerate},
                {"geometry_ok", s.geometry_ok},
                {"singularities", to_json(s.singularities)},
                {"is_salem", s.is_salem}};
}

Json envelope(const std::string& command, Json input) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"input", std::move(input)}};
}

}  // namespace zzpa
