#include "geoprove/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geoprove {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_json(ComponentKind k) {
    switch (k) {
        case ComponentKind::Line: return "LINE";
        case ComponentKind::Circle: return "CIRCLE";
        case ComponentKind::Other: return "OTHER";
    }
    return "?";
}

} // namespace

std::string emit_json(const RunReport& report) {
    ordered_json doc;
    doc["version"] = report.version;
    doc["command"] = report.command;
    doc["file"] = report.file;
    doc["order"] = report.order;
    doc["timeout_s"] = report.timeout_s;
    doc["results"] = ordered_json::array();

    for (const CommandResult& r : report.results) {
        ordered_json e;
        e["kind"] = command_kind_name(r.kind);
        if (r.proof) {
            e["verdict"] = verdict_name(r.proof->verdict);
            e["conditions"] = r.conditions;
        }
        if (r.grade_report) {
            const GradeReport& g = *r.grade_report;
            e["grade"] = g.grade;
            ordered_json ledger = ordered_json::array();
            for (const GradeLedgerRow& row : g.ledger)
                ledger.push_back({{"q_degree", row.q_degree},
                                  {"cofactor_degree", row.cofactor_degree}});
            e["ledger"] = ledger;
            if (g.used_fallback) e["used_fallback"] = true;
        }
        if (r.locus) {
            const LocusResult& l = *r.locus;
            ordered_json lj;
            if (l.empty_locus) {
                lj["empty_locus"] = true;
            } else {
                lj["poly"] = l.locus_poly.str(r.var_names);
                lj["total_degree"] = l.locus_poly.total_degree();
                ordered_json comps = ordered_json::array();
                for (const Component& comp : l.components)
                    comps.push_back({{"poly", comp.poly.str(r.var_names)},
                                     {"kind", kind_json(comp.kind)},
                                     {"classification",
                                      component_class_name(comp.classification)}});
                lj["components"] = comps;
                lj["residual"] = l.residual.str(r.var_names);
            }
            e["locus"] = lj;
        }
        if (r.discovery) {
            ordered_json fs = ordered_json::array();
            for (const Finding& f : r.discovery->findings) {
                ordered_json fj;
                fj["predicate"] = predicate_text(f.predicate);
                fj["stage"] = stage_name(f.stage);
                if (f.proof) fj["verdict"] = verdict_name(f.proof->verdict);
                fs.push_back(fj);
            }
            e["findings"] = fs;
            if (r.discovery->truncated) e["truncated"] = true;
        }
        if (r.timed_out) e["timeout"] = true;
        if (!r.note.empty()) e["note"] = r.note;
        e["time_ms"] = r.time_ms;
        doc["results"].push_back(e);
    }
    return doc.dump(2) + "\n";
}

namespace {

struct View {
    double x0, x1, y0, y1;
    int size;

    double sx(double x) const { return (x - x0) / (x1 - x0) * size; }
    double sy(double y) const { return size - (y - y0) / (y1 - y0) * size; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Extracts a x + b y + c from a degree-1 polynomial.
void line_coefficients(const Polynomial& p, double& a, double& b, double& c) {
    a = b = c = 0;
    for (const Term& t : p.terms()) {
        double v = t.coef.to_double();
        if (t.mono.exp(0) == 1)
            a = v;
        else if (t.mono.exp(1) == 1)
            b = v;
        else
            c = v;
    }
}

// Clips a x + b y + c = 0 to the view box; false when the line misses it.
bool clip_line(double a, double b, double c, const View& v,
               std::pair<double, double>& p, std::pair<double, double>& q) {
    std::vector<std::pair<double, double>> hits;
    double eps = 1e-9 * (std::abs(v.x1 - v.x0) + std::abs(v.y1 - v.y0));
    auto push = [&](double x, double y) {
        if (x < v.x0 - eps || x > v.x1 + eps || y < v.y0 - eps || y > v.y1 + eps) return;
        for (const auto& h : hits)
            if (std::abs(h.first - x) < eps && std::abs(h.second - y) < eps) return;
        hits.push_back({x, y});
    };
    if (b != 0)
        for (double x : {v.x0, v.x1}) push(x, -(a * x + c) / b);
    if (a != 0)
        for (double y : {v.y0, v.y1}) push(-(b * y + c) / a, y);
    if (hits.size() < 2) return false;
    // Farthest pair, so collinear duplicates collapse sanely.
    double best = -1;
    for (std::size_t i = 0; i < hits.size(); ++i)
        for (std::size_t j = i + 1; j < hits.size(); ++j) {
            double d = std::hypot(hits[i].first - hits[j].first,
                                  hits[i].second - hits[j].second);
            if (d > best) {
                best = d;
                p = hits[i];
                q = hits[j];
            }
        }
    return best > eps;
}

void svg_line(std::ostringstream& out, const View& v, double a, double b, double c,
              const std::string& cls) {
    std::pair<double, double> p, q;
    if (!clip_line(a, b, c, v, p, q)) return;
    out << "  <line class=\"" << cls << "\" x1=\"" << fmt(v.sx(p.first)) << "\" y1=\""
        << fmt(v.sy(p.second)) << "\" x2=\"" << fmt(v.sx(q.first)) << "\" y2=\""
        << fmt(v.sy(q.second)) << "\"/>\n";
}

void svg_curve(std::ostringstream& out, const View& v, const Polynomial& p,
               const BBox& bbox, const std::string& cls) {
    auto paths = implicit_plot_data(p, bbox, 160);
    for (const auto& path : paths) {
        if (path.size() < 2) continue;
        out << "  <polyline class=\"" << cls << "\" points=\"";
        for (const auto& [x, y] : path) out << fmt(v.sx(x)) << "," << fmt(v.sy(y)) << " ";
        out << "\"/>\n";
    }
}

void svg_component(std::ostringstream& out, const View& v, const Component& comp,
                   const BBox& bbox) {
    std::string cls;
    switch (comp.classification) {
        case ComponentClass::Valid: cls = "valid"; break;
        case ComponentClass::Degenerate: cls = "degenerate"; break;
        case ComponentClass::Unknown: cls = "unknown"; break;
    }
    if (comp.kind == ComponentKind::Line) {
        double a, b, c;
        line_coefficients(comp.poly, a, b, c);
        svg_line(out, v, a, b, c, cls);
        return;
    }
    if (comp.kind == ComponentKind::Circle) {
        // k(x^2 + y^2) + d x + e y + f
        double k = 0, d = 0, e = 0, f = 0;
        for (const Term& t : comp.poly.terms()) {
            double val = t.coef.to_double();
            if (t.mono.exp(0) == 2)
                k = val;
            else if (t.mono.exp(0) == 1)
                d = val;
            else if (t.mono.exp(1) == 1)
                e = val;
            else if (t.mono.total_degree() == 0)
                f = val;
        }
        if (k == 0) return;
        double cx = -d / (2 * k), cy = -e / (2 * k);
        double r2 = cx * cx + cy * cy - f / k;
        if (r2 <= 0) return;
        double r = std::sqrt(r2);
        double scale = v.size / (v.x1 - v.x0);
        out << "  <circle class=\"" << cls << "\" cx=\"" << fmt(v.sx(cx)) << "\" cy=\""
            << fmt(v.sy(cy)) << "\" r=\"" << fmt(r * scale) << "\"/>\n";
        return;
    }
    svg_curve(out, v, comp.poly, bbox, cls);
}

} // namespace

std::string emit_svg(const LocusResult& locus, const Construction& c,
                     const Instance& instance, const BBox& bbox, int size) {
    if (!(bbox.xmin < bbox.xmax) || !(bbox.ymin < bbox.ymax))
        throw std::invalid_argument("degenerate bounding box");
    if (size <= 0) throw std::invalid_argument("size must be positive");

    View v{bbox.xmin.to_double(), bbox.xmax.to_double(), bbox.ymin.to_double(),
           bbox.ymax.to_double(), size};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <style>\n"
           "    .construction { stroke: #9a9a9a; stroke-width: 1; fill: none; }\n"
           "    .pt { fill: #202020; }\n"
           "    .lbl { font: 13px sans-serif; fill: #202020; }\n"
           "    .note { font: 15px sans-serif; fill: #c62828; }\n"
           "    .valid { stroke: #c62828; stroke-width: 2.5; fill: none; }\n"
           "    .degenerate { stroke: #7a7a7a; stroke-width: 1.5; stroke-dasharray: 6 4;"
           " fill: none; }\n"
           "    .unknown { stroke: #1565c0; stroke-width: 1.5; stroke-dasharray: 2 3;"
           " fill: none; }\n"
           "    .residual { stroke: #1565c0; stroke-width: 1.5; fill: none; }\n"
           "  </style>\n";
    out << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    // Base figure at the instance, when one is available.
    auto at = [&](const std::string& name) { return instance.coords.find(name); };
    for (const Step& st : c.steps) {
        if (st.kind == StepKind::LineThrough || st.kind == StepKind::SegmentOf) {
            auto p = at(st.args[0]), q = at(st.args[1]);
            if (p == instance.coords.end() || q == instance.coords.end()) continue;
            double px = p->second.first.to_double(), py = p->second.second.to_double();
            double qx = q->second.first.to_double(), qy = q->second.second.to_double();
            if (st.kind == StepKind::SegmentOf) {
                out << "  <line class=\"construction\" x1=\"" << fmt(v.sx(px)) << "\" y1=\""
                    << fmt(v.sy(py)) << "\" x2=\"" << fmt(v.sx(qx)) << "\" y2=\""
                    << fmt(v.sy(qy)) << "\"/>\n";
            } else {
                // a x + b y + c = 0 through the two points
                double a = qy - py, b = px - qx;
                svg_line(out, v, a, b, -(a * px + b * py), "construction");
            }
        } else if (st.kind == StepKind::CircleCenterThrough) {
            auto ce = at(st.args[0]), th = at(st.args[1]);
            if (ce == instance.coords.end() || th == instance.coords.end()) continue;
            double cx = ce->second.first.to_double(), cy = ce->second.second.to_double();
            double r = std::hypot(th->second.first.to_double() - cx,
                                  th->second.second.to_double() - cy);
            double scale = size / (v.x1 - v.x0);
            out << "  <circle class=\"construction\" cx=\"" << fmt(v.sx(cx)) << "\" cy=\""
                << fmt(v.sy(cy)) << "\" r=\"" << fmt(r * scale) << "\"/>\n";
        }
    }

    if (locus.empty_locus) {
        out << "  <text class=\"note\" x=\"12\" y=\"24\">locus: entire plane</text>\n";
    } else {
        for (const Component& comp : locus.components) svg_component(out, v, comp, bbox);
        if (!locus.residual.is_constant()) svg_curve(out, v, locus.residual, bbox, "residual");
    }

    // Points on top of everything.
    for (const auto& [name, xy] : instance.coords) {
        double x = v.sx(xy.first.to_double()), y = v.sy(xy.second.to_double());
        if (x < -20 || x > size + 20 || y < -20 || y > size + 20) continue;
        out << "  <circle class=\"pt\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"3\"/>\n";
        out << "  <text class=\"lbl\" x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5) << "\">"
            << name << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace geoprove
