#include "geoprove/algebraize.hpp"

#include <array>
#include <stdexcept>

namespace geoprove {

Polynomial AlgebraicSystem::coord(const std::string& point, char axis) const {
    auto it = points.find(point);
    if (it == points.end()) throw std::invalid_argument("unknown point: " + point);
    const CoordRef& r = axis == 'x' ? it->second.x : it->second.y;
    if (r.is_var()) return Polynomial::variable(r.var, vars.size());
    return Polynomial::constant(r.value, vars.size());
}

namespace {

/// Read-only helpers over a system whose variable table is complete.
struct Ctx {
    const AlgebraicSystem& sys;

    Polynomial px(const std::string& p) const { return sys.coord(p, 'x'); }
    Polynomial py(const std::string& p) const { return sys.coord(p, 'y'); }
    Polynomial cnst(long v) const { return Polynomial::constant(Rational(v), sys.vars.size()); }

    const std::pair<std::string, std::string>& defs(const std::string& obj) const {
        return sys.defs.at(obj);
    }

    static Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[2][1] * m[1][2]) -
               m[0][1] * (m[1][0] * m[2][2] - m[2][0] * m[1][2]) +
               m[0][2] * (m[1][0] * m[2][1] - m[2][0] * m[1][1]);
    }

    Polynomial collinear(const std::string& p, const std::string& q, const std::string& r) const {
        return det3({{{px(p), py(p), cnst(1)},
                      {px(q), py(q), cnst(1)},
                      {px(r), py(r), cnst(1)}}});
    }

    Polynomial on_circle(const std::string& p, const std::string& circle) const {
        const auto& [o, q] = defs(circle);
        Polynomial dx = px(p) - px(o), dy = py(p) - py(o);
        Polynomial rx = px(q) - px(o), ry = py(q) - py(o);
        return dx * dx + dy * dy - rx * rx - ry * ry;
    }

    Polynomial dot(const Polynomial& ax, const Polynomial& ay, const Polynomial& bx,
                   const Polynomial& by) const {
        return ax * bx + ay * by;
    }
};

Polynomial det4(const std::array<std::array<Polynomial, 4>, 4>& m) {
    Polynomial acc;
    for (int j = 0; j < 4; ++j) {
        std::array<std::array<Polynomial, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int col = 0; col < 4; ++col) {
                if (col == j) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        Polynomial contrib = m[0][j] * Ctx::det3(minor);
        acc = j == 0 ? contrib : (j % 2 ? acc - contrib : acc + contrib);
    }
    return acc;
}

} // namespace

AlgebraicSystem algebraize_base(const Construction& c, const Pinning& pinning) {
    c.validate();
    for (const auto& [name, xy] : pinning) {
        const Step* s = c.find(name);
        if (!s) throw std::invalid_argument("pinned point " + name + " is not defined");
        if (s->kind != StepKind::FreePoint && s->kind != StepKind::PointOnCircle &&
            s->kind != StepKind::PointOnLine)
            throw std::invalid_argument("pinned point " + name + " is constructed");
        (void)xy;
    }

    AlgebraicSystem sys;

    // First pass: assign variables so the ring size is known.
    for (const auto& s : c.steps) {
        switch (s.kind) {
        case StepKind::FreePoint: {
            auto pin = pinning.find(s.name);
            PointCoords pc;
            if (pin != pinning.end()) {
                pc.x.value = pin->second.first;
                pc.y.value = pin->second.second;
            } else {
                pc.x.var = sys.vars.add(coord_var_name(s.name, 'x'), VarKind::Free);
                pc.y.var = sys.vars.add(coord_var_name(s.name, 'y'), VarKind::Free);
            }
            sys.points.emplace(s.name, pc);
            break;
        }
        case StepKind::PointOnCircle:
        case StepKind::PointOnLine: {
            auto pin = pinning.find(s.name);
            PointCoords pc;
            if (pin != pinning.end()) {
                pc.x.value = pin->second.first;
                pc.y.value = pin->second.second;
            } else {
                pc.x.var = sys.vars.add(coord_var_name(s.name, 'x'), VarKind::Free);
                pc.y.var = sys.vars.add(coord_var_name(s.name, 'y'), VarKind::Dependent);
            }
            sys.points.emplace(s.name, pc);
            break;
        }
        case StepKind::ReflectPointOverLine:
        case StepKind::IntersectLines:
        case StepKind::IntersectLineCircleOther:
        case StepKind::Midpoint:
        case StepKind::FootOfPerpendicular: {
            PointCoords pc;
            pc.x.var = sys.vars.add(coord_var_name(s.name, 'x'), VarKind::Dependent);
            pc.y.var = sys.vars.add(coord_var_name(s.name, 'y'), VarKind::Dependent);
            sys.points.emplace(s.name, pc);
            if (s.kind == StepKind::IntersectLineCircleOther && s.avoid_degenerate)
                sys.vars.add(s.name + "_w", VarKind::Auxiliary);
            break;
        }
        case StepKind::CircleCenterThrough:
        case StepKind::LineThrough:
        case StepKind::SegmentOf:
            sys.defs.emplace(s.name, std::make_pair(s.args[0], s.args[1]));
            break;
        }
    }

    // Second pass: emit hypotheses in construction order.
    Ctx b{sys};
    auto& hyp = sys.hypotheses;
    // Pinning a carried point can make its membership equation constant; a
    // zero constant is vacuous, anything else contradicts the pin.
    auto push_membership = [&](Polynomial h, const std::string& name) {
        if (h.is_constant()) {
            if (h.is_zero()) return;
            throw std::invalid_argument("pinned point " + name +
                                        " does not satisfy its defining constraint");
        }
        hyp.push_back(std::move(h));
    };
    for (const auto& s : c.steps) {
        switch (s.kind) {
        case StepKind::PointOnCircle:
            push_membership(b.on_circle(s.name, s.args[0]), s.name);
            break;
        case StepKind::PointOnLine: {
            const auto& [p, q] = b.defs(s.args[0]);
            push_membership(b.collinear(p, q, s.name), s.name);
            break;
        }
        case StepKind::ReflectPointOverLine: {
            const std::string& src = s.args[0];
            const auto& [p, q] = b.defs(s.args[1]);
            // Midpoint of source and image on the mirror, denominators cleared.
            hyp.push_back(Ctx::det3({{{b.px(src) + b.px(s.name), b.py(src) + b.py(s.name),
                                       b.cnst(2)},
                                      {b.px(p), b.py(p), b.cnst(1)},
                                      {b.px(q), b.py(q), b.cnst(1)}}}));
            hyp.push_back(b.dot(b.px(s.name) - b.px(src), b.py(s.name) - b.py(src),
                                b.px(q) - b.px(p), b.py(q) - b.py(p)));
            break;
        }
        case StepKind::IntersectLines: {
            const auto& [p1, q1] = b.defs(s.args[0]);
            const auto& [p2, q2] = b.defs(s.args[1]);
            hyp.push_back(b.collinear(p1, q1, s.name));
            hyp.push_back(b.collinear(p2, q2, s.name));
            break;
        }
        case StepKind::IntersectLineCircleOther: {
            const auto& [p, q] = b.defs(s.args[0]);
            hyp.push_back(b.collinear(p, q, s.name));
            hyp.push_back(b.on_circle(s.name, s.args[1]));
            if (s.avoid_degenerate) {
                const std::string& known = s.args[2];
                Polynomial dx = b.px(s.name) - b.px(known);
                Polynomial dy = b.py(s.name) - b.py(known);
                Polynomial w =
                    Polynomial::variable(sys.vars.index_of(s.name + "_w"), sys.vars.size());
                hyp.push_back((dx * dx + dy * dy) * w - b.cnst(1));
            }
            break;
        }
        case StepKind::Midpoint: {
            hyp.push_back(b.cnst(2) * b.px(s.name) - b.px(s.args[0]) - b.px(s.args[1]));
            hyp.push_back(b.cnst(2) * b.py(s.name) - b.py(s.args[0]) - b.py(s.args[1]));
            break;
        }
        case StepKind::FootOfPerpendicular: {
            const std::string& apex = s.args[0];
            const auto& [p, q] = b.defs(s.args[1]);
            hyp.push_back(b.collinear(p, q, s.name));
            hyp.push_back(b.dot(b.px(s.name) - b.px(apex), b.py(s.name) - b.py(apex),
                                b.px(q) - b.px(p), b.py(q) - b.py(p)));
            break;
        }
        case StepKind::FreePoint:
        case StepKind::CircleCenterThrough:
        case StepKind::LineThrough:
        case StepKind::SegmentOf:
            break;
        }
    }

    sys.thesis = Polynomial::zero(sys.vars.size());
    return sys;
}

Polynomial predicate_thesis(const AlgebraicSystem& sys, const Construction& c,
                            const Predicate& pred) {
    Ctx b{sys};
    auto point_arg = [&](const std::string& n) -> const std::string& {
        if (!sys.points.count(n))
            throw std::invalid_argument("predicate references unknown point " + n);
        return n;
    };
    auto endpoints = [&](const std::string& n) -> const std::pair<std::string, std::string>& {
        auto it = sys.defs.find(n);
        if (it == sys.defs.end())
            throw std::invalid_argument("predicate references unknown line or segment " + n);
        const Step* st = c.find(n);
        if (st && st->kind == StepKind::CircleCenterThrough)
            throw std::invalid_argument("predicate argument " + n + " is a circle");
        return it->second;
    };

    switch (pred.kind) {
    case PredKind::AreConcyclic: {
        if (pred.args.size() != 4)
            throw std::invalid_argument("concyclic takes four points");
        std::array<std::array<Polynomial, 4>, 4> m;
        for (int i = 0; i < 4; ++i) {
            const std::string& p = point_arg(pred.args[i]);
            Polynomial x = b.px(p), y = b.py(p);
            m[i] = {x * x + y * y, x, y, b.cnst(1)};
        }
        return det4(m);
    }
    case PredKind::AreCollinear:
        if (pred.args.size() != 3)
            throw std::invalid_argument("collinear takes three points");
        return b.collinear(point_arg(pred.args[0]), point_arg(pred.args[1]),
                           point_arg(pred.args[2]));
    case PredKind::EqualLength: {
        std::array<std::string, 4> pts;
        if (pred.args.size() == 2) {
            const auto& [p, q] = endpoints(pred.args[0]);
            const auto& [r, t] = endpoints(pred.args[1]);
            pts = {p, q, r, t};
        } else if (pred.args.size() == 4) {
            for (int i = 0; i < 4; ++i) pts[i] = point_arg(pred.args[i]);
        } else {
            throw std::invalid_argument("equallength takes two segments or four points");
        }
        Polynomial ax = b.px(pts[0]) - b.px(pts[1]), ay = b.py(pts[0]) - b.py(pts[1]);
        Polynomial bx = b.px(pts[2]) - b.px(pts[3]), by = b.py(pts[2]) - b.py(pts[3]);
        return ax * ax + ay * ay - bx * bx - by * by;
    }
    case PredKind::ArePerpendicular:
    case PredKind::AreParallel: {
        if (pred.args.size() != 2)
            throw std::invalid_argument("perpendicular/parallel take two lines");
        const auto& [p1, q1] = endpoints(pred.args[0]);
        const auto& [p2, q2] = endpoints(pred.args[1]);
        Polynomial ax = b.px(q1) - b.px(p1), ay = b.py(q1) - b.py(p1);
        Polynomial bx = b.px(q2) - b.px(p2), by = b.py(q2) - b.py(p2);
        return pred.kind == PredKind::ArePerpendicular ? ax * bx + ay * by : ax * by - ay * bx;
    }
    }
    throw std::logic_error("unhandled predicate kind");
}

AlgebraicSystem algebraize(const Construction& c, const Predicate& pred,
                           const Pinning& pinning) {
    AlgebraicSystem sys = algebraize_base(c, pinning);
    sys.thesis = predicate_thesis(sys, c, pred);
    return sys;
}

} // namespace geoprove
