#include "geoprove/instance.hpp"

#include <optional>

namespace geoprove {
namespace {

struct Pt {
    Rational x, y;
};

Rational sq_dist(const Pt& a, const Pt& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct Solver {
    const Construction& c;
    const std::map<std::string, Rational>& choice;
    std::mt19937* rng;

    std::map<std::string, Pt> pts;
    std::map<std::string, std::pair<std::string, std::string>> pairs;

    std::optional<Rational> maybe(const std::string& key) const {
        auto it = choice.find(key);
        if (it == choice.end()) return std::nullopt;
        return it->second;
    }

    Rational draw_value() {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
        return Rational(num(*rng), den(*rng));
    }

    Rational draw_param() {
        std::uniform_int_distribution<long> num(1, 5), den(1, 3), s(0, 1);
        Rational t(num(*rng), den(*rng));
        return s(*rng) ? t : -t;
    }

    Rational need(const std::string& key) {
        if (auto v = maybe(key)) return *v;
        if (rng) return draw_value();
        throw std::invalid_argument("missing free coordinate " + key);
    }

    const Pt& at(const std::string& p) const { return pts.at(p); }

    Pt line_point(const std::string& line, int which) const {
        const auto& [p, q] = pairs.at(line);
        return which == 0 ? at(p) : at(q);
    }

    void solve_on_circle(const Step& s) {
        const auto& [oname, qname] = pairs.at(s.args[0]);
        Pt o = at(oname), q = at(qname);
        Rational r2 = sq_dist(o, q);
        auto hx = maybe(coord_var_name(s.name, 'x'));
        auto hy = maybe(coord_var_name(s.name, 'y'));
        if (hx && hy) {
            Pt p{*hx, *hy};
            if (sq_dist(o, p) != r2)
                throw std::invalid_argument("branch hint for " + s.name + " is off the circle");
            pts.emplace(s.name, p);
            return;
        }
        if (hx || !rng) {
            Rational x = need(coord_var_name(s.name, 'x'));
            Rational y2 = r2 - (x - o.x) * (x - o.x);
            if (y2.sign() < 0)
                throw DegenerateInstance("no intersection at the chosen abscissa for " + s.name);
            Rational root;
            if (!y2.sqrt_exact(root))
                throw DegenerateInstance("irrational ordinate for " + s.name +
                                         " at the chosen abscissa");
            pts.emplace(s.name, Pt{x, o.y + root});
            return;
        }
        // Rational rotation of the defining point keeps us exactly on the
        // circle for any parameter t.
        Rational t = draw_param();
        Rational u = Rational(1) + t * t;
        Rational rx = q.x - o.x, ry = q.y - o.y;
        Rational two(2);
        pts.emplace(s.name, Pt{o.x + ((Rational(1) - t * t) * rx - two * t * ry) / u,
                               o.y + (two * t * rx + (Rational(1) - t * t) * ry) / u});
    }

    void solve_on_line(const Step& s) {
        Pt a = line_point(s.args[0], 0), b = line_point(s.args[0], 1);
        auto hy = maybe(coord_var_name(s.name, 'y'));
        if (a.x == b.x) {
            auto hx = maybe(coord_var_name(s.name, 'x'));
            if (hx && *hx != a.x)
                throw DegenerateInstance("chosen abscissa misses the vertical line for " +
                                         s.name);
            if (hy) {
                pts.emplace(s.name, Pt{a.x, *hy});
                return;
            }
            if (rng) {
                pts.emplace(s.name, Pt{a.x, draw_value()});
                return;
            }
            throw DegenerateInstance("ordinate of " + s.name +
                                     " is undetermined on a vertical line");
        }
        Rational x = need(coord_var_name(s.name, 'x'));
        Rational y = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
        if (hy && *hy != y)
            throw std::invalid_argument("branch hint for " + s.name + " is off the line");
        pts.emplace(s.name, Pt{x, y});
    }

    Instance run() {
        for (const auto& s : c.steps) {
            switch (s.kind) {
            case StepKind::FreePoint:
                pts.emplace(s.name, Pt{need(coord_var_name(s.name, 'x')),
                                       need(coord_var_name(s.name, 'y'))});
                break;
            case StepKind::CircleCenterThrough:
                if (at(s.args[0]).x == at(s.args[1]).x && at(s.args[0]).y == at(s.args[1]).y)
                    throw DegenerateInstance("circle " + s.name + " has zero radius");
                pairs.emplace(s.name, std::make_pair(s.args[0], s.args[1]));
                break;
            case StepKind::LineThrough:
            case StepKind::SegmentOf:
                if (at(s.args[0]).x == at(s.args[1]).x && at(s.args[0]).y == at(s.args[1]).y)
                    throw DegenerateInstance("coincident defining points for " + s.name);
                pairs.emplace(s.name, std::make_pair(s.args[0], s.args[1]));
                break;
            case StepKind::PointOnCircle:
                solve_on_circle(s);
                break;
            case StepKind::PointOnLine:
                solve_on_line(s);
                break;
            case StepKind::ReflectPointOverLine: {
                Pt a = at(s.args[0]);
                Pt p = line_point(s.args[1], 0), q = line_point(s.args[1], 1);
                Rational dx = q.x - p.x, dy = q.y - p.y;
                Rational t = ((a.x - p.x) * dx + (a.y - p.y) * dy) / (dx * dx + dy * dy);
                Pt foot{p.x + t * dx, p.y + t * dy};
                pts.emplace(s.name,
                            Pt{Rational(2) * foot.x - a.x, Rational(2) * foot.y - a.y});
                break;
            }
            case StepKind::IntersectLines: {
                Pt p1 = line_point(s.args[0], 0), q1 = line_point(s.args[0], 1);
                Pt p2 = line_point(s.args[1], 0), q2 = line_point(s.args[1], 1);
                Rational d1x = q1.x - p1.x, d1y = q1.y - p1.y;
                Rational d2x = q2.x - p2.x, d2y = q2.y - p2.y;
                Rational det = d1x * d2y - d1y * d2x;
                if (det.is_zero())
                    throw DegenerateInstance("parallel lines meeting at " + s.name);
                Rational t = ((p2.x - p1.x) * d2y - (p2.y - p1.y) * d2x) / det;
                pts.emplace(s.name, Pt{p1.x + t * d1x, p1.y + t * d1y});
                break;
            }
            case StepKind::IntersectLineCircleOther: {
                Pt p = line_point(s.args[0], 0), q = line_point(s.args[0], 1);
                const auto& [oname, tname] = pairs.at(s.args[1]);
                Pt o = at(oname);
                Rational r2 = sq_dist(o, at(tname));
                Pt d = at(s.args[2]);
                if (sq_dist(o, d) != r2)
                    throw DegenerateInstance("known point " + s.args[2] +
                                             " is not on the circle");
                Rational dirx = q.x - p.x, diry = q.y - p.y;
                Rational offline = (d.x - p.x) * diry - (d.y - p.y) * dirx;
                if (!offline.is_zero())
                    throw DegenerateInstance("known point " + s.args[2] +
                                             " is not on the line");
                Rational den = dirx * dirx + diry * diry;
                Rational t = Rational(-2) * (dirx * (d.x - o.x) + diry * (d.y - o.y)) / den;
                if (t.is_zero())
                    throw DegenerateInstance("line tangent to circle at " + s.args[2] +
                                             "; no second intersection");
                pts.emplace(s.name, Pt{d.x + t * dirx, d.y + t * diry});
                break;
            }
            case StepKind::Midpoint: {
                Pt a = at(s.args[0]), b = at(s.args[1]);
                pts.emplace(s.name,
                            Pt{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)});
                break;
            }
            case StepKind::FootOfPerpendicular: {
                Pt a = at(s.args[0]);
                Pt p = line_point(s.args[1], 0), q = line_point(s.args[1], 1);
                Rational dx = q.x - p.x, dy = q.y - p.y;
                Rational t = ((a.x - p.x) * dx + (a.y - p.y) * dy) / (dx * dx + dy * dy);
                pts.emplace(s.name, Pt{p.x + t * dx, p.y + t * dy});
                break;
            }
            }
        }
        Instance out;
        for (const auto& [name, p] : pts) out.coords.emplace(name, std::make_pair(p.x, p.y));
        return out;
    }
};

} // namespace

Instance eval_numeric(const Construction& c, const std::map<std::string, Rational>& choice) {
    c.validate();
    Solver s{c, choice, nullptr, {}, {}};
    return s.run();
}

Instance sample_instance(const Construction& c, std::mt19937& rng,
                         const std::map<std::string, Rational>& fixed, int attempts) {
    c.validate();
    for (int i = 0; i < attempts; ++i) {
        Solver s{c, fixed, &rng, {}, {}};
        try {
            return s.run();
        } catch (const DegenerateInstance&) {
            continue;
        }
    }
    throw DegenerateInstance("no non-degenerate instance found after " +
                             std::to_string(attempts) + " attempts");
}

std::vector<Rational> ring_point(const AlgebraicSystem& sys, const Instance& inst,
                                 const Rational& aux) {
    std::vector<Rational> pt(sys.vars.size(), aux);
    for (const auto& [name, pc] : sys.points) {
        auto it = inst.coords.find(name);
        if (it == inst.coords.end()) continue;
        if (pc.x.is_var()) pt[static_cast<std::size_t>(pc.x.var)] = it->second.first;
        if (pc.y.is_var()) pt[static_cast<std::size_t>(pc.y.var)] = it->second.second;
    }
    return pt;
}

} // namespace geoprove
