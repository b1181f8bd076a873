#include "geoprove/locus.hpp"

#include "geoprove/bipoly.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace geoprove {

namespace {

const MonomialOrder& ord2() {
    static const MonomialOrder o = MonomialOrder::grevlex(2);
    return o;
}

Polynomial mx() { return Polynomial::variable(0, 2); }
Polynomial my() { return Polynomial::variable(1, 2); }
Polynomial mc(const Rational& v) { return Polynomial::constant(v, 2); }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Rational coef_at(const Polynomial& p, unsigned ex, unsigned ey) {
    for (const auto& t : p.terms())
        if (t.mono.exp(0) == ex && t.mono.exp(1) == ey) return t.coef;
    return Rational(0);
}

ComponentKind shape_of(const Polynomial& p) {
    if (p.total_degree() == 1) return ComponentKind::Line;
    if (p.total_degree() == 2) {
        Rational cxx = coef_at(p, 2, 0), cyy = coef_at(p, 0, 2), cxy = coef_at(p, 1, 1);
        if (cxy.is_zero() && cxx == cyy && !cxx.is_zero()) return ComponentKind::Circle;
    }
    return ComponentKind::Other;
}

/// All rational solutions of a zero-dimensional system, found by peeling the
/// last variable of a lex basis.  Gives up (empty result) when the system is
/// not zero-dimensional over the rationals; callers re-verify every solution
/// anyway.
std::vector<std::vector<Rational>> solve_rational(const std::vector<Polynomial>& eqs_in,
                                                  const ResourceLimits& limits) {
    std::vector<Polynomial> eqs;
    for (const auto& e : eqs_in) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return {};
        eqs.push_back(e);
    }
    if (eqs.empty()) return {};
    std::size_t k = eqs.front().nvars();
    TrackedBasis gb =
        buchberger_extended(eqs, MonomialOrder::lex(k), limits, nullptr, nullptr, false);
    if (gb.contains_one()) return {};
    const Polynomial* best = nullptr;
    for (const auto& g : gb.elements) {
        bool uni = true;
        for (std::size_t i = 0; i + 1 < k && uni; ++i)
            if (g.degree(static_cast<int>(i)) != 0) uni = false;
        if (!uni) continue;
        if (!best || g.degree(static_cast<int>(k - 1)) < best->degree(static_cast<int>(k - 1)))
            best = &g;
    }
    if (!best) return {};
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rational_roots(coeffs_in(*best, k - 1))) {
        std::vector<Polynomial> sub;
        bool inconsistent = false;
        for (const auto& g : gb.elements) {
            Polynomial s = g.substitute(static_cast<int>(k - 1), Polynomial::constant(r, k));
            if (s.is_zero()) continue;
            if (s.is_constant()) {
                inconsistent = true;
                break;
            }
            sub.push_back(s);
        }
        if (inconsistent) continue;
        if (k == 1) {
            if (sub.empty()) out.push_back({r});
            continue;
        }
        if (sub.empty()) continue;
        std::vector<Polynomial> rsub;
        rsub.reserve(sub.size());
        for (const auto& s : sub) rsub.push_back(s.restricted(k - 1));
        for (auto sol : solve_rational(rsub, limits)) {
            sol.push_back(r);
            out.push_back(std::move(sol));
        }
    }
    return out;
}

/// Zero conditions on (b, c) for x + b y + c to divide p: substitute
/// x = -(b y + c) and collect the y-power coefficients.
std::vector<Polynomial> monic_x_line_eqs(const Polynomial& p) {
    Polynomial sub = -(Polynomial::variable(2, 4) * Polynomial::variable(1, 4) +
                       Polynomial::variable(3, 4));
    Polynomial r = p.extended(4).substitute(0, sub);
    std::map<unsigned, std::vector<Term>> buckets;
    for (const auto& t : r.terms()) {
        Monomial m = Monomial::unit(2, 0, t.mono.exp(2)) * Monomial::unit(2, 1, t.mono.exp(3));
        buckets[t.mono.exp(1)].push_back({t.coef, m});
    }
    std::vector<Polynomial> eqs;
    for (auto& [deg, ts] : buckets)
        eqs.push_back(Polynomial::from_terms(2, std::move(ts)));
    return eqs;
}

/// Zero conditions on c for y + c to divide p.
std::vector<Polynomial> horizontal_line_eqs(const Polynomial& p) {
    Polynomial r = p.extended(3).substitute(1, -Polynomial::variable(2, 3));
    std::map<unsigned, std::vector<Term>> buckets;
    for (const auto& t : r.terms())
        buckets[t.mono.exp(0)].push_back({t.coef, Monomial::unit(1, 0, t.mono.exp(2))});
    std::vector<Polynomial> eqs;
    for (auto& [deg, ts] : buckets)
        eqs.push_back(Polynomial::from_terms(1, std::move(ts)));
    return eqs;
}

/// Zero conditions on (d, e, f) for x^2 + y^2 + d x + e y + f to divide p:
/// reduce p modulo the would-be factor and collect the remainder's
/// coefficients.
std::vector<Polynomial> circle_eqs(const Polynomial& p, const ResourceLimits& limits) {
    auto v = [](int i) { return Polynomial::variable(i, 5); };
    Polynomial divisor = v(0) * v(0) + v(1) * v(1) + v(2) * v(0) + v(3) * v(1) + v(4);
    TrackedBasis tb;
    tb.generators = {divisor};
    tb.elements = {divisor};
    tb.cofactors = {{Polynomial::constant(Rational(1), 5)}};
    tb.order = MonomialOrder::lex(5);
    Polynomial r = reduce_tracked(p.extended(5), tb, limits).remainder;
    std::map<std::pair<unsigned, unsigned>, std::vector<Term>> buckets;
    for (const auto& t : r.terms()) {
        Monomial m = Monomial::unit(3, 0, t.mono.exp(2)) * Monomial::unit(3, 1, t.mono.exp(3)) *
                     Monomial::unit(3, 2, t.mono.exp(4));
        buckets[{t.mono.exp(0), t.mono.exp(1)}].push_back({t.coef, m});
    }
    std::vector<Polynomial> eqs;
    for (auto& [deg, ts] : buckets)
        eqs.push_back(Polynomial::from_terms(3, std::move(ts)));
    return eqs;
}

/// Projects a polynomial that only uses the two given ring variables into
/// the mover ring.
Polynomial to_mover_ring(const Polynomial& p, int ix, int iy) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        unsigned ex = 0, ey = 0;
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            unsigned e = t.mono.exp(static_cast<int>(v));
            if (e == 0) continue;
            if (static_cast<int>(v) == ix)
                ex = e;
            else if (static_cast<int>(v) == iy)
                ey = e;
            else
                throw std::logic_error("eliminated variable survived the projection");
        }
        ts.push_back({t.coef, Monomial::unit(2, 0, ex) * Monomial::unit(2, 1, ey)});
    }
    return Polynomial::from_terms(2, std::move(ts));
}

/// Lifts a mover-ring polynomial into a system ring at the mover's variable
/// slots.
Polynomial to_system_ring(const Polynomial& p, std::size_t nvars, int ix, int iy) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        Monomial m = Monomial::unit(nvars, ix, t.mono.exp(0)) *
                     Monomial::unit(nvars, iy, t.mono.exp(1));
        ts.push_back({t.coef, m});
    }
    return Polynomial::from_terms(nvars, std::move(ts));
}

std::string sort_text(const Polynomial& p) { return p.str({"x", "y"}); }

/// Shared validation for locus entry points: the mover must be an unpinned
/// free point and every other free point pinned, so the system's only free
/// variables are the mover's coordinates.
AlgebraicSystem locus_system(const Construction& c, const Predicate& pred,
                             const std::string& mover, const Pinning& pinning) {
    const Step* ms = c.find(mover);
    if (!ms || object_kind(ms->kind) != ObjKind::Point)
        throw std::invalid_argument("mover " + mover + " is not a point of the construction");
    if (ms->kind != StepKind::FreePoint)
        throw std::invalid_argument("mover " + mover + " must be a free point");
    if (pinning.count(mover))
        throw std::invalid_argument("mover " + mover + " must not be pinned");
    AlgebraicSystem sys = algebraize(c, pred, pinning);
    for (int v : sys.vars.indices_of(VarKind::Free)) {
        const std::string& n = sys.vars.name(v);
        if (n != coord_var_name(mover, 'x') && n != coord_var_name(mover, 'y'))
            throw std::invalid_argument("free coordinate " + n +
                                        " must be pinned for a locus run");
    }
    return sys;
}

} // namespace

std::string component_kind_name(ComponentKind k) {
    switch (k) {
    case ComponentKind::Line: return "LINE";
    case ComponentKind::Circle: return "CIRCLE";
    case ComponentKind::Other: return "OTHER";
    }
    throw std::logic_error("unhandled component kind");
}

std::string component_class_name(ComponentClass c) {
    switch (c) {
    case ComponentClass::Degenerate: return "DEGENERATE";
    case ComponentClass::Valid: return "VALID";
    case ComponentClass::Unknown: return "UNKNOWN";
    }
    throw std::logic_error("unhandled component class");
}

std::vector<Polynomial> geometry_candidates(const Construction& c, const std::string& mover,
                                            const Pinning& pinning) {
    AlgebraicSystem sys = algebraize_base(c, pinning);
    std::vector<std::pair<std::string, std::pair<Rational, Rational>>> fixed;
    for (const auto& s : c.steps) {
        if (object_kind(s.kind) != ObjKind::Point || s.name == mover) continue;
        const PointCoords& pc = sys.points.at(s.name);
        if (!pc.x.is_var() && !pc.y.is_var())
            fixed.emplace_back(s.name, std::make_pair(pc.x.value, pc.y.value));
    }
    std::vector<Polynomial> out;
    auto push = [&](Polynomial p) {
        if (p.is_zero() || p.is_constant()) return;
        p = p.normalized(ord2());
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    for (const auto& s : c.steps) {
        if (s.kind != StepKind::CircleCenterThrough) continue;
        const Rational *ox = nullptr, *oy = nullptr, *tx = nullptr, *ty = nullptr;
        for (const auto& [name, xy] : fixed) {
            if (name == s.args[0]) {
                ox = &xy.first;
                oy = &xy.second;
            }
            if (name == s.args[1]) {
                tx = &xy.first;
                ty = &xy.second;
            }
        }
        if (!ox || !tx) continue;
        Rational r2 = (*tx - *ox) * (*tx - *ox) + (*ty - *oy) * (*ty - *oy);
        push((mx() - mc(*ox)) * (mx() - mc(*ox)) + (my() - mc(*oy)) * (my() - mc(*oy)) -
             mc(r2));
    }
    for (std::size_t i = 0; i < fixed.size(); ++i)
        for (std::size_t j = i + 1; j < fixed.size(); ++j) {
            const auto& [px, py] = fixed[i].second;
            const auto& [qx, qy] = fixed[j].second;
            if (px == qx && py == qy) continue;
            push((mx() - mc(px)) * mc(qy - py) - (my() - mc(py)) * mc(qx - px));
        }
    for (std::size_t i = 0; i < fixed.size(); ++i)
        for (std::size_t j = i + 1; j < fixed.size(); ++j) {
            const auto& [px, py] = fixed[i].second;
            const auto& [qx, qy] = fixed[j].second;
            if (px == qx && py == qy) continue;
            Rational hx = (px + qx) / Rational(2), hy = (py + qy) / Rational(2);
            push((mx() - mc(hx)) * mc(qx - px) + (my() - mc(hy)) * mc(qy - py));
        }
    return out;
}

std::pair<std::vector<Component>, Polynomial>
extract_components(const Polynomial& p, const std::vector<Polynomial>& candidates) {
    if (p.nvars() != 2)
        throw std::invalid_argument("extract_components needs a two-variable ring");
    if (p.is_zero())
        throw std::invalid_argument("extract_components needs a nonzero polynomial");
    const ResourceLimits solver_budget = ResourceLimits::budget(10.0);
    Polynomial rest = p.normalized(ord2());
    std::vector<Component> comps;
    auto take = [&](const Polynomial& f) {
        if (rest.is_constant()) return false;
        Polynomial q;
        if (!try_divide(rest, f, q)) return false;
        Component cm;
        cm.poly = f.normalized(ord2());
        cm.kind = shape_of(cm.poly);
        comps.push_back(std::move(cm));
        rest = q.normalized(ord2());
        return true;
    };
    for (const auto& cand : candidates) {
        if (cand.nvars() != 2)
            throw std::invalid_argument("candidate lives in the wrong ring");
        if (cand.is_zero() || cand.is_constant()) continue;
        take(cand);
    }
    // Undetermined-coefficient searches absorb solver failures silently:
    // whatever is not recognized stays in the residual.
    if (!rest.is_constant()) {
        try {
            for (const auto& sol : solve_rational(horizontal_line_eqs(rest), solver_budget))
                take(my() + mc(sol[0]));
            for (const auto& sol : solve_rational(monic_x_line_eqs(rest), solver_budget))
                take(mx() + mc(sol[0]) * my() + mc(sol[1]));
            for (const auto& sol : solve_rational(circle_eqs(rest, solver_budget), solver_budget))
                take(mx() * mx() + my() * my() + mc(sol[0]) * mx() + mc(sol[1]) * my() +
                     mc(sol[2]));
        } catch (const TimeoutError&) {
        }
    }
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        if (a.poly.total_degree() != b.poly.total_degree())
            return a.poly.total_degree() < b.poly.total_degree();
        return sort_text(a.poly) < sort_text(b.poly);
    });
    Polynomial residual =
        rest.is_constant() ? Polynomial::constant(Rational(1), 2) : rest;
    return {std::move(comps), std::move(residual)};
}

std::vector<std::pair<Rational, Rational>> component_points(const Component& comp,
                                                            std::size_t count, unsigned seed) {
    const Polynomial& p = comp.poly;
    if (p.nvars() != 2)
        throw std::invalid_argument("component_points needs a two-variable ring");
    if (p.is_constant())
        throw std::invalid_argument("component_points needs a nonconstant polynomial");
    std::mt19937 rng(seed);
    auto draw = [&] {
        long num = static_cast<long>(rng() % 61) - 30;
        long den = static_cast<long>(rng() % 8) + 1;
        return Rational(num, den);
    };
    std::vector<std::pair<Rational, Rational>> pts;
    auto push = [&](const Rational& x, const Rational& y) {
        auto pt = std::make_pair(x, y);
        if (std::find(pts.begin(), pts.end(), pt) == pts.end()) pts.push_back(std::move(pt));
    };
    const std::size_t tries = 40 * count + 40;
    if (comp.kind == ComponentKind::Line) {
        Rational a = coef_at(p, 1, 0), b = coef_at(p, 0, 1), cc = coef_at(p, 0, 0);
        for (std::size_t i = 0; i < tries && pts.size() < count; ++i) {
            Rational t = draw();
            if (!b.is_zero())
                push(t, -(a * t + cc) / b);
            else
                push(-cc / a, t);
        }
    } else if (comp.kind == ComponentKind::Circle) {
        Rational lam = coef_at(p, 2, 0), d = coef_at(p, 1, 0), e = coef_at(p, 0, 1),
                 f = coef_at(p, 0, 0);
        std::optional<std::pair<Rational, Rational>> p0;
        for (std::size_t i = 0; i < tries && !p0; ++i) {
            Rational t = draw();
            Rational disc = e * e - Rational(4) * lam * (lam * t * t + d * t + f);
            Rational root;
            if (!disc.sqrt_exact(root)) continue;
            p0 = std::make_pair(t, (-e + root) / (Rational(2) * lam));
        }
        if (p0) {
            push(p0->first, p0->second);
            // Chords through the found point: the second intersection is
            // rational by Vieta, no radicals involved.
            for (std::size_t i = 0; i < tries && pts.size() < count; ++i) {
                Rational s = draw();
                Polynomial line =
                    mc(p0->second) + mc(s) * (mx() - mc(p0->first));
                Polynomial uni = p.substitute(1, line);
                auto cs = coeffs_in(uni, 0);
                if (cs.size() != 3 || cs[2].is_zero()) continue;
                Rational x1 = -cs[1] / cs[2] - p0->first;
                if (x1 == p0->first) continue;
                push(x1, p0->second + s * (x1 - p0->first));
            }
        }
    } else {
        for (std::size_t i = 0; i < tries && pts.size() < count; ++i) {
            Rational x0 = draw();
            Polynomial uni = p.substitute(0, mc(x0));
            if (uni.is_zero()) {
                push(x0, draw());
                continue;
            }
            if (uni.is_constant()) continue;
            for (const Rational& r : rational_roots(coeffs_in(uni, 1))) {
                push(x0, r);
                if (pts.size() >= count) break;
            }
        }
    }
    if (pts.size() > count) pts.resize(count);
    return pts;
}

Component classify_component(const Construction& c, const Predicate& pred,
                             const std::string& mover, const Pinning& pinning, Component comp,
                             const ResourceLimits& limits, std::size_t samples, unsigned seed) {
    comp.classification = ComponentClass::Unknown;
    comp.witness.reset();
    comp.proof.reset();
    AlgebraicSystem sys = locus_system(c, pred, mover, pinning);
    auto pts = component_points(comp, samples, seed);
    if (pts.size() < samples) return comp;
    std::map<std::string, Rational> base_choice;
    for (const auto& [name, xy] : pinning) {
        base_choice[coord_var_name(name, 'x')] = xy.first;
        base_choice[coord_var_name(name, 'y')] = xy.second;
    }
    std::size_t degenerate = 0, held = 0, failed = 0;
    std::optional<Instance> witness;
    for (const auto& [px, py] : pts) {
        auto choice = base_choice;
        choice[coord_var_name(mover, 'x')] = px;
        choice[coord_var_name(mover, 'y')] = py;
        Instance inst;
        try {
            inst = eval_numeric(c, choice);
        } catch (const DegenerateInstance&) {
            ++degenerate;
            continue;
        }
        // A coincidence of two named points is degeneracy even when every
        // step evaluates; the determinant theses vanish vacuously there.
        bool coincide = false;
        for (auto i = inst.coords.begin(); i != inst.coords.end() && !coincide; ++i)
            for (auto j = std::next(i); j != inst.coords.end(); ++j)
                if (i->second == j->second) {
                    coincide = true;
                    break;
                }
        if (coincide) {
            ++degenerate;
            continue;
        }
        if (sys.thesis.eval(ring_point(sys, inst)).is_zero()) {
            ++held;
            if (!witness) witness = inst;
        } else {
            ++failed;
        }
    }
    if (degenerate == pts.size()) {
        comp.classification = ComponentClass::Degenerate;
        return comp;
    }
    if (failed == 0 && held > 0) {
        comp.classification = ComponentClass::Valid;
        comp.witness = witness;
        if (comp.poly.total_degree() <= 2) {
            AlgebraicSystem esc = sys;
            int ix = sys.points.at(mover).x.var, iy = sys.points.at(mover).y.var;
            esc.hypotheses.push_back(
                to_system_ring(comp.poly, sys.vars.size(), ix, iy));
            comp.proof = prove(esc, limits);
        }
    }
    return comp;
}

LocusResult locus_equation(const Construction& c, const Predicate& pred,
                           const std::string& mover, const Pinning& pinning,
                           const ResourceLimits& limits, const TraceFn& trace) {
    auto t0 = std::chrono::steady_clock::now();
    LocusResult out;
    out.mover = mover;
    out.locus_poly = Polynomial::zero(2);
    out.residual = Polynomial::constant(Rational(1), 2);
    ResourceLimits shared = limits;
    shared.deadline = limits.effective_deadline();
    AlgebraicSystem sys = locus_system(c, pred, mover, pinning);
    if (sys.thesis.is_zero()) {
        out.empty_locus = true;
        out.time_ms = elapsed_ms(t0);
        return out;
    }
    std::vector<Polynomial> gens = sys.hypotheses;
    gens.push_back(sys.thesis);
    std::vector<int> drop = sys.vars.indices_of(VarKind::Dependent);
    for (int v : sys.vars.indices_of(VarKind::Auxiliary)) drop.push_back(v);
    std::vector<Polynomial> elim = eliminate(gens, drop, shared, trace);
    if (elim.empty()) {
        out.empty_locus = true;
        out.time_ms = elapsed_ms(t0);
        return out;
    }
    int ix = sys.points.at(mover).x.var, iy = sys.points.at(mover).y.var;
    std::vector<Polynomial> proj;
    for (const auto& g : elim) {
        Polynomial q = to_mover_ring(g, ix, iy).normalized(ord2());
        if (std::find(proj.begin(), proj.end(), q) == proj.end()) proj.push_back(std::move(q));
    }
    std::sort(proj.begin(), proj.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return sort_text(a) < sort_text(b);
    });
    Polynomial raw = proj.front();
    out.side_generators.assign(proj.begin() + 1, proj.end());
    if (raw.is_constant()) {
        // Inconsistent hypotheses: the locus is empty as a set, which is
        // still a definite answer, not an empty_locus plane.
        out.locus_poly = Polynomial::constant(Rational(1), 2);
        out.time_ms = elapsed_ms(t0);
        return out;
    }
    Polynomial sf = squarefree_part(raw);
    out.square_reduced = sf != raw;
    out.locus_poly = sf;
    auto [comps, residual] = extract_components(sf, geometry_candidates(c, mover, pinning));
    out.residual = std::move(residual);
    for (auto& cm : comps)
        out.components.push_back(
            classify_component(c, pred, mover, pinning, std::move(cm), shared));
    out.time_ms = elapsed_ms(t0);
    return out;
}

std::vector<std::vector<std::pair<double, double>>>
implicit_plot_data(const Polynomial& p, const BBox& bbox, int resolution) {
    if (p.nvars() != 2)
        throw std::invalid_argument("implicit_plot_data needs a two-variable ring");
    if (resolution < 2) throw std::invalid_argument("plot resolution must be at least 2");
    if (!(bbox.xmin < bbox.xmax) || !(bbox.ymin < bbox.ymax))
        throw std::invalid_argument("degenerate bounding box");
    const int n = resolution;
    const Rational dx = (bbox.xmax - bbox.xmin) / Rational(n);
    const Rational dy = (bbox.ymax - bbox.ymin) / Rational(n);
    std::vector<double> xs(static_cast<std::size_t>(n) + 1), ys(xs.size());
    std::vector<std::vector<double>> val(xs.size(), std::vector<double>(xs.size()));
    std::vector<std::vector<bool>> pos(xs.size(), std::vector<bool>(xs.size()));
    for (int i = 0; i <= n; ++i) {
        Rational x = bbox.xmin + dx * Rational(i);
        xs[static_cast<std::size_t>(i)] = x.to_double();
        for (int j = 0; j <= n; ++j) {
            Rational y = bbox.ymin + dy * Rational(j);
            if (i == 0) ys[static_cast<std::size_t>(j)] = y.to_double();
            Rational v = p.eval({x, y});
            val[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.to_double();
            pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.sign() >= 0;
        }
    }

    // Crossing points live on grid edges; sharing them by edge id makes the
    // chaining exact.  Horizontal edges are dir 0, vertical dir 1.
    struct EdgeId {
        int dir, i, j;
        bool operator<(const EdgeId& o) const {
            if (dir != o.dir) return dir < o.dir;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    auto interp = [](double a, double b) {
        double t = a - b == 0 ? 0.5 : a / (a - b);
        if (t < 0) t = 0;
        if (t > 1) t = 1;
        return t;
    };
    std::map<EdgeId, std::pair<double, double>> cross;
    auto crossing = [&](const EdgeId& id) -> std::pair<double, double> {
        auto it = cross.find(id);
        if (it != cross.end()) return it->second;
        std::size_t i = static_cast<std::size_t>(id.i), j = static_cast<std::size_t>(id.j);
        std::pair<double, double> pt;
        if (id.dir == 0) {
            double t = interp(val[i][j], val[i + 1][j]);
            pt = {xs[i] + t * (xs[i + 1] - xs[i]), ys[j]};
        } else {
            double t = interp(val[i][j], val[i][j + 1]);
            pt = {xs[i], ys[j] + t * (ys[j + 1] - ys[j])};
        }
        cross.emplace(id, pt);
        return pt;
    };

    std::vector<std::pair<EdgeId, EdgeId>> segments;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::size_t ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
            bool a = pos[ii][jj], b = pos[ii + 1][jj], cpos = pos[ii + 1][jj + 1],
                 d = pos[ii][jj + 1];
            EdgeId bottom{0, i, j}, top{0, i, j + 1}, left{1, i, j}, right{1, i + 1, j};
            std::vector<EdgeId> crossed;
            if (a != b) crossed.push_back(bottom);
            if (b != cpos) crossed.push_back(right);
            if (d != cpos) crossed.push_back(top);
            if (a != d) crossed.push_back(left);
            if (crossed.size() == 2) {
                segments.emplace_back(crossed[0], crossed[1]);
            } else if (crossed.size() == 4) {
                // Saddle: split by the center sign so the curve separates
                // the right pair of corners.
                double center =
                    (val[ii][jj] + val[ii + 1][jj] + val[ii + 1][jj + 1] + val[ii][jj + 1]) / 4;
                if ((center >= 0) == a) {
                    segments.emplace_back(bottom, right);
                    segments.emplace_back(top, left);
                } else {
                    segments.emplace_back(bottom, left);
                    segments.emplace_back(top, right);
                }
            }
        }

    std::map<EdgeId, std::vector<std::size_t>> at_edge;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        at_edge[segments[s].first].push_back(s);
        at_edge[segments[s].second].push_back(s);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<std::vector<std::pair<double, double>>> polylines;
    auto walk = [&](std::size_t start, const EdgeId& from) {
        std::vector<std::pair<double, double>> line;
        EdgeId cur = from;
        std::size_t seg = start;
        line.push_back(crossing(cur));
        while (true) {
            used[seg] = true;
            const auto& [u, v] = segments[seg];
            EdgeId next = (u < cur || cur < u) ? u : v;
            line.push_back(crossing(next));
            cur = next;
            std::size_t cont = segments.size();
            for (std::size_t cand : at_edge[cur])
                if (!used[cand]) {
                    cont = cand;
                    break;
                }
            if (cont == segments.size()) break;
            seg = cont;
        }
        polylines.push_back(std::move(line));
    };
    // Open curves first so boundary-to-boundary lines come out whole.
    for (const auto& [edge, segs] : at_edge)
        if (segs.size() == 1 && !used[segs.front()]) walk(segs.front(), edge);
    for (std::size_t s = 0; s < segments.size(); ++s)
        if (!used[s]) walk(s, segments[s].first);
    return polylines;
}

} // namespace geoprove
