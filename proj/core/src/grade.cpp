#include "geoprove/reasoner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace geoprove {

namespace {

/// Total degree over the counted (free and dependent) variables.  Auxiliary
/// variables, including the fallback's inversion variable, are scaffolding
/// and contribute nothing.
unsigned counted_degree(const Polynomial& p, const std::vector<bool>& counted) {
    unsigned best = 0;
    for (const auto& t : p.terms()) {
        unsigned d = 0;
        for (std::size_t v = 0; v < counted.size(); ++v)
            if (counted[v]) d += t.mono.exp(static_cast<int>(v));
        best = std::max(best, d);
    }
    return best;
}

GradeReport make_report(TrackedBasis tb, TrackedReduction red, Polynomial thesis,
                        bool fallback, const std::vector<bool>& counted) {
    GradeReport g;
    g.order_key = tb.order.key();
    g.used_fallback = fallback;
    g.basis_size = tb.elements.size();
    for (std::size_t i = 0; i < tb.elements.size(); ++i) {
        unsigned cof = 0;
        for (const auto& c : tb.cofactors[i])
            if (!c.is_zero()) cof = std::max(cof, counted_degree(c, counted));
        g.max_cofactor_degree = std::max(g.max_cofactor_degree, cof);
        const Polynomial& q = red.quotients[i];
        if (q.is_zero()) continue;
        unsigned qd = counted_degree(q, counted);
        g.max_multiplier_degree = std::max(g.max_multiplier_degree, qd);
        g.ledger.push_back({qd, cof});
        g.grade = std::max(g.grade, qd + cof);
    }
    g.thesis = std::move(thesis);
    g.basis = std::move(tb);
    g.reduction = std::move(red);
    return g;
}

MonomialOrder widen(const MonomialOrder& ord, std::size_t nv) {
    switch (ord.kind()) {
    case MonomialOrder::Kind::Lex: return MonomialOrder::lex(nv);
    case MonomialOrder::Kind::Grevlex: return MonomialOrder::grevlex(nv);
    default: throw std::invalid_argument("grade needs a lex or grevlex order");
    }
}

} // namespace

GradeReport grade(const AlgebraicSystem& sys, const MonomialOrder& ord,
                  const ResourceLimits& limits, const TraceFn& trace) {
    auto t0 = std::chrono::steady_clock::now();
    if (ord.nvars() != sys.vars.size())
        throw std::invalid_argument("grade: order does not match the system ring");
    widen(ord, ord.nvars());  // reject block orders up front

    ResourceLimits lim = limits;
    lim.deadline = limits.effective_deadline();

    auto stamp = [&](GradeReport g) {
        g.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return g;
    };

    std::vector<bool> counted(sys.vars.size() + 1, false);
    for (std::size_t v = 0; v < sys.vars.size(); ++v)
        counted[v] = sys.vars.kind(static_cast<int>(v)) != VarKind::Auxiliary;

    const Polynomial& thesis = sys.thesis;
    if (!sys.hypotheses.empty()) {
        TrackedBasis tb = buchberger_extended(sys.hypotheses, ord, lim, trace);
        TrackedReduction red = reduce_tracked(thesis, tb, lim);
        if (red.remainder.is_zero())
            return stamp(make_report(std::move(tb), std::move(red), thesis, false, counted));
    } else if (thesis.is_zero()) {
        GradeReport g;
        g.order_key = ord.key();
        g.thesis = thesis;
        g.basis.order = ord;
        g.reduction.remainder = Polynomial::zero(sys.vars.size());
        return stamp(g);
    }

    // Not a plain ideal member: saturate away the degenerate locus.  A TRUE
    // statement vanishes nowhere near thesis != 0, so the inverted thesis
    // does it; a conditional statement instead inverts the product of its
    // nondegeneracy conditions.
    ProofResult pr = prove(sys, lim, trace);
    std::size_t nb = sys.vars.size();
    std::size_t nv = nb + 1;
    MonomialOrder eord = widen(ord, nv);

    std::vector<Polynomial> gens;
    gens.reserve(sys.hypotheses.size() + 1);
    for (const auto& h : sys.hypotheses) gens.push_back(h.extended(nv));
    Polynomial wide = thesis.extended(nv);
    Polynomial w = Polynomial::variable(static_cast<int>(nb), nv);
    Polynomial one = Polynomial::constant(Rational(1), nv);

    if (pr.verdict == Verdict::True) {
        gens.push_back(wide * w - one);
    } else if (pr.verdict == Verdict::TrueUnderConditions) {
        Polynomial prod = one;
        for (const auto& c : pr.conditions) prod = prod * c.extended(nv);
        gens.push_back(prod * w - one);
    } else if (pr.verdict == Verdict::Unproved) {
        throw NotMemberError("statement is unproved; nothing to grade");
    } else {
        throw TimeoutError("proof attempt timed out while grading");
    }

    TrackedBasis tb = buchberger_extended(gens, eord, lim, trace);
    TrackedReduction red = reduce_tracked(wide, tb, lim);
    if (!red.remainder.is_zero())
        throw NotMemberError("thesis is outside the hypothesis ideal even after saturation");
    return stamp(make_report(std::move(tb), std::move(red), std::move(wide), true, counted));
}

} // namespace geoprove
