#include "geoprove/reasoner.hpp"

#include <chrono>

namespace geoprove {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::TrueUnderConditions: return "TRUE_UNDER_CONDITIONS";
    case Verdict::Unproved: return "UNPROVED";
    case Verdict::Timeout: return "TIMEOUT";
    }
    return "UNPROVED";
}

namespace {

/// The Rabinowitsch system: hypotheses plus thesis * z - 1 in a ring with
/// one extra variable, under a block order that eliminates everything but
/// the free variables.
struct Rab {
    std::vector<Polynomial> gens;
    MonomialOrder order = MonomialOrder::grevlex(0);
    std::size_t base_nvars = 0;
    std::vector<bool> is_free;
};

/// If some hypothesis is c*v + r with c a nonzero rational, v a dependent
/// variable and r free of v, substitute v throughout and drop the
/// hypothesis.  Midpoints and pinned feet dissolve this way, which shrinks
/// the elimination ring considerably.  The ideal's trace on the remaining
/// variables is unchanged, so verdicts and conditions are too.
void presolve(const AlgebraicSystem& sys, std::vector<Polynomial>& hyps, Polynomial& thesis) {
    std::size_t nb = sys.vars.size();
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t gi = 0; gi < hyps.size() && !again; ++gi) {
            const Polynomial& g = hyps[gi];
            for (std::size_t v = 0; v < nb; ++v) {
                if (sys.vars.kind(static_cast<int>(v)) != VarKind::Dependent) continue;
                Rational c;
                bool eligible = g.degree(static_cast<int>(v)) == 1;
                for (const auto& t : g.terms()) {
                    if (!eligible) break;
                    if (t.mono.exp(static_cast<int>(v)) == 0) continue;
                    if (t.mono.total_degree() != 1)
                        eligible = false;
                    else
                        c = t.coef;
                }
                if (!eligible || c.is_zero()) continue;
                Polynomial rest =
                    g - Polynomial::term(c, Monomial::unit(nb, static_cast<int>(v)));
                Polynomial repl = rest.scaled(-c.inverse());
                for (std::size_t k = 0; k < hyps.size(); ++k)
                    if (k != gi) hyps[k] = hyps[k].substitute(static_cast<int>(v), repl);
                thesis = thesis.substitute(static_cast<int>(v), repl);
                hyps.erase(hyps.begin() + static_cast<long>(gi));
                again = true;
                break;
            }
        }
    }
}

Rab build_rab(const AlgebraicSystem& sys) {
    std::size_t nb = sys.vars.size();
    std::size_t nv = nb + 1;
    Rab r;
    r.base_nvars = nb;
    r.is_free.assign(nb, false);
    std::vector<int> front;
    for (std::size_t i = 0; i < nb; ++i) {
        if (sys.vars.kind(static_cast<int>(i)) == VarKind::Free)
            r.is_free[i] = true;
        else
            front.push_back(static_cast<int>(i));
    }
    front.push_back(static_cast<int>(nb));
    r.order = MonomialOrder::elimination(nv, front);

    std::vector<Polynomial> hyps = sys.hypotheses;
    Polynomial thesis = sys.thesis;
    presolve(sys, hyps, thesis);

    r.gens.reserve(hyps.size() + 1);
    for (const auto& h : hyps) r.gens.push_back(h.extended(nv));
    Polynomial z = Polynomial::variable(static_cast<int>(nb), nv);
    r.gens.push_back(thesis.extended(nv) * z - Polynomial::constant(Rational(1), nv));
    return r;
}

ProofResult from_basis(const Rab& rab, const TrackedBasis& tb) {
    ProofResult r;
    r.order_key = rab.order.key();
    if (tb.contains_one()) {
        r.verdict = Verdict::True;
        return r;
    }
    for (const auto& g : tb.elements) {
        bool free_only = true;
        for (std::size_t v = 0; v < rab.base_nvars + 1 && free_only; ++v)
            if (g.degree(static_cast<int>(v)) > 0 &&
                (v >= rab.base_nvars || !rab.is_free[v]))
                free_only = false;
        if (free_only && !g.is_constant())
            r.conditions.push_back(g.restricted(rab.base_nvars));
    }
    r.verdict = r.conditions.empty() ? Verdict::Unproved : Verdict::TrueUnderConditions;
    return r;
}

ProofResult run_prove(const AlgebraicSystem& sys, const ResourceLimits& limits,
                      const TraceFn& trace, bool exhaustive) {
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    Rab rab = build_rab(sys);
    ResourceLimits lim = limits;
    lim.deadline = limits.effective_deadline();

    bool unit_seen = false;
    EarlyStopFn hook = [&](const Polynomial& g) {
        if (!g.is_zero() && g.is_constant()) {
            unit_seen = true;
            return !exhaustive;
        }
        return false;
    };

    ProofResult r;
    try {
        TrackedBasis tb = buchberger_extended(rab.gens, rab.order, lim, trace, hook, false);
        if (unit_seen) {
            r.verdict = Verdict::True;
            r.order_key = rab.order.key();
        } else {
            r = from_basis(rab, tb);
        }
    } catch (const TimeoutError&) {
        r.conditions.clear();
        r.order_key = rab.order.key();
        r.verdict = (exhaustive && unit_seen) ? Verdict::True : Verdict::Timeout;
    }
    r.time_ms = elapsed_ms();
    return r;
}

} // namespace

ProofResult prove(const AlgebraicSystem& sys, const ResourceLimits& limits,
                  const TraceFn& trace) {
    return run_prove(sys, limits, trace, false);
}

ProofResult prove_details(const AlgebraicSystem& sys, const ResourceLimits& limits,
                          const TraceFn& trace) {
    return run_prove(sys, limits, trace, true);
}

} // namespace geoprove
