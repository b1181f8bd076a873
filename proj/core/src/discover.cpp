#include "geoprove/instance.hpp"
#include "geoprove/reasoner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace geoprove {

std::string stage_name(FindingStage s) {
    return s == FindingStage::Proved ? "PROVED" : "NUMERIC_CANDIDATE";
}

std::string predicate_text(const Predicate& p) {
    std::string out;
    switch (p.kind) {
    case PredKind::AreConcyclic: out = "concyclic"; break;
    case PredKind::AreCollinear: out = "collinear"; break;
    case PredKind::EqualLength: out = "equallength"; break;
    case PredKind::ArePerpendicular: out = "perpendicular"; break;
    case PredKind::AreParallel: out = "parallel"; break;
    }
    for (const auto& a : p.args) {
        out += ' ';
        out += a;
    }
    return out;
}

namespace {

struct Candidate {
    Predicate pred;
    Polynomial thesis;
    std::size_t step = 0;
    std::string text;
};

} // namespace

DiscoverResult discover(const Construction& c, const DiscoverOptions& opts,
                        const ResourceLimits& limits, const TraceFn& trace) {
    auto t0 = std::chrono::steady_clock::now();
    c.validate();
    ResourceLimits lim = limits;
    lim.deadline = limits.effective_deadline();

    DiscoverResult out;
    // Confirm against the degeneracy-avoiding variant: a candidate like
    // "AS and BS have equal length" is false on the junk component where an
    // "other intersection" point coincides with its known point, even though
    // it holds at every honestly constructed instance.
    Construction cav = c;
    for (auto& s : cav.steps)
        if (s.kind == StepKind::IntersectLineCircleOther) s.avoid_degenerate = true;
    AlgebraicSystem base = algebraize_base(cav, opts.pinning);

    std::vector<std::string> pts;
    std::vector<std::string> dsegs;
    std::vector<std::string> linelike;
    std::map<std::string, std::size_t> step_of;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const Step& s = c.steps[i];
        step_of[s.name] = i;
        switch (object_kind(s.kind)) {
        case ObjKind::Point: pts.push_back(s.name); break;
        case ObjKind::Segment:
            dsegs.push_back(s.name);
            linelike.push_back(s.name);
            break;
        case ObjKind::Line: linelike.push_back(s.name); break;
        case ObjKind::Circle: break;
        }
    }

    // Three distinct exact instances for the numeric filter.
    std::mt19937 rng(opts.seed);
    std::map<std::string, Rational> fixed;
    for (const auto& [name, xy] : opts.pinning) {
        fixed[coord_var_name(name, 'x')] = xy.first;
        fixed[coord_var_name(name, 'y')] = xy.second;
    }
    std::vector<std::vector<Rational>> eval_pts;
    for (int tries = 0; tries < 40 && eval_pts.size() < 3; ++tries) {
        Instance inst = sample_instance(c, rng, fixed);
        auto rp = ring_point(base, inst);
        if (std::find(eval_pts.begin(), eval_pts.end(), rp) == eval_pts.end())
            eval_pts.push_back(std::move(rp));
    }
    if (eval_pts.size() < 3)
        throw DegenerateInstance("could not sample three distinct instances");

    // Candidate predicates over the constructed points.
    std::size_t n = pts.size();
    auto statable = [&](const std::vector<std::string>& names) {
        std::size_t st = 0;
        for (const auto& nm : names) st = std::max(st, step_of[nm]);
        return st;
    };
    std::vector<Candidate> cands;
    auto add = [&](PredKind kind, std::vector<std::string> args) {
        Predicate p{kind, std::move(args)};
        Candidate cd;
        cd.step = statable(p.args);
        cd.text = predicate_text(p);
        cd.pred = std::move(p);
        cands.push_back(std::move(cd));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                add(PredKind::AreCollinear, {pts[i], pts[j], pts[k]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    add(PredKind::AreConcyclic, {pts[i], pts[j], pts[k], pts[l]});
    auto ends = [&](const std::string& nm) { return base.defs.at(nm); };
    auto same_set = [&](const std::string& a, const std::string& b) {
        const auto& [p, q] = ends(a);
        const auto& [r, t] = ends(b);
        return (p == r && q == t) || (p == t && q == r);
    };
    auto share_point = [&](const std::string& a, const std::string& b) {
        const auto& [p, q] = ends(a);
        const auto& [r, t] = ends(b);
        return p == r || p == t || q == r || q == t;
    };
    if (dsegs.size() >= 2) {
        // Length comparisons over the drawn segments.
        for (std::size_t a = 0; a < dsegs.size(); ++a)
            for (std::size_t b = a + 1; b < dsegs.size(); ++b) {
                if (same_set(dsegs[a], dsegs[b])) continue;
                add(PredKind::EqualLength, {dsegs[a], dsegs[b]});
            }
    } else {
        // No segments drawn: fall back to all point pairs.
        std::vector<std::pair<std::size_t, std::size_t>> segs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) segs.emplace_back(i, j);
        for (std::size_t a = 0; a < segs.size(); ++a)
            for (std::size_t b = a + 1; b < segs.size(); ++b) {
                const auto& [i1, j1] = segs[a];
                const auto& [i2, j2] = segs[b];
                add(PredKind::EqualLength, {pts[i1], pts[j1], pts[i2], pts[j2]});
            }
    }
    for (std::size_t a = 0; a < linelike.size(); ++a)
        for (std::size_t b = a + 1; b < linelike.size(); ++b) {
            if (same_set(linelike[a], linelike[b])) continue;
            add(PredKind::ArePerpendicular, {linelike[a], linelike[b]});
            // Parallel objects sharing a point restate collinearity.
            if (!share_point(linelike[a], linelike[b]))
                add(PredKind::AreParallel, {linelike[a], linelike[b]});
        }

    // Keep the ones that vanish at every sampled instance.
    std::vector<Candidate> survivors;
    for (auto& cd : cands) {
        cd.thesis = predicate_thesis(base, cav, cd.pred);
        if (cd.thesis.is_zero()) continue;
        bool zero = true;
        for (const auto& pt : eval_pts)
            if (!cd.thesis.eval(pt).is_zero()) {
                zero = false;
                break;
            }
        if (zero) survivors.push_back(std::move(cd));
    }
    std::sort(survivors.begin(), survivors.end(), [](const Candidate& a, const Candidate& b) {
        return a.step != b.step ? a.step < b.step : a.text < b.text;
    });
    if (survivors.size() > opts.max_candidates) {
        survivors.resize(opts.max_candidates);
        out.truncated = true;
    }
    if (trace)
        trace("discover: " + std::to_string(cands.size()) + " candidates, " +
              std::to_string(survivors.size()) + " after the numeric filter");

    // Confirm survivors.  Direct ideal membership settles most of them with
    // a single shared basis; the rest get a full but pair-capped proof run.
    std::optional<TrackedBasis> tb;
    if (!base.hypotheses.empty()) {
        MonomialOrder ord = MonomialOrder::grevlex(base.vars.size());
        tb = buchberger_extended(base.hypotheses, ord, lim, trace);
    }
    auto now_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };
    for (std::size_t idx = 0; idx < survivors.size(); ++idx) {
        Candidate& cd = survivors[idx];
        if (std::chrono::steady_clock::now() >= *lim.deadline) {
            out.truncated = true;
            for (std::size_t r = idx; r < survivors.size(); ++r)
                out.findings.push_back({std::move(survivors[r].pred),
                                        FindingStage::NumericCandidate, std::nullopt,
                                        survivors[r].step});
            break;
        }
        Finding f{cd.pred, FindingStage::NumericCandidate, std::nullopt, cd.step};
        try {
            double ms0 = now_ms();
            bool member = false;
            if (tb) {
                TrackedReduction red = reduce_tracked(cd.thesis, *tb, lim);
                member = red.remainder.is_zero();
            }
            if (member) {
                ProofResult pr;
                pr.verdict = Verdict::True;
                pr.order_key = tb->order.key();
                pr.time_ms = now_ms() - ms0;
                f.stage = FindingStage::Proved;
                f.proof = std::move(pr);
            } else {
                AlgebraicSystem s2 = base;
                s2.thesis = cd.thesis;
                ResourceLimits slice = lim;
                slice.max_pairs = opts.pair_budget;
                ProofResult pr = prove(s2, slice, trace);
                if (pr.verdict == Verdict::True ||
                    pr.verdict == Verdict::TrueUnderConditions) {
                    f.stage = FindingStage::Proved;
                    f.proof = std::move(pr);
                }
            }
        } catch (const TimeoutError&) {
            // Stays a numeric candidate; the loop header decides whether the
            // overall budget is spent.
        }
        out.findings.push_back(std::move(f));
    }

    out.time_ms = now_ms();
    return out;
}

} // namespace geoprove
