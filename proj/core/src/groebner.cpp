#include "geoprove/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace geoprove {
namespace {

// Working representation: terms sorted ascending under the active order, so
// the leading term is back() and removing it is O(1).
struct OrdPoly {
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    const Term& leading() const { return t.back(); }
};

OrdPoly to_ord(const Polynomial& p, const MonomialOrder& ord) {
    OrdPoly r;
    r.t = p.terms();
    std::sort(r.t.begin(), r.t.end(),
              [&](const Term& a, const Term& b) { return ord.less(a.mono, b.mono); });
    return r;
}

// p -= c * m * g, merging two ascending term lists.
void sub_scaled(OrdPoly& p, const Rational& c, const Monomial& m, const OrdPoly& g,
                const MonomialOrder& ord) {
    std::vector<Term> scaled;
    scaled.reserve(g.t.size());
    for (const auto& t : g.t) scaled.push_back({-(c * t.coef), t.mono * m});

    std::vector<Term> out;
    out.reserve(p.t.size() + scaled.size());
    std::size_t i = 0, j = 0;
    while (i < p.t.size() && j < scaled.size()) {
        int cmp = ord.compare(p.t[i].mono, scaled[j].mono);
        if (cmp < 0) {
            out.push_back(std::move(p.t[i++]));
        } else if (cmp > 0) {
            out.push_back(std::move(scaled[j++]));
        } else {
            Rational s = p.t[i].coef + scaled[j].coef;
            if (!s.is_zero()) out.push_back({std::move(s), p.t[i].mono});
            ++i, ++j;
        }
    }
    while (i < p.t.size()) out.push_back(std::move(p.t[i++]));
    while (j < scaled.size()) out.push_back(std::move(scaled[j++]));
    p.t = std::move(out);
}

struct Clock {
    std::chrono::steady_clock::time_point deadline;
    std::size_t max_terms;

    void check_time() const {
        if (std::chrono::steady_clock::now() > deadline)
            throw TimeoutError("wall clock budget exceeded");
    }
    void check_terms(std::size_t n) const {
        if (n > max_terms) throw TimeoutError("term ceiling exceeded");
    }
};

// Full division of p by gs (skipping index `exclude`), with tail reduction.
// Leaves quotient terms per element in qt and the remainder in rem.
void divide(OrdPoly p, const std::vector<OrdPoly>& gs, const MonomialOrder& ord,
            const Clock& clock, std::vector<std::vector<Term>>& qt, OrdPoly& rem,
            std::size_t exclude = static_cast<std::size_t>(-1)) {
    qt.assign(gs.size(), {});
    rem.t.clear();
    std::size_t steps = 0;
    while (!p.is_zero()) {
        if ((++steps & 63u) == 0) clock.check_time();
        clock.check_terms(p.t.size());
        const Term& lead = p.leading();
        bool hit = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (i == exclude || gs[i].is_zero()) continue;
            const Term& lt = gs[i].leading();
            if (!lt.mono.divides(lead.mono)) continue;
            Rational c = lead.coef / lt.coef;
            Monomial m = lead.mono.divided_by(lt.mono);
            qt[i].push_back({c, m});
            sub_scaled(p, c, m, gs[i], ord);
            hit = true;
            break;
        }
        if (!hit) {
            rem.t.push_back(lead);
            p.t.pop_back();
        }
    }
    std::reverse(rem.t.begin(), rem.t.end());
}

// Scales g so it has coprime integer coefficients and a positive leading
// coefficient; the cofactor row is scaled identically.
void normalize_element(OrdPoly& g, std::vector<Polynomial>& row, std::size_t nvars) {
    Rational c = Polynomial::from_terms(nvars, g.t).content();
    Rational s = c.inverse();
    if (g.leading().coef.sign() < 0) s = -s;
    for (auto& t : g.t) t.coef *= s;
    for (auto& r : row) r = r.scaled(s);
}

struct Pair {
    int i, j;
    Monomial lcm;
};

std::string mono_str(const Monomial& m) {
    std::string s;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        unsigned e = m.exp(static_cast<int>(v));
        if (!e) continue;
        if (!s.empty()) s += '*';
        s += 'v' + std::to_string(v);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

} // namespace

bool TrackedBasis::contains_one() const {
    for (const auto& g : elements)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

TrackedReduction reduce_tracked(const Polynomial& p, const TrackedBasis& basis,
                                const ResourceLimits& limits) {
    if (p.nvars() != basis.order.nvars())
        throw std::invalid_argument("reduce_tracked: ring mismatch");
    for (const auto& g : basis.elements)
        if (g.nvars() != p.nvars())
            throw std::invalid_argument("reduce_tracked: ring mismatch");

    Clock clock{limits.effective_deadline(), limits.max_terms};
    std::vector<OrdPoly> gs;
    gs.reserve(basis.elements.size());
    for (const auto& g : basis.elements) gs.push_back(to_ord(g, basis.order));

    std::vector<std::vector<Term>> qt;
    OrdPoly rem;
    divide(to_ord(p, basis.order), gs, basis.order, clock, qt, rem);

    TrackedReduction out;
    out.quotients.reserve(gs.size());
    for (auto& q : qt) out.quotients.push_back(Polynomial::from_terms(p.nvars(), std::move(q)));
    out.remainder = Polynomial::from_terms(p.nvars(), std::move(rem.t));
    return out;
}

TrackedBasis buchberger_extended(const std::vector<Polynomial>& generators,
                                 const MonomialOrder& ord,
                                 const ResourceLimits& limits,
                                 const TraceFn& trace,
                                 const EarlyStopFn& stop,
                                 bool with_cofactors) {
    if (generators.empty())
        throw std::invalid_argument("buchberger_extended: empty generator list");
    std::size_t nvars = ord.nvars();
    for (const auto& h : generators)
        if (h.nvars() != nvars)
            throw std::invalid_argument("buchberger_extended: ring mismatch");

    Clock clock{limits.effective_deadline(), limits.max_terms};
    std::size_t m = generators.size();

    std::vector<OrdPoly> gs;
    std::vector<std::vector<Polynomial>> rows;
    auto partial = [&]() {
        TrackedBasis out;
        out.generators = generators;
        out.order = ord;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            out.elements.push_back(Polynomial::from_terms(nvars, gs[k].t));
            if (with_cofactors) out.cofactors.push_back(std::move(rows[k]));
        }
        return out;
    };
    std::size_t basis_terms = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (generators[j].is_zero()) continue;
        OrdPoly g = to_ord(generators[j], ord);
        std::vector<Polynomial> row;
        if (with_cofactors) {
            row.assign(m, Polynomial::zero(nvars));
            row[j] = Polynomial::constant(Rational(1), nvars);
        }
        normalize_element(g, row, nvars);
        basis_terms += g.t.size() + 1;
        gs.push_back(std::move(g));
        rows.push_back(std::move(row));
        if (stop && stop(Polynomial::from_terms(nvars, gs.back().t))) return partial();
    }

    std::vector<Pair> pending;
    std::set<std::pair<int, int>> pending_set;
    auto push_pair = [&](int i, int j) {
        const Monomial& a = gs[i].leading().mono;
        const Monomial& b = gs[j].leading().mono;
        if (a.coprime(b)) return;
        pending.push_back({i, j, Monomial::lcm(a, b)});
        pending_set.insert({i, j});
    };
    for (int j = 1; j < static_cast<int>(gs.size()); ++j)
        for (int i = 0; i < j; ++i) push_pair(i, j);

    std::size_t processed = 0;
    std::vector<std::vector<Term>> qt;
    OrdPoly rem;
    while (!pending.empty()) {
        clock.check_time();
        if (++processed > limits.max_pairs) throw TimeoutError("pair budget exceeded");

        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair& a = pending[k];
            const Pair& b = pending[best];
            int cmp = a.lcm.total_degree() != b.lcm.total_degree()
                          ? (a.lcm.total_degree() < b.lcm.total_degree() ? -1 : 1)
                          : ord.compare(a.lcm, b.lcm);
            if (cmp < 0 || (cmp == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        pending_set.erase({pr.i, pr.j});

        bool chained = false;
        for (int k = 0; k < static_cast<int>(gs.size()); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!gs[k].leading().mono.divides(pr.lcm)) continue;
            auto key = [](int a, int b) {
                return std::pair<int, int>(std::min(a, b), std::max(a, b));
            };
            if (!pending_set.count(key(pr.i, k)) && !pending_set.count(key(pr.j, k))) {
                chained = true;
                break;
            }
        }
        if (chained) {
            if (trace) trace("pair (" + std::to_string(pr.i) + "," + std::to_string(pr.j) +
                             ") skipped by chain criterion");
            continue;
        }

        Rational ci = Rational(1) / gs[pr.i].leading().coef;
        Rational cj = Rational(1) / gs[pr.j].leading().coef;
        Monomial ui = pr.lcm.divided_by(gs[pr.i].leading().mono);
        Monomial uj = pr.lcm.divided_by(gs[pr.j].leading().mono);

        OrdPoly s;
        s.t.reserve(gs[pr.i].t.size());
        for (const auto& t : gs[pr.i].t) s.t.push_back({t.coef * ci, t.mono * ui});
        sub_scaled(s, cj, uj, gs[pr.j], ord);

        divide(std::move(s), gs, ord, clock, qt, rem);

        if (rem.is_zero()) {
            if (trace) trace("pair (" + std::to_string(pr.i) + "," + std::to_string(pr.j) +
                             ") lcm " + mono_str(pr.lcm) + " reduced to 0");
            continue;
        }

        std::vector<Polynomial> row;
        if (with_cofactors) {
            row.assign(m, Polynomial::zero(nvars));
            for (std::size_t col = 0; col < m; ++col) {
                Polynomial acc =
                    rows[pr.i][col].multiplied_by(ci, ui) - rows[pr.j][col].multiplied_by(cj, uj);
                for (std::size_t k = 0; k < gs.size(); ++k) {
                    if (qt[k].empty()) continue;
                    acc -= Polynomial::from_terms(nvars, qt[k]) * rows[k][col];
                }
                row[col] = std::move(acc);
            }
        }
        OrdPoly fresh = rem;
        normalize_element(fresh, row, nvars);
        if (trace) trace("pair (" + std::to_string(pr.i) + "," + std::to_string(pr.j) +
                         ") lcm " + mono_str(pr.lcm) + " gave element " +
                         std::to_string(gs.size()) + " (" +
                         std::to_string(fresh.t.size()) + " terms)");
        basis_terms += fresh.t.size();
        for (const auto& r : row) basis_terms += r.term_count();
        gs.push_back(std::move(fresh));
        rows.push_back(std::move(row));
        clock.check_terms(basis_terms);
        if (stop && stop(Polynomial::from_terms(nvars, gs.back().t))) return partial();

        int fresh_idx = static_cast<int>(gs.size()) - 1;
        for (int i = 0; i < fresh_idx; ++i) push_pair(i, fresh_idx);
    }

    // Minimalize: drop every element whose leading monomial is divisible by
    // another live element's leading monomial.
    std::vector<bool> live(gs.size(), true);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Monomial& mi = gs[i].leading().mono;
        for (std::size_t j = 0; j < gs.size(); ++j) {
            if (i == j || !live[j]) continue;
            const Monomial& mj = gs[j].leading().mono;
            if (mj.divides(mi) && (mj != mi || j < i)) {
                live[i] = false;
                break;
            }
        }
    }

    // Tail-reduce survivors against each other, updating cofactors.  Leading
    // monomials are untouched, so one pass gives the reduced basis.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < gs.size(); ++i)
        if (live[i]) idx.push_back(i);
    std::vector<OrdPoly> survivors;
    survivors.reserve(idx.size());
    for (std::size_t i : idx) survivors.push_back(gs[i]);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        divide(survivors[a], survivors, ord, clock, qt, rem, a);
        if (with_cofactors) {
            for (std::size_t col = 0; col < m; ++col) {
                Polynomial acc = rows[idx[a]][col];
                for (std::size_t b = 0; b < idx.size(); ++b) {
                    if (qt[b].empty()) continue;
                    acc -= Polynomial::from_terms(nvars, qt[b]) * rows[idx[b]][col];
                }
                rows[idx[a]][col] = std::move(acc);
            }
        }
        survivors[a] = rem;
        normalize_element(survivors[a], rows[idx[a]], nvars);
    }

    std::vector<std::size_t> perm(idx.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(survivors[a].leading().mono, survivors[b].leading().mono);
    });

    TrackedBasis out;
    out.generators = generators;
    out.order = ord;
    for (std::size_t k : perm) {
        out.elements.push_back(Polynomial::from_terms(nvars, survivors[k].t));
        if (with_cofactors) out.cofactors.push_back(std::move(rows[idx[k]]));
    }
    return out;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& generators,
                                  const std::vector<int>& drop,
                                  const ResourceLimits& limits,
                                  const TraceFn& trace) {
    if (generators.empty()) return {};
    std::size_t nvars = generators.front().nvars();
    MonomialOrder ord = MonomialOrder::elimination(nvars, drop);
    TrackedBasis basis = buchberger_extended(generators, ord, limits, trace, nullptr, false);

    std::vector<Polynomial> out;
    for (const auto& g : basis.elements) {
        bool clean = true;
        for (int v : drop)
            if (g.degree(v) > 0) {
                clean = false;
                break;
            }
        if (clean) out.push_back(g);
    }
    return out;
}

} // namespace geoprove
