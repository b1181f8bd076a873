#include "geoprove/bipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace geoprove {

namespace {

const MonomialOrder& ord2() {
    static const MonomialOrder o = MonomialOrder::grevlex(2);
    return o;
}

void require_bivariate(const Polynomial& p, const char* who) {
    if (p.nvars() != 2)
        throw std::invalid_argument(std::string(who) + " needs a two-variable ring");
}

Polynomial from_coeffs(const std::vector<Rational>& c, int var, std::size_t nvars) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero())
            ts.push_back({c[k], Monomial::unit(nvars, var, static_cast<unsigned>(k))});
    return Polynomial::from_terms(nvars, std::move(ts));
}

std::vector<Rational> trim(std::vector<Rational> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

/// Euclidean remainder sequence on ascending coefficient vectors.
std::vector<Rational> vec_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Rational f = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] -= f * b[i];
            a = trim(std::move(a));
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

/// Coefficient of x^k as a polynomial in y alone.
Polynomial coeff_of_x(const Polynomial& p, unsigned k) {
    std::vector<Term> ts;
    for (const auto& t : p.terms())
        if (t.mono.exp(0) == k)
            ts.push_back({t.coef, Monomial::unit(2, 1, t.mono.exp(1))});
    return Polynomial::from_terms(2, std::move(ts));
}

Polynomial uni_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
    auto g = vec_gcd(coeffs_in(a, var), coeffs_in(b, var));
    if (g.empty()) return Polynomial::zero(2);
    return from_coeffs(g, static_cast<int>(var), 2).normalized(ord2());
}

/// gcd of the x-coefficients, a polynomial in y; zero only for the zero input.
Polynomial content_x(const Polynomial& p) {
    Polynomial g = Polynomial::zero(2);
    for (unsigned k = 0; k <= p.degree(0) && !p.is_zero(); ++k) {
        Polynomial c = coeff_of_x(p, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.normalized(ord2()) : uni_gcd(g, c, 1);
        if (g.is_constant()) return Polynomial::constant(Rational(1), 2);
    }
    return g;
}

Polynomial primitive_x(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial q;
    if (!try_divide(p, content_x(p), q))
        throw std::logic_error("content division failed");
    return q.normalized(ord2());
}

std::vector<Integer> divisors_of(Integer n, bool& complete) {
    n = abs(n);
    complete = true;
    std::vector<std::pair<Integer, unsigned>> fac;
    for (Integer d(2); d * d <= n && d < 100000; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        fac.emplace_back(d, e);
    }
    if (n > 1) {
        if (n >= Integer(100000) * Integer(100000)) complete = false;
        fac.emplace_back(n, 1);
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Integer pk(1);
        for (unsigned i = 1; i <= e && divs.size() <= 4096; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 4096) {
            complete = false;
            divs.resize(4096);
            break;
        }
    }
    return divs;
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

} // namespace

bool try_divide(const Polynomial& p, const Polynomial& d, Polynomial& quotient) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.nvars() != d.nvars()) throw std::invalid_argument("ring mismatch in division");
    const MonomialOrder ord = MonomialOrder::grevlex(p.nvars());
    const Term& lead_d = d.leading(ord);
    Polynomial r = p;
    Polynomial q = Polynomial::zero(p.nvars());
    while (!r.is_zero()) {
        const Term& lead_r = r.leading(ord);
        // A true multiple of d always has a leading term divisible by d's,
        // so one stuck term settles the question.
        if (!lead_d.mono.divides(lead_r.mono)) return false;
        Rational c = lead_r.coef / lead_d.coef;
        Monomial m = lead_r.mono.divided_by(lead_d.mono);
        q += Polynomial::term(c, m);
        r -= d.multiplied_by(c, m);
    }
    quotient = std::move(q);
    return true;
}

Polynomial bivariate_gcd(const Polynomial& a0, const Polynomial& b0) {
    require_bivariate(a0, "bivariate_gcd");
    require_bivariate(b0, "bivariate_gcd");
    if (a0.is_zero()) return b0.is_zero() ? b0 : b0.normalized(ord2());
    if (b0.is_zero()) return a0.normalized(ord2());
    Polynomial cg = uni_gcd(content_x(a0), content_x(b0), 1);
    Polynomial A = primitive_x(a0);
    Polynomial B = primitive_x(b0);
    if (A.degree(0) < B.degree(0)) std::swap(A, B);
    while (!B.is_zero() && B.degree(0) > 0) {
        // primitive pseudo-remainder step in x
        Polynomial R = A;
        Polynomial lcB = coeff_of_x(B, B.degree(0));
        while (!R.is_zero() && R.degree(0) >= B.degree(0)) {
            unsigned dr = R.degree(0);
            Polynomial lcR = coeff_of_x(R, dr);
            Polynomial shift =
                Polynomial::term(Rational(1), Monomial::unit(2, 0, dr - B.degree(0)));
            R = lcB * R - lcR * shift * B;
        }
        A = B;
        B = R.is_zero() ? R : primitive_x(R);
    }
    // A nonzero with positive x-degree keeps the x-part; a surviving B of
    // x-degree zero is a unit because it stayed x-primitive.
    Polynomial g = B.is_zero() ? A : Polynomial::constant(Rational(1), 2);
    return (g * cg).normalized(ord2());
}

Polynomial squarefree_part(const Polynomial& p) {
    require_bivariate(p, "squarefree_part");
    if (p.is_zero()) return p;
    if (p.is_constant()) return Polynomial::constant(Rational(1), 2);
    Polynomial c = content_x(p);
    Polynomial q;
    if (!try_divide(p, c, q))
        throw std::logic_error("content division failed");
    Polynomial c_sf = c;
    if (!c.is_constant()) {
        Polynomial g = uni_gcd(c, c.derivative(1), 1);
        if (!try_divide(c, g, c_sf))
            throw std::logic_error("squarefree division failed");
    }
    Polynomial q_sf = q;
    if (q.degree(0) > 0) {
        Polynomial g = bivariate_gcd(q, q.derivative(0));
        if (!try_divide(q, g, q_sf))
            throw std::logic_error("squarefree division failed");
    }
    return (c_sf * q_sf).normalized(ord2());
}

bool is_squarefree(const Polynomial& p) {
    require_bivariate(p, "is_squarefree");
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    Polynomial gx = bivariate_gcd(p, p.derivative(0));
    Polynomial gy = bivariate_gcd(p, p.derivative(1));
    return bivariate_gcd(gx, gy).is_constant();
}

std::vector<Rational> coeffs_in(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars())
        throw std::invalid_argument("coeffs_in: variable out of range");
    if (p.is_zero()) return {};
    std::vector<Rational> out(p.degree(static_cast<int>(var)) + 1, Rational(0));
    for (const auto& t : p.terms()) {
        if (t.mono.total_degree() != t.mono.exp(static_cast<int>(var)))
            throw std::invalid_argument("coeffs_in: polynomial is not univariate");
        out[t.mono.exp(static_cast<int>(var))] = t.coef;
    }
    return out;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    std::vector<Rational> c = trim(coeffs);
    std::vector<Rational> roots;
    if (c.size() <= 1) return roots;
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    }
    std::vector<Rational> cands;
    if (c.size() > 1) {
        Integer den(1);
        for (const auto& x : c) den = lcm(den, x.denominator());
        std::vector<Integer> v;
        v.reserve(c.size());
        for (const auto& x : c) v.push_back(x.numerator() * (den / x.denominator()));
        Integer g(0);
        for (const auto& x : v) g = gcd(g, x);
        for (auto& x : v) x /= g;
        bool c0 = false, cn = false;
        std::vector<Integer> d0 = divisors_of(v.front(), c0);
        std::vector<Integer> dn = divisors_of(v.back(), cn);
        if (d0.size() * dn.size() <= 20000) {
            for (const auto& p : d0)
                for (const auto& q : dn) {
                    cands.emplace_back(p, q);
                    cands.emplace_back(-p, q);
                }
        }
        // Height sweep backstop: catches small roots missed when the end
        // coefficients resist complete factoring.
        for (int num = -24; num <= 24; ++num)
            for (int dd = 1; dd <= 24; ++dd)
                if (num != 0) cands.emplace_back(Integer(num), Integer(dd));
        for (const auto& x : cands)
            if (horner(c, x).is_zero()) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace geoprove
