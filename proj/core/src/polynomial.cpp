#include "geoprove/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace geoprove {

Polynomial Polynomial::zero(std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    return p;
}

Polynomial Polynomial::constant(const Rational& c, std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(nvars)});
    return p;
}

Polynomial Polynomial::variable(int var, std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    p.terms_.push_back({Rational(1), Monomial::unit(nvars, var)});
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    p.nvars_ = m.nvars();
    if (!c.is_zero()) p.terms_.push_back({c, m});
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p;
    p.nvars_ = nvars;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return cmp_grevlex(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_)
        if (t.mono.total_degree() > d) d = t.mono.total_degree();
    return d;
}

unsigned Polynomial::degree(int var) const {
    unsigned d = 0;
    for (const auto& t : terms_)
        if (t.mono.exp(var) > d) d = t.mono.exp(var);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    *this = *this + o;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    *this = *this - o;
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.nvars_ = a.nvars_;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = cmp_grevlex(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].coef + b.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({s, a.terms_[i].mono});
            ++i, ++j;
        }
    }
    while (i < a.terms_.size()) r.terms_.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) r.terms_.push_back(b.terms_[j++]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.nvars_ = a.nvars_;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            r.terms_.push_back({ta.coef * tb.coef, ta.mono * tb.mono});
    r.canonicalize();
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::multiplied_by(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return zero(nvars_);
    Polynomial r;
    r.nvars_ = nvars_;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coef * c, t.mono * m});
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(Rational(1), nvars_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

const Term& Polynomial::leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    Rational acc;
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < t.mono.exp(static_cast<int>(i)); ++e)
                v *= point[i];
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    unsigned maxe = degree(var);
    std::vector<Polynomial> powers;
    powers.reserve(maxe + 1);
    powers.push_back(constant(Rational(1), nvars_));
    for (unsigned e = 1; e <= maxe; ++e) powers.push_back(powers.back() * value);

    Polynomial acc = zero(nvars_);
    for (const auto& t : terms_) {
        unsigned e = t.mono.exp(var);
        Monomial rest(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            int v = static_cast<int>(i);
            if (v != var && t.mono.exp(v) > 0)
                rest = rest * Monomial::unit(nvars_, v, t.mono.exp(v));
        }
        acc += powers[e].multiplied_by(t.coef, rest);
    }
    return acc;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r;
    r.nvars_ = nvars_;
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = t.mono.exp(var);
        if (e == 0) continue;
        Monomial m = t.mono.divided_by(Monomial::unit(nvars_, var));
        out.push_back({t.coef * Rational(static_cast<long>(e)), m});
    }
    return from_terms(nvars_, std::move(out));
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num(0), den(1);
    for (const auto& t : terms_) {
        num = gcd(num, t.coef.numerator());
        den = lcm(den, t.coef.denominator());
    }
    return Rational(num, den);
}

Polynomial Polynomial::normalized(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    Rational c = content();
    Polynomial r = scaled(c.inverse());
    if (r.leading(ord).coef.sign() < 0) r = -r;
    return r;
}

Polynomial Polynomial::extended(std::size_t new_nvars) const {
    Polynomial r;
    r.nvars_ = new_nvars;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coef, t.mono.extended(new_nvars)});
    return r;
}

Polynomial Polynomial::restricted(std::size_t new_nvars) const {
    Polynomial r;
    r.nvars_ = new_nvars;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coef, t.mono.restricted(new_nvars)});
    return r;
}

std::size_t Polynomial::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& t : terms_) {
        h = h * 1099511628211ULL + t.coef.hash();
        h = h * 1099511628211ULL + t.mono.hash();
    }
    return h;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational mag = t.coef.abs();
        if (i == 0) {
            if (t.coef.sign() < 0) out += "-";
        } else {
            out += t.coef.sign() < 0 ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t v = 0; v < nvars_; ++v) {
            unsigned e = t.mono.exp(static_cast<int>(v));
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += vars;
        }
    }
    return out;
}

} // namespace geoprove
