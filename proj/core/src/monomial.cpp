#include "geoprove/monomial.hpp"

#include <stdexcept>

namespace geoprove {

Monomial Monomial::unit(std::size_t nvars, int var, unsigned exp) {
    Monomial m(nvars);
    m.e_[static_cast<std::size_t>(var)] = exp;
    m.deg_ = exp;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    unsigned d = 0;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        d += r.e_[i];
    }
    r.deg_ = d;
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    unsigned d = 0;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
        d += r.e_[i];
    }
    r.deg_ = d;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
}

Monomial Monomial::extended(std::size_t new_nvars) const {
    Monomial r = *this;
    r.e_.resize(new_nvars, 0);
    return r;
}

Monomial Monomial::restricted(std::size_t new_nvars) const {
    for (std::size_t i = new_nvars; i < e_.size(); ++i)
        if (e_[i] != 0)
            throw std::invalid_argument("monomial uses a variable outside the target ring");
    Monomial r = *this;
    r.e_.resize(new_nvars);
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (unsigned x : e_) h = h * 1099511628211ULL + x;
    return h;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree())
        return a.total_degree() > b.total_degree() ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        unsigned ea = a.exp(static_cast<int>(i)), eb = b.exp(static_cast<int>(i));
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

} // namespace geoprove
