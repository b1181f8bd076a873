#pragma once

#include <geoprove/polynomial.hpp>
#include <geoprove/rational.hpp>

#include <random>

namespace geoprove::testing {

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_deg = 4) {
    Monomial m(nvars);
    std::uniform_int_distribution<int> var(0, static_cast<int>(nvars) - 1);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i) m = m * Monomial::unit(nvars, var(rng));
    return m;
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t nvars,
                                    unsigned max_terms = 6, unsigned max_deg = 4) {
    std::uniform_int_distribution<unsigned> nt(0, max_terms);
    std::vector<Term> terms;
    unsigned n = nt(rng);
    for (unsigned i = 0; i < n; ++i)
        terms.push_back({random_rational(rng), random_monomial(rng, nvars, max_deg)});
    return Polynomial::from_terms(nvars, std::move(terms));
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t nvars) {
    std::vector<Rational> p;
    p.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) p.push_back(random_rational(rng));
    return p;
}

} // namespace geoprove::testing
