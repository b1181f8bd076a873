#pragma once

#include "geoprove/monomial.hpp"
#include "geoprove/monomial_order.hpp"
#include "geoprove/rational.hpp"
#include "geoprove/variable_table.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geoprove {

struct Term {
    Rational coef;
    Monomial mono;
};

/// Sparse multivariate polynomial over the rationals.  Terms are kept in a
/// canonical form: sorted descending under grevlex, no zero coefficients, no
/// repeated monomials.  Equality, hashing and printing all read that form;
/// order-dependent operations take the order explicitly.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(std::size_t nvars);
    static Polynomial constant(const Rational& c, std::size_t nvars);
    static Polynomial variable(int var, std::size_t nvars);
    static Polynomial term(const Rational& c, const Monomial& m);
    /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    unsigned total_degree() const;
    unsigned degree(int var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial multiplied_by(const Rational& c, const Monomial& m) const;
    Polynomial pow(unsigned k) const;

    /// Largest term under the given order; polynomial must be nonzero.
    const Term& leading(const MonomialOrder& ord) const;

    Rational eval(const std::vector<Rational>& point) const;
    Polynomial substitute(int var, const Polynomial& value) const;
    Polynomial derivative(int var) const;

    /// Positive rational c with p/c integer and content-free; 0 for the zero
    /// polynomial.
    Rational content() const;
    /// Coprime integer coefficients, leading coefficient positive under ord.
    Polynomial normalized(const MonomialOrder& ord) const;
    /// Same polynomial in a ring with extra trailing variables.
    Polynomial extended(std::size_t new_nvars) const;
    /// Projects into a smaller ring; every dropped variable must be unused.
    Polynomial restricted(std::size_t new_nvars) const;

    bool operator==(const Polynomial& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    std::size_t hash() const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str(const VariableTable& vars) const { return str(vars.names()); }

private:
    void canonicalize();

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
inline Polynomial operator*(const Polynomial& p, const Rational& c) { return p.scaled(c); }

} // namespace geoprove
