#pragma once

#include <cstddef>
#include <vector>

namespace geoprove {

/// Power product of ring variables, stored as a dense exponent vector.
/// All monomials of one ring share the same vector length.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

    static Monomial unit(std::size_t nvars, int var, unsigned exp = 1);

    std::size_t nvars() const { return e_.size(); }
    unsigned exp(int var) const { return e_[static_cast<std::size_t>(var)]; }
    unsigned total_degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Quotient this / o; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    /// Same exponent vector with extra trailing variables set to zero.
    Monomial extended(std::size_t new_nvars) const;
    /// Drops trailing variables; they must all have exponent zero.
    Monomial restricted(std::size_t new_nvars) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    std::size_t hash() const;

private:
    std::vector<unsigned> e_;
    unsigned deg_ = 0;
};

/// Graded reverse lexicographic comparison over all variables, index 0 most
/// significant.  Returns +1 if a > b, -1 if a < b, 0 if equal.
int cmp_grevlex(const Monomial& a, const Monomial& b);

} // namespace geoprove
