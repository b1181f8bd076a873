#pragma once

#include "geoprove/construction.hpp"
#include "geoprove/polynomial.hpp"

#include <map>
#include <utility>

namespace geoprove {

/// A point coordinate in the algebraic model: a ring variable or a pinned
/// rational constant.
struct CoordRef {
    int var = -1;
    Rational value;
    bool is_var() const { return var >= 0; }
};

struct PointCoords {
    CoordRef x, y;
};

struct AlgebraicSystem {
    std::vector<Polynomial> hypotheses;
    Polynomial thesis;
    VariableTable vars;
    std::map<std::string, PointCoords> points;
    /// Defining point pair of every line, segment and circle (center, through).
    std::map<std::string, std::pair<std::string, std::string>> defs;

    /// The named point's coordinate as a polynomial of the system's ring.
    Polynomial coord(const std::string& point, char axis) const;
};

using Pinning = std::map<std::string, std::pair<Rational, Rational>>;

/// Compiles the construction and predicate into hypothesis polynomials and a
/// thesis polynomial.  Pinned free points become constants instead of
/// variables.  Deterministic: variables appear in construction order, x
/// before y.
AlgebraicSystem algebraize(const Construction& c, const Predicate& pred,
                           const Pinning& pinning = {});

/// The hypothesis side alone: same system with a zero thesis.
AlgebraicSystem algebraize_base(const Construction& c, const Pinning& pinning = {});

/// Thesis polynomial for one predicate over an already compiled system.
Polynomial predicate_thesis(const AlgebraicSystem& sys, const Construction& c,
                            const Predicate& pred);

} // namespace geoprove
