#pragma once

#include "geoprove/algebraize.hpp"
#include "geoprove/construction.hpp"
#include "geoprove/rational.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geoprove {

class DegenerateInstance : public std::runtime_error {
public:
    explicit DegenerateInstance(const std::string& what) : std::runtime_error(what) {}
};

struct Instance {
    std::map<std::string, std::pair<Rational, Rational>> coords;
};

/// Solves the construction step by step in exact rational arithmetic.
/// `choice` must cover every free coordinate by variable name (e.g. "A_x");
/// it may also supply the dependent ordinate of an on-circle or on-line
/// point to pick a branch, in which case the value is verified exactly.
Instance eval_numeric(const Construction& c, const std::map<std::string, Rational>& choice);

/// Random non-degenerate instance.  Coordinates named in `fixed` are used
/// verbatim; the rest are drawn from the generator.  On-circle points are
/// produced by rational rotation of the circle's defining point, so no
/// square roots arise.  Throws DegenerateInstance after `attempts` failures.
Instance sample_instance(const Construction& c, std::mt19937& rng,
                         const std::map<std::string, Rational>& fixed = {},
                         int attempts = 100);

/// Instance coordinates arranged as a ring evaluation point for the system.
/// Auxiliary variables, which no instance carries, are filled with `aux`.
std::vector<Rational> ring_point(const AlgebraicSystem& sys, const Instance& inst,
                                 const Rational& aux = Rational(0));

} // namespace geoprove
