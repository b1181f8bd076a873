#pragma once

#include "geoprove/polynomial.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoprove {

/// Budget for basis computations.  `wall_seconds` is a per-call allowance;
/// when `deadline` is set it takes precedence, so nested calls can share one
/// clock.  Exceeding any bound raises TimeoutError.
struct ResourceLimits {
    double wall_seconds = 60.0;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::size_t max_terms = 2000000;
    std::size_t max_pairs = std::numeric_limits<std::size_t>::max();

    static ResourceLimits budget(double seconds) {
        ResourceLimits l;
        l.wall_seconds = seconds;
        return l;
    }
    static ResourceLimits until(std::chrono::steady_clock::time_point t) {
        ResourceLimits l;
        l.deadline = t;
        return l;
    }
    std::chrono::steady_clock::time_point effective_deadline() const {
        if (deadline) return *deadline;
        return std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(wall_seconds));
    }
};

class TimeoutError : public std::runtime_error {
public:
    explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

/// Groebner basis of <generators> carrying, for every basis element, its
/// exact expression in terms of the generators.
struct TrackedBasis {
    std::vector<Polynomial> generators;
    std::vector<Polynomial> elements;
    /// cofactors[i][j] with elements[i] = sum_j cofactors[i][j] * generators[j].
    std::vector<std::vector<Polynomial>> cofactors;
    MonomialOrder order = MonomialOrder::grevlex(0);

    bool contains_one() const;
};

/// Result of dividing p by a basis: p = sum_i quotients[i] * g_i + remainder.
struct TrackedReduction {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

using TraceFn = std::function<void(const std::string&)>;
/// Inspects each new basis element as it is adjoined; returning true stops
/// the computation early.
using EarlyStopFn = std::function<bool(const Polynomial&)>;

/// Full normal-form division of p by the basis elements under the basis
/// order.  The identity p = sum q_i g_i + r holds exactly and no monomial of
/// r is divisible by a leading monomial of the basis.
TrackedReduction reduce_tracked(const Polynomial& p, const TrackedBasis& basis,
                                const ResourceLimits& limits = {});

/// Extended Buchberger: computes an inter-reduced Groebner basis together
/// with the cofactor matrix.  Deterministic: normal pair selection (smallest
/// lcm first) with the product and chain criteria.
///
/// When `stop` returns true for a freshly adjoined element the partial basis
/// is returned as-is: its cofactor rows are still exact but it need not be a
/// Groebner basis and is not inter-reduced.
///
/// Passing with_cofactors = false skips the bookkeeping entirely and leaves
/// the cofactor matrix empty, which is substantially cheaper when only the
/// elements matter.
TrackedBasis buchberger_extended(const std::vector<Polynomial>& generators,
                                 const MonomialOrder& ord,
                                 const ResourceLimits& limits = {},
                                 const TraceFn& trace = nullptr,
                                 const EarlyStopFn& stop = nullptr,
                                 bool with_cofactors = true);

/// Generators of <generators> intersected with the subring omitting the
/// `drop` variables, via a block order with the dropped variables in front.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& generators,
                                  const std::vector<int>& drop,
                                  const ResourceLimits& limits = {},
                                  const TraceFn& trace = nullptr);

} // namespace geoprove
