#pragma once

#include "geoprove/algebraize.hpp"
#include "geoprove/construction.hpp"
#include "geoprove/groebner.hpp"
#include "geoprove/instance.hpp"
#include "geoprove/reasoner.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geoprove {

enum class ComponentKind { Line, Circle, Other };
enum class ComponentClass { Degenerate, Valid, Unknown };

/// Wire name: "LINE", "CIRCLE", "OTHER".
std::string component_kind_name(ComponentKind k);
/// Wire name: "DEGENERATE", "VALID", "UNKNOWN".
std::string component_class_name(ComponentClass c);

/// One factor of a locus polynomial.  The polynomial lives in the mover's
/// two-variable ring, x coordinate first.
struct Component {
    Polynomial poly;
    ComponentKind kind = ComponentKind::Other;
    ComponentClass classification = ComponentClass::Unknown;
    /// Non-degenerate sampled instance where the thesis held; VALID only.
    std::optional<Instance> witness;
    /// Outcome of the symbolic escalation, when one was attempted.
    std::optional<ProofResult> proof;
};

struct LocusResult {
    std::string mover;
    /// The thesis was identically zero or the elimination ideal put no
    /// constraint on the mover: every position works and there is no curve.
    bool empty_locus = false;
    /// Square-free with coprime integer coefficients; zero iff empty_locus.
    Polynomial locus_poly;
    /// Set when removing square factors actually changed the generator.
    bool square_reduced = false;
    std::vector<Component> components;
    /// Unfactored remainder of locus_poly; 1 when the components cover it.
    Polynomial residual;
    /// Elimination ideal generators beyond the lowest-degree one, projected
    /// to the mover ring.
    std::vector<Polynomial> side_generators;
    double time_ms = 0;
};

/// Computes the curve of mover positions at which the predicate's algebraic
/// closure holds, with every other free point pinned to rationals.  The
/// thesis is adjoined as a hypothesis and all dependent and auxiliary
/// variables are eliminated; the square-free part of the lowest-degree
/// generator becomes locus_poly, which is then split into components and
/// each component classified.  Throws TimeoutError when the budget runs out
/// and invalid_argument when the mover is not an unpinned free point or some
/// other free point is left unpinned.
LocusResult locus_equation(const Construction& c, const Predicate& pred,
                           const std::string& mover, const Pinning& pinning,
                           const ResourceLimits& limits = {}, const TraceFn& trace = nullptr);

/// Candidate divisors read off the pinned construction, in the mover ring:
/// defined circles with fixed center and radius, then lines through every
/// pair of fixed points, then perpendicular bisectors of those pairs.
std::vector<Polynomial> geometry_candidates(const Construction& c, const std::string& mover,
                                            const Pinning& pinning);

/// Splits a square-free bivariate polynomial into known factors: trial
/// division by the candidates, then an undetermined-coefficient search for
/// line factors (normalizations x + b y + c and y + c), then the same for
/// circle factors x^2 + y^2 + d x + e y + f.  Whatever resists ends up in
/// the residual; components come back sorted by degree, then printed form.
std::pair<std::vector<Component>, Polynomial>
extract_components(const Polynomial& p, const std::vector<Polynomial>& candidates);

/// Rational points on the component curve: lines are parameterized directly,
/// circles by chords through one grid-found rational point, anything else by
/// scanning x over a seeded rational grid and solving for y exactly.  May
/// return fewer than `count` points; every returned point is an exact zero
/// of comp.poly.
std::vector<std::pair<Rational, Rational>>
component_points(const Component& comp, std::size_t count, unsigned seed = 1);

/// Samples the component and pins the mover at each sample: degeneracy at
/// every sample makes it DEGENERATE, a thesis that holds at all
/// non-degenerate samples makes it VALID with a witness, anything else is
/// UNKNOWN.  A forced coincidence of two named points counts as degenerate
/// even when the construction evaluates.  VALID line and circle components
/// are escalated to prove with comp.poly adjoined as a mover hypothesis.
Component classify_component(const Construction& c, const Predicate& pred,
                             const std::string& mover, const Pinning& pinning, Component comp,
                             const ResourceLimits& limits = {}, std::size_t samples = 5,
                             unsigned seed = 1);

struct BBox {
    Rational xmin, xmax, ymin, ymax;
};

/// Marching-squares contour of p over the box on an n-by-n cell grid.
/// Corner signs are exact; crossing positions are interpolated in doubles
/// since the output is cosmetic.  Returns chained polylines.
std::vector<std::vector<std::pair<double, double>>>
implicit_plot_data(const Polynomial& p, const BBox& bbox, int resolution);

} // namespace geoprove
