#include "fixtures.hpp"
#include "support.hpp"

#include <geoprove/bipoly.hpp>
#include <geoprove/locus.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace geoprove;

namespace {

Polynomial X() { return Polynomial::variable(0, 2); }
Polynomial Y() { return Polynomial::variable(1, 2); }
Polynomial K(long n) { return Polynomial::constant(Rational(n), 2); }

// The five fixed curves of the rhombus-free locus.
Polynomial line_bd() { return K(2) * X() + Y() - K(10); }
Polynomial line_ad() { return K(4) * X() - K(3) * Y(); }
Polynomial bisector() { return X() - K(2) * Y(); }
Polynomial bisector_shift() { return X() - K(2) * Y() + K(5); }
Polynomial circle_c() { return X() * X() + Y() * Y() - K(25); }

bool same_curve(const Polynomial& a, const Polynomial& b) {
    Polynomial q = Polynomial::zero(a.nvars());
    return try_divide(a, b, q) && q.is_constant();
}

} // namespace

TEST_CASE("geometry candidates for the pinned rhombus") {
    Construction c = testing::rhombus_free_construction();
    auto cands = geometry_candidates(c, "C", testing::rhombus_free_pinning());
    REQUIRE(cands.size() == 7);

    auto holds = [&](const Polynomial& want) {
        return std::any_of(cands.begin(), cands.end(),
                           [&](const Polynomial& p) { return same_curve(p, want); });
    };
    CHECK(holds(circle_c()));
    CHECK(holds(bisector()));     // perpendicular bisector of B and D
    CHECK(holds(line_bd()));
    CHECK(holds(line_ad()));
    CHECK(holds(Y()));            // line A B
}

TEST_CASE("extraction splits known products") {
    Polynomial p = bisector() * circle_c();
    auto [comps, residual] = extract_components(p, {bisector(), circle_c()});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].kind == ComponentKind::Line);
    CHECK(comps[0].poly == bisector());
    CHECK(comps[1].kind == ComponentKind::Circle);
    CHECK(comps[1].poly == circle_c());
    CHECK(residual.is_constant());
}

TEST_CASE("extraction finds line factors without candidates") {
    Polynomial p = (X() - K(1)) * (X() + K(1)) * (Y() - K(3));
    auto [comps, residual] = extract_components(p, {});
    REQUIRE(comps.size() == 3);
    for (const auto& comp : comps) CHECK(comp.kind == ComponentKind::Line);
    CHECK(residual.is_constant());
    Polynomial prod = comps[0].poly * comps[1].poly * comps[2].poly;
    CHECK(same_curve(prod, p));
}

TEST_CASE("extraction leaves irreducible cubics alone") {
    Polynomial p = Y() * Y() - X() * X() * X() + X();
    auto [comps, residual] = extract_components(p, {});
    CHECK(comps.empty());
    CHECK(same_curve(residual, p));
}

TEST_CASE("extraction reconstructs random products") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> small(-6, 6);
    std::uniform_int_distribution<int> coin(0, 1);
    int done = 0;
    while (done < 200) {
        // Distinct lines, occasionally a circle.
        std::vector<Polynomial> factors;
        int nlines = 2 + (done % 2);
        for (int i = 0; i < nlines; ++i) {
            long a = small(rng), b = small(rng), c = small(rng);
            if (a == 0 && b == 0) continue;
            factors.push_back(K(a) * X() + K(b) * Y() + K(c));
        }
        if (coin(rng)) {
            long d = small(rng), e = small(rng);
            factors.push_back(X() * X() + Y() * Y() + K(d) * X() + K(e) * Y() - K(9));
        }
        bool distinct = true;
        for (std::size_t i = 0; i < factors.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < factors.size() && distinct; ++j)
                if (!bivariate_gcd(factors[i], factors[j]).is_constant()) distinct = false;
        if (!distinct || factors.size() < 2) continue;

        Polynomial p = K(1);
        for (const auto& f : factors) p = p * f;

        // Hand over half the factors as candidates, let search find the rest.
        std::vector<Polynomial> cands;
        for (std::size_t i = 0; i < factors.size(); i += 2) cands.push_back(factors[i]);
        auto [comps, residual] = extract_components(p, cands);

        Polynomial prod = residual;
        unsigned deg = residual.is_constant() ? 0 : residual.total_degree();
        bool sorted = true;
        unsigned last = 0;
        for (const auto& comp : comps) {
            prod = prod * comp.poly;
            deg += comp.poly.total_degree();
            if (comp.poly.total_degree() < last) sorted = false;
            last = comp.poly.total_degree();
        }
        CHECK(same_curve(prod, p));
        CHECK(deg == p.total_degree());
        CHECK(sorted);
        ++done;
    }
}

TEST_CASE("component points satisfy their equations") {
    Component line;
    line.poly = bisector();
    line.kind = ComponentKind::Line;
    auto lp = component_points(line, 80);
    CHECK(lp.size() == 80);
    for (const auto& [x, y] : lp) CHECK(line.poly.eval({x, y}) == Rational(0));

    Component circle;
    circle.poly = circle_c();
    circle.kind = ComponentKind::Circle;
    auto cp = component_points(circle, 80);
    CHECK(cp.size() >= 40);
    for (const auto& [x, y] : cp) CHECK(circle.poly.eval({x, y}) == Rational(0));

    Component parabola;
    parabola.poly = X() * X() - Y();
    parabola.kind = ComponentKind::Other;
    auto pp = component_points(parabola, 60);
    CHECK(pp.size() >= 40);
    for (const auto& [x, y] : pp) CHECK(parabola.poly.eval({x, y}) == Rational(0));

    // Distinctness.
    auto uniq = lp;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    CHECK(uniq.size() == lp.size());
}

TEST_CASE("rhombus free locus comes out as the known sextic") {
    Construction c = testing::rhombus_free_construction();
    Predicate pred = testing::rhombus_free_predicate();
    LocusResult lr = locus_equation(c, pred, "C", testing::rhombus_free_pinning(),
                                    ResourceLimits::budget(240.0));

    CHECK(lr.mover == "C");
    CHECK_FALSE(lr.empty_locus);
    CHECK_FALSE(lr.square_reduced);
    CHECK(lr.side_generators.empty());
    CHECK(lr.residual.is_constant());
    CHECK(lr.time_ms > 0);

    REQUIRE_FALSE(lr.locus_poly.is_zero());
    CHECK(lr.locus_poly.total_degree() == 6);
    CHECK(is_squarefree(lr.locus_poly));

    // The sextic is exactly the product of four lines and the circle.
    Polynomial prod = line_bd() * line_ad() * bisector() * bisector_shift() * circle_c();
    CHECK(same_curve(lr.locus_poly, prod));

    REQUIRE(lr.components.size() == 5);
    CHECK(lr.components[0].poly == line_bd());
    CHECK(lr.components[1].poly == line_ad());
    CHECK(lr.components[2].poly == bisector());
    CHECK(lr.components[3].poly == bisector_shift());
    CHECK(lr.components[4].poly == circle_c());
    for (int i : {0, 1, 3}) CHECK(lr.components[i].kind == ComponentKind::Line);
    CHECK(lr.components[4].kind == ComponentKind::Circle);

    // Moving C on the circle or on the lines through the fixed points
    // degenerates the figure; the perpendicular bisector of BD is the
    // genuine locus branch.
    CHECK(lr.components[0].classification == ComponentClass::Degenerate);
    CHECK(lr.components[1].classification == ComponentClass::Degenerate);
    CHECK(lr.components[2].classification == ComponentClass::Valid);
    CHECK(lr.components[3].classification == ComponentClass::Degenerate);
    CHECK(lr.components[4].classification == ComponentClass::Degenerate);

    const Component& valid = lr.components[2];
    REQUIRE(valid.witness.has_value());
    auto at = valid.witness->coords.find("C");
    REQUIRE(at != valid.witness->coords.end());
    CHECK(at->second.first == Rational(2) * at->second.second);
    REQUIRE(valid.proof.has_value());
    CHECK(valid.proof->verdict == Verdict::TrueUnderConditions);
}

TEST_CASE("degenerate predicate gives the whole plane") {
    Construction c = testing::rhombus_free_construction();
    Predicate pred{PredKind::AreConcyclic, {"D", "D", "A", "S"}};
    LocusResult lr = locus_equation(c, pred, "C", testing::rhombus_free_pinning(),
                                    ResourceLimits::budget(60.0));
    CHECK(lr.empty_locus);
    CHECK(lr.locus_poly.is_zero());
    CHECK(lr.components.empty());
}

TEST_CASE("locus argument validation") {
    Construction c = testing::rhombus_free_construction();
    Predicate pred = testing::rhombus_free_predicate();
    Pinning pin = testing::rhombus_free_pinning();

    // Mover must exist, be free, and stay unpinned.
    CHECK_THROWS_AS(locus_equation(c, pred, "Q", pin), std::invalid_argument);
    CHECK_THROWS_AS(locus_equation(c, pred, "S", pin), std::invalid_argument);
    Pinning with_c = pin;
    with_c["C"] = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(locus_equation(c, pred, "C", with_c), std::invalid_argument);

    // Every other free coordinate needs a pin.
    Pinning partial = {{"A", {Rational(0), Rational(0)}}, {"B", {Rational(5), Rational(0)}}};
    CHECK_THROWS_AS(locus_equation(c, pred, "C", partial), std::invalid_argument);
}

TEST_CASE("classification of single components") {
    Construction c = testing::rhombus_free_construction();
    Predicate pred = testing::rhombus_free_predicate();
    Pinning pin = testing::rhombus_free_pinning();

    Component comp;
    comp.poly = bisector();
    comp.kind = ComponentKind::Line;
    Component out = classify_component(c, pred, "C", pin, comp);
    CHECK(out.classification == ComponentClass::Valid);
    CHECK(out.witness.has_value());

    Component bd;
    bd.poly = line_bd();
    bd.kind = ComponentKind::Line;
    CHECK(classify_component(c, pred, "C", pin, bd).classification ==
          ComponentClass::Degenerate);
}

TEST_CASE("implicit plot follows simple curves") {
    BBox box{Rational(-10), Rational(10), Rational(-10), Rational(10)};

    auto lines = implicit_plot_data(bisector(), box, 32);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].size() >= 8);
    for (const auto& [x, y] : lines[0]) CHECK(std::abs(x - 2 * y) < 1e-6);

    auto rings = implicit_plot_data(circle_c(), box, 48);
    REQUIRE(rings.size() == 1);
    CHECK(rings[0].size() >= 16);
    for (const auto& [x, y] : rings[0])
        CHECK(std::abs(std::hypot(x, y) - 5.0) < 0.5);
    double gap = std::hypot(rings[0].front().first - rings[0].back().first,
                            rings[0].front().second - rings[0].back().second);
    CHECK(gap < 1.5);

    CHECK(implicit_plot_data(X() * X() + Y() * Y() + K(1), box, 24).empty());

    BBox flat{Rational(0), Rational(0), Rational(-1), Rational(1)};
    CHECK_THROWS_AS(implicit_plot_data(bisector(), flat, 16), std::invalid_argument);
    CHECK_THROWS_AS(implicit_plot_data(bisector(), box, 1), std::invalid_argument);
}
