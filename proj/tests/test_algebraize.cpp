#include "fixtures.hpp"
#include "support.hpp"

#include <geoprove/algebraize.hpp>

#include <doctest.h>

using namespace geoprove;

TEST_CASE("rhombus system shape") {
    Construction c = testing::rhombus_construction();
    Pinning pin = {{"A", {Rational(0), Rational(0)}}};
    AlgebraicSystem sys = algebraize(c, testing::rhombus_predicate(), pin);

    CHECK(sys.vars.indices_of(VarKind::Free).size() == 3);
    CHECK(sys.vars.indices_of(VarKind::Dependent).size() == 7);
    CHECK(sys.vars.indices_of(VarKind::Auxiliary).empty());
    CHECK(sys.hypotheses.size() == 7);
    CHECK_FALSE(sys.thesis.is_zero());

    CHECK(sys.vars.index_of("B_x") >= 0);
    CHECK(sys.vars.index_of("D_x") >= 0);
    CHECK(sys.vars.kind(sys.vars.index_of("D_x")) == VarKind::Free);
    CHECK(sys.vars.kind(sys.vars.index_of("D_y")) == VarKind::Dependent);
    CHECK(sys.vars.index_of("A_x") == -1);
    CHECK_FALSE(sys.points.at("A").x.is_var());
    CHECK(sys.points.at("A").x.value == Rational(0));

    // Every dependent variable occurs in some hypothesis.
    for (int v : sys.vars.indices_of(VarKind::Dependent)) {
        bool seen = false;
        for (const auto& h : sys.hypotheses)
            if (h.degree(v) > 0) seen = true;
        CHECK(seen);
    }
}

TEST_CASE("pinning rules") {
    Construction c = testing::rhombus_construction();
    Predicate pred = testing::rhombus_predicate();
    // Constructed points cannot be pinned; unknown names are rejected.
    CHECK_THROWS_AS(algebraize(c, pred, {{"C", {Rational(3), Rational(4)}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(algebraize(c, pred, {{"Z", {Rational(0), Rational(0)}}}),
                    std::invalid_argument);

    AlgebraicSystem both = algebraize(c, pred, testing::standard_pinning());
    CHECK(both.vars.indices_of(VarKind::Free).size() == 1);
    CHECK(both.vars.size() == 8);

    // An on-circle point pins too; its membership equation becomes the
    // constant 0 and is dropped.
    Pinning full = testing::standard_pinning();
    full["D"] = {Rational(3), Rational(4)};
    AlgebraicSystem pinned = algebraize(c, pred, full);
    CHECK(pinned.vars.indices_of(VarKind::Free).empty());
    CHECK(pinned.hypotheses.size() == both.hypotheses.size() - 1);

    // A pin off the circle contradicts the membership equation.
    Pinning off = testing::standard_pinning();
    off["D"] = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(algebraize(c, pred, off), std::invalid_argument);
}

TEST_CASE("degenerate predicates vanish") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::FreePoint, "C", {}},
               {StepKind::SegmentOf, "s", {"A", "B"}}};

    CHECK(algebraize(c, {PredKind::AreConcyclic, {"A", "A", "B", "C"}}).thesis.is_zero());
    CHECK(algebraize(c, {PredKind::EqualLength, {"s", "s"}}).thesis.is_zero());
    CHECK(algebraize(c, {PredKind::AreCollinear, {"A", "B", "A"}}).thesis.is_zero());
}

TEST_CASE("determinant predicates are antisymmetric") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::FreePoint, "C", {}},
               {StepKind::FreePoint, "D", {}}};

    Polynomial col = algebraize(c, {PredKind::AreCollinear, {"A", "B", "C"}}).thesis;
    Polynomial swapped = algebraize(c, {PredKind::AreCollinear, {"B", "A", "C"}}).thesis;
    CHECK(swapped == -col);

    Polynomial cyc = algebraize(c, {PredKind::AreConcyclic, {"A", "B", "C", "D"}}).thesis;
    Polynomial cyc2 = algebraize(c, {PredKind::AreConcyclic, {"A", "C", "B", "D"}}).thesis;
    CHECK(cyc2 == -cyc);
}

TEST_CASE("perpendicular and parallel theses") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::FreePoint, "C", {}},
               {StepKind::LineThrough, "l", {"A", "B"}},
               {StepKind::LineThrough, "m", {"A", "C"}}};

    AlgebraicSystem perp = algebraize(c, {PredKind::ArePerpendicular, {"l", "m"}});
    // (B-A).(C-A) at A=(0,0), B=(1,2), C=(2,-1) is 1*2 + 2*(-1) = 0.
    std::vector<Rational> pt = {Rational(0), Rational(0), Rational(1),
                                Rational(2), Rational(2), Rational(-1)};
    CHECK(perp.thesis.eval(pt) == Rational(0));

    AlgebraicSystem par = algebraize(c, {PredKind::AreParallel, {"l", "m"}});
    std::vector<Rational> pt2 = {Rational(0), Rational(0), Rational(1),
                                 Rational(2), Rational(2), Rational(4)};
    CHECK(par.thesis.eval(pt2) == Rational(0));
    CHECK(par.thesis.eval(pt) != Rational(0));
}

TEST_CASE("equal length over four points") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::FreePoint, "C", {}}};
    AlgebraicSystem sys = algebraize(c, {PredKind::EqualLength, {"A", "B", "A", "C"}});
    // |AB| = |AC| at A=(0,0), B=(3,4), C=(5,0).
    std::vector<Rational> pt = {Rational(0), Rational(0), Rational(3),
                                Rational(4), Rational(5), Rational(0)};
    CHECK(sys.thesis.eval(pt) == Rational(0));
}

TEST_CASE("dangling references are rejected") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}}, {StepKind::FreePoint, "B", {}}};
    CHECK_THROWS_AS(algebraize(c, {PredKind::AreCollinear, {"A", "B", "Z"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(algebraize(c, {PredKind::ArePerpendicular, {"A", "B"}}),
                    std::invalid_argument);

    Construction bad;
    bad.steps = {{StepKind::FreePoint, "A", {}}, {StepKind::LineThrough, "l", {"A", "Z"}}};
    CHECK_THROWS_AS(algebraize(bad, {PredKind::AreCollinear, {"A", "A", "A"}}),
                    std::invalid_argument);
}

TEST_CASE("avoid-degenerate slack adds an auxiliary variable") {
    Construction c = testing::rhombus_construction();
    for (auto& s : c.steps)
        if (s.kind == StepKind::IntersectLineCircleOther) s.avoid_degenerate = true;
    AlgebraicSystem sys = algebraize(c, testing::rhombus_predicate());

    auto aux = sys.vars.indices_of(VarKind::Auxiliary);
    REQUIRE(aux.size() == 1);
    CHECK(sys.vars.name(aux[0]) == "E_w");
    CHECK(sys.hypotheses.size() == 8);
    bool uses_w = false;
    for (const auto& h : sys.hypotheses)
        if (h.degree(aux[0]) > 0) uses_w = true;
    CHECK(uses_w);
}

TEST_CASE("algebraize is deterministic") {
    Construction c = testing::rhombus_construction();
    AlgebraicSystem a = algebraize(c, testing::rhombus_predicate());
    AlgebraicSystem b = algebraize(c, testing::rhombus_predicate());
    CHECK(a.vars.names() == b.vars.names());
    CHECK(a.thesis == b.thesis);
    REQUIRE(a.hypotheses.size() == b.hypotheses.size());
    for (std::size_t i = 0; i < a.hypotheses.size(); ++i)
        CHECK(a.hypotheses[i] == b.hypotheses[i]);
}
