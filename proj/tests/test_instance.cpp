#include "fixtures.hpp"
#include "support.hpp"

#include <geoprove/algebraize.hpp>
#include <geoprove/instance.hpp>

#include <doctest.h>

#include <random>

using namespace geoprove;

TEST_CASE("rhombus instance solves exactly") {
    Construction c = testing::rhombus_construction();
    Instance inst = eval_numeric(c, testing::rhombus_choice());

    CHECK(inst.coords.at("C") == std::make_pair(Rational(8), Rational(4)));
    CHECK(inst.coords.at("E") == std::make_pair(Rational(-3), Rational(4)));
    CHECK(inst.coords.at("S") == std::make_pair(Rational(5, 2), Rational(5, 4)));

    // S lies on the circle through A, D, E: center (0, 25/8), radius 25/8.
    Rational cx(0), cy(25, 8);
    auto on = [&](const std::string& p) {
        auto [x, y] = inst.coords.at(p);
        return (x - cx) * (x - cx) + (y - cy) * (y - cy);
    };
    Rational r2 = Rational(625, 64);
    CHECK(on("A") == r2);
    CHECK(on("D") == r2);
    CHECK(on("E") == r2);
    CHECK(on("S") == r2);
}

TEST_CASE("thesis and hypotheses vanish on the solved instance") {
    Construction c = testing::rhombus_construction();
    AlgebraicSystem sys = algebraize(c, testing::rhombus_predicate());
    Instance inst = eval_numeric(c, testing::rhombus_choice());
    auto pt = testing::ring_point(sys, inst);

    for (const auto& h : sys.hypotheses) CHECK(h.eval(pt) == Rational(0));
    CHECK(sys.thesis.eval(pt) == Rational(0));

    // Negative control: A, B, D, C are not concyclic in this instance.
    AlgebraicSystem off = algebraize(c, {PredKind::AreConcyclic, {"A", "B", "D", "C"}});
    CHECK(off.thesis.eval(testing::ring_point(off, inst)) != Rational(0));
}

TEST_CASE("positive branch is taken without a hint") {
    Construction c = testing::rhombus_construction();
    auto choice = testing::rhombus_choice();
    choice.erase("D_y");
    Instance inst = eval_numeric(c, choice);
    CHECK(inst.coords.at("D") == std::make_pair(Rational(3), Rational(4)));
}

TEST_CASE("degenerate configurations are reported") {
    Construction c = testing::rhombus_construction();

    auto dset = [&](Rational dx, Rational dy) {
        auto choice = testing::rhombus_choice();
        choice["D_x"] = dx;
        choice["D_y"] = dy;
        return choice;
    };

    // D = B: the line through B and D is undefined.
    CHECK_THROWS_AS(eval_numeric(c, dset(Rational(5), Rational(0))), DegenerateInstance);

    // Abscissa outside the circle, and an irrational ordinate.
    auto off = testing::rhombus_choice();
    off.erase("D_y");
    off["D_x"] = Rational(6);
    CHECK_THROWS_AS(eval_numeric(c, off), DegenerateInstance);
    off["D_x"] = Rational(1);
    CHECK_THROWS_AS(eval_numeric(c, off), DegenerateInstance);

    // Hint off the circle is a caller error, not a degeneracy.
    CHECK_THROWS_AS(eval_numeric(c, dset(Rational(3), Rational(5))), std::invalid_argument);

    // Missing free coordinate.
    auto missing = testing::rhombus_choice();
    missing.erase("B_x");
    CHECK_THROWS_AS(eval_numeric(c, missing), std::invalid_argument);
}

TEST_CASE("parallel line intersection is degenerate") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::FreePoint, "C", {}},
               {StepKind::FreePoint, "D", {}},
               {StepKind::LineThrough, "l", {"A", "B"}},
               {StepKind::LineThrough, "m", {"C", "D"}},
               {StepKind::IntersectLines, "S", {"l", "m"}}};
    std::map<std::string, Rational> choice = {
        {"A_x", Rational(0)}, {"A_y", Rational(0)}, {"B_x", Rational(2)},
        {"B_y", Rational(1)}, {"C_x", Rational(0)}, {"C_y", Rational(5)},
        {"D_x", Rational(4)}, {"D_y", Rational(7)}};
    CHECK_THROWS_AS(eval_numeric(c, choice), DegenerateInstance);
}

TEST_CASE("midpoint and foot of perpendicular") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::FreePoint, "P", {}},
               {StepKind::LineThrough, "l", {"A", "B"}},
               {StepKind::Midpoint, "M", {"A", "B"}},
               {StepKind::FootOfPerpendicular, "F", {"P", "l"}}};
    std::map<std::string, Rational> choice = {
        {"A_x", Rational(0)}, {"A_y", Rational(0)}, {"B_x", Rational(4)},
        {"B_y", Rational(0)}, {"P_x", Rational(1)}, {"P_y", Rational(3)}};
    Instance inst = eval_numeric(c, choice);
    CHECK(inst.coords.at("M") == std::make_pair(Rational(2), Rational(0)));
    CHECK(inst.coords.at("F") == std::make_pair(Rational(1), Rational(0)));
}

TEST_CASE("sampled instances satisfy every hypothesis") {
    Construction c = testing::rhombus_construction();
    AlgebraicSystem sys = algebraize(c, testing::rhombus_predicate());
    std::mt19937 rng(321);
    for (int i = 0; i < 50; ++i) {
        Instance inst = sample_instance(c, rng);
        auto pt = testing::ring_point(sys, inst);
        for (const auto& h : sys.hypotheses) CHECK(h.eval(pt) == Rational(0));
        CHECK(sys.thesis.eval(pt) == Rational(0));
    }
}

TEST_CASE("sampling honors fixed coordinates") {
    Construction c = testing::rhombus_construction();
    std::mt19937 rng(99);
    std::map<std::string, Rational> fixed = {{"A_x", Rational(0)},
                                             {"A_y", Rational(0)},
                                             {"B_x", Rational(5)},
                                             {"B_y", Rational(0)}};
    for (int i = 0; i < 10; ++i) {
        Instance inst = sample_instance(c, rng, fixed);
        CHECK(inst.coords.at("A") == std::make_pair(Rational(0), Rational(0)));
        CHECK(inst.coords.at("B") == std::make_pair(Rational(5), Rational(0)));
        auto [dx, dy] = inst.coords.at("D");
        CHECK(dx * dx + dy * dy == Rational(25));
    }
}

TEST_CASE("point on line solves linearly") {
    Construction c;
    c.steps = {{StepKind::FreePoint, "A", {}},
               {StepKind::FreePoint, "B", {}},
               {StepKind::LineThrough, "l", {"A", "B"}},
               {StepKind::PointOnLine, "P", {"l"}}};
    std::map<std::string, Rational> choice = {
        {"A_x", Rational(0)}, {"A_y", Rational(1)}, {"B_x", Rational(2)},
        {"B_y", Rational(5)}, {"P_x", Rational(1)}};
    Instance inst = eval_numeric(c, choice);
    CHECK(inst.coords.at("P") == std::make_pair(Rational(1), Rational(3)));

    // Vertical line: the abscissa convention cannot pick the ordinate.
    choice["B_x"] = Rational(0);
    CHECK_THROWS_AS(eval_numeric(c, choice), DegenerateInstance);
}
