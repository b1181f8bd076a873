#pragma once

#include <geoprove/algebraize.hpp>
#include <geoprove/construction.hpp>
#include <geoprove/instance.hpp>

#include <map>
#include <string>
#include <vector>

namespace geoprove::testing {

// A rhombus ABCD built from A, B and a point D on the circle around A
// through B; C is the reflection of A over BD, E the second intersection of
// line CD with the circle, S the intersection of BE and AC.
inline Construction rhombus_construction() {
    Construction c;
    c.steps = {
        {StepKind::FreePoint, "A", {}},
        {StepKind::FreePoint, "B", {}},
        {StepKind::CircleCenterThrough, "c", {"A", "B"}},
        {StepKind::PointOnCircle, "D", {"c"}},
        {StepKind::LineThrough, "f", {"B", "D"}},
        {StepKind::ReflectPointOverLine, "C", {"A", "f"}},
        {StepKind::LineThrough, "g", {"C", "D"}},
        {StepKind::IntersectLineCircleOther, "E", {"g", "c", "D"}},
        {StepKind::LineThrough, "h", {"B", "E"}},
        {StepKind::LineThrough, "i", {"A", "C"}},
        {StepKind::IntersectLines, "S", {"h", "i"}},
        {StepKind::SegmentOf, "DA", {"D", "A"}},
        {StepKind::SegmentOf, "BA", {"B", "A"}},
        {StepKind::SegmentOf, "CB", {"C", "B"}},
        {StepKind::SegmentOf, "CD", {"C", "D"}},
        {StepKind::SegmentOf, "AS", {"A", "S"}},
        {StepKind::SegmentOf, "BS", {"B", "S"}},
        {StepKind::SegmentOf, "DS", {"D", "S"}},
    };
    return c;
}

inline Predicate rhombus_predicate() {
    return {PredKind::AreConcyclic, {"A", "S", "D", "E"}};
}

inline std::map<std::string, Rational> rhombus_choice() {
    return {{"A_x", Rational(0)}, {"A_y", Rational(0)}, {"B_x", Rational(5)},
            {"B_y", Rational(0)}, {"D_x", Rational(3)}, {"D_y", Rational(4)}};
}

inline Pinning standard_pinning() {
    return {{"A", {Rational(0), Rational(0)}}, {"B", {Rational(5), Rational(0)}}};
}

// Kite generalization: C is no longer the reflection of A but an arbitrary
// point of the perpendicular bisector of BD, reached as the line through A
// and the midpoint of BD (A lies on that bisector since |AB| = |AD|).
inline Construction kite_construction() {
    Construction c;
    c.steps = {
        {StepKind::FreePoint, "A", {}},
        {StepKind::FreePoint, "B", {}},
        {StepKind::CircleCenterThrough, "c", {"A", "B"}},
        {StepKind::PointOnCircle, "D", {"c"}},
        {StepKind::Midpoint, "M", {"B", "D"}},
        {StepKind::LineThrough, "p", {"A", "M"}},
        {StepKind::PointOnLine, "C", {"p"}},
        {StepKind::LineThrough, "g", {"C", "D"}},
        {StepKind::IntersectLineCircleOther, "E", {"g", "c", "D"}},
        {StepKind::LineThrough, "h", {"B", "E"}},
        {StepKind::LineThrough, "i", {"A", "C"}},
        {StepKind::IntersectLines, "S", {"h", "i"}},
    };
    return c;
}

inline Predicate kite_predicate() {
    return {PredKind::AreConcyclic, {"A", "S", "D", "E"}};
}

// Locus variant of the rhombus figure: C is a free mover instead of a
// reflection, and E carries the avoid-degenerate slack so the spurious E=D
// branch does not flood the elimination.
inline Construction rhombus_free_construction() {
    Construction c;
    c.steps = {
        {StepKind::FreePoint, "A", {}},
        {StepKind::FreePoint, "B", {}},
        {StepKind::CircleCenterThrough, "c", {"A", "B"}},
        {StepKind::PointOnCircle, "D", {"c"}},
        {StepKind::FreePoint, "C", {}},
        {StepKind::LineThrough, "g", {"C", "D"}},
        {StepKind::IntersectLineCircleOther, "E", {"g", "c", "D"}, true},
        {StepKind::LineThrough, "h", {"B", "E"}},
        {StepKind::LineThrough, "i", {"A", "C"}},
        {StepKind::IntersectLines, "S", {"h", "i"}},
    };
    return c;
}

inline Predicate rhombus_free_predicate() {
    return {PredKind::AreConcyclic, {"D", "E", "A", "S"}};
}

inline Pinning rhombus_free_pinning() {
    return {{"A", {Rational(0), Rational(0)}},
            {"B", {Rational(5), Rational(0)}},
            {"D", {Rational(3), Rational(4)}}};
}

// Thales-flavoured right triangle: C is the foot of the perpendicular from
// B onto line AP, M the midpoint of AB; then MC = MA.
inline Construction pythagoras_construction() {
    Construction c;
    c.steps = {
        {StepKind::FreePoint, "A", {}},
        {StepKind::FreePoint, "B", {}},
        {StepKind::FreePoint, "P", {}},
        {StepKind::LineThrough, "l", {"A", "P"}},
        {StepKind::FootOfPerpendicular, "C", {"B", "l"}},
        {StepKind::Midpoint, "M", {"A", "B"}},
    };
    return c;
}

inline Predicate pythagoras_predicate() {
    return {PredKind::EqualLength, {"M", "C", "M", "A"}};
}

inline Pinning pythagoras_pinning() {
    return {{"A", {Rational(0), Rational(0)}}, {"P", {Rational(1), Rational(0)}}};
}

// Partial nine-point configuration: side midpoints of triangle ABC plus the
// foot of the altitude from A; the four are concyclic.
inline Construction ninepoint_construction() {
    Construction c;
    c.steps = {
        {StepKind::FreePoint, "A", {}},
        {StepKind::FreePoint, "B", {}},
        {StepKind::FreePoint, "C", {}},
        {StepKind::Midpoint, "Ma", {"B", "C"}},
        {StepKind::Midpoint, "Mb", {"A", "C"}},
        {StepKind::Midpoint, "Mc", {"A", "B"}},
        {StepKind::LineThrough, "bc", {"B", "C"}},
        {StepKind::FootOfPerpendicular, "H", {"A", "bc"}},
    };
    return c;
}

inline Predicate ninepoint_predicate() {
    return {PredKind::AreConcyclic, {"Ma", "Mb", "Mc", "H"}};
}

using geoprove::ring_point;

} // namespace geoprove::testing
