#pragma once

#include <string>
#include <vector>

namespace geoprove {

enum class StepKind {
    FreePoint,
    PointOnCircle,
    PointOnLine,
    CircleCenterThrough,
    LineThrough,
    SegmentOf,
    ReflectPointOverLine,
    IntersectLines,
    IntersectLineCircleOther,
    Midpoint,
    FootOfPerpendicular,
};

enum class ObjKind { Point, Line, Circle, Segment };

/// One construction step.  `args` holds the referenced object names:
///   PointOnCircle:            {circle}
///   PointOnLine:              {line}
///   CircleCenterThrough:      {center point, through point}
///   LineThrough / SegmentOf:  {p, q}
///   ReflectPointOverLine:     {source point, mirror line}
///   IntersectLines:           {l1, l2}
///   IntersectLineCircleOther: {line, circle, known point}
///   Midpoint:                 {p, q}
///   FootOfPerpendicular:      {apex point, base line}
struct Step {
    StepKind kind;
    std::string name;
    std::vector<std::string> args;
    bool avoid_degenerate = false;
};

ObjKind object_kind(StepKind kind);

enum class PredKind { AreConcyclic, AreCollinear, EqualLength, ArePerpendicular, AreParallel };

/// `args` per kind: AreConcyclic 4 points; AreCollinear 3 points;
/// EqualLength 2 segments or 4 points; ArePerpendicular/AreParallel 2 lines
/// or segments.
struct Predicate {
    PredKind kind;
    std::vector<std::string> args;
};

struct Construction {
    std::vector<Step> steps;

    const Step* find(const std::string& name) const;
    /// Checks name uniqueness and that every reference names an earlier
    /// object of the right kind; throws std::invalid_argument otherwise.
    void validate() const;
};

/// Name of a point's coordinate variable, e.g. "D_x".
std::string coord_var_name(const std::string& point, char axis);

} // namespace geoprove
