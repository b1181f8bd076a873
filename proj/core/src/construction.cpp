#include "geoprove/construction.hpp"

#include <stdexcept>
#include <unordered_map>

namespace geoprove {

ObjKind object_kind(StepKind kind) {
    switch (kind) {
    case StepKind::CircleCenterThrough: return ObjKind::Circle;
    case StepKind::LineThrough: return ObjKind::Line;
    case StepKind::SegmentOf: return ObjKind::Segment;
    default: return ObjKind::Point;
    }
}

const Step* Construction::find(const std::string& name) const {
    for (const auto& s : steps)
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

const char* kind_word(ObjKind k) {
    switch (k) {
    case ObjKind::Point: return "point";
    case ObjKind::Line: return "line";
    case ObjKind::Circle: return "circle";
    case ObjKind::Segment: return "segment";
    }
    return "";
}

struct ArgSpec {
    std::size_t count;
    ObjKind kinds[3];
};

ArgSpec arg_spec(StepKind kind) {
    switch (kind) {
    case StepKind::FreePoint: return {0, {}};
    case StepKind::PointOnCircle: return {1, {ObjKind::Circle}};
    case StepKind::PointOnLine: return {1, {ObjKind::Line}};
    case StepKind::CircleCenterThrough: return {2, {ObjKind::Point, ObjKind::Point}};
    case StepKind::LineThrough: return {2, {ObjKind::Point, ObjKind::Point}};
    case StepKind::SegmentOf: return {2, {ObjKind::Point, ObjKind::Point}};
    case StepKind::ReflectPointOverLine: return {2, {ObjKind::Point, ObjKind::Line}};
    case StepKind::IntersectLines: return {2, {ObjKind::Line, ObjKind::Line}};
    case StepKind::IntersectLineCircleOther:
        return {3, {ObjKind::Line, ObjKind::Circle, ObjKind::Point}};
    case StepKind::Midpoint: return {2, {ObjKind::Point, ObjKind::Point}};
    case StepKind::FootOfPerpendicular: return {2, {ObjKind::Point, ObjKind::Line}};
    }
    return {0, {}};
}

} // namespace

void Construction::validate() const {
    std::unordered_map<std::string, ObjKind> defined;
    for (const auto& s : steps) {
        if (s.name.empty()) throw std::invalid_argument("unnamed construction step");
        if (defined.count(s.name))
            throw std::invalid_argument("duplicate object name: " + s.name);
        ArgSpec spec = arg_spec(s.kind);
        if (s.args.size() != spec.count)
            throw std::invalid_argument("wrong argument count for step " + s.name);
        for (std::size_t i = 0; i < spec.count; ++i) {
            auto it = defined.find(s.args[i]);
            if (it == defined.end())
                throw std::invalid_argument("step " + s.name + " references undefined object " +
                                            s.args[i]);
            if (it->second != spec.kinds[i])
                throw std::invalid_argument("step " + s.name + " expects a " +
                                            kind_word(spec.kinds[i]) + " but " + s.args[i] +
                                            " is a " + kind_word(it->second));
        }
        defined.emplace(s.name, object_kind(s.kind));
    }
}

std::string coord_var_name(const std::string& point, char axis) {
    return point + "_" + axis;
}

} // namespace geoprove
