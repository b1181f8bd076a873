#pragma once

#include "geoprove/instance.hpp"
#include "geoprove/locus.hpp"
#include "geoprove/reasoner.hpp"
#include "geoprove/script.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geoprove {

/// Outcome of one executed script command.
struct CommandResult {
    CommandKind kind;
    Predicate pred{PredKind::AreConcyclic, {}};
    std::string mover;
    std::optional<ProofResult> proof;
    /// Conditions rendered in the system's variable names.
    std::vector<std::string> conditions;
    std::optional<GradeReport> grade_report;
    std::optional<LocusResult> locus;
    std::optional<DiscoverResult> discovery;
    /// Variable names of the ring the command ran in, for serialization.
    std::vector<std::string> var_names;
    /// The operation ran out of budget before producing a result.
    bool timed_out = false;
    /// Failure note (e.g. a grading rejection); empty otherwise.
    std::string note;
    double time_ms = 0;
};

struct RunReport {
    std::string version;
    std::string command;
    std::string file;
    std::string order;
    double timeout_s = 60;
    std::vector<CommandResult> results;
};

/// The report as a single stable-keyed JSON document.  Absent values are
/// omitted entirely, never emitted as null; byte-identical across runs with
/// the same flags and seed except for the time_ms fields.
std::string emit_json(const RunReport& report);

/// Standalone SVG of the locus over the construction drawn at `instance`:
/// labeled construction points, base lines and circles, then the locus with
/// VALID components solid, DEGENERATE dashed and residual contours as
/// polylines.  An empty locus renders the annotation "locus: entire plane".
/// Throws invalid_argument on a degenerate bbox or nonpositive size.
std::string emit_svg(const LocusResult& locus, const Construction& c,
                     const Instance& instance, const BBox& bbox, int size);

/// Whole command-line tool: parses flags and the script, runs the selected
/// operation over the script's commands and writes text or JSON to `out`.
/// Exit code 0 when every command succeeded, 1 when an UNPROVED verdict or a
/// grading rejection is present, 2 on a timeout, 3 on usage, parse or I/O
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace geoprove
