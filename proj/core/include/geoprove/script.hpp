#pragma once

#include "geoprove/construction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace geoprove {

enum class CommandKind { Prove, Details, Locus, Grade, Discover };

/// Wire name: "prove", "details", "locus", "grade", "discover".
std::string command_kind_name(CommandKind k);

struct Command {
    CommandKind kind;
    /// Meaningless for Discover.
    Predicate pred{PredKind::AreConcyclic, {}};
    /// Locus only: the free point that sweeps the curve.
    std::string mover;
};

struct Script {
    Construction construction;
    std::vector<Command> commands;
};

bool operator==(const Command& a, const Command& b);
bool operator==(const Script& a, const Script& b);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parses a .geo script: one statement per line, `#` starts a comment,
/// whitespace separates tokens.  Construction statements:
///   point A free
///   point D on c            (c a circle or a line)
///   point C reflect A over f
///   point S intersect h i   (two lines)
///   point E intersect g c other D [avoid]
///   circle c center A through B
///   line f B D  /  segment s B D
///   midpoint M A B
///   foot H A g
/// Command statements:
///   prove|details|grade <predicate>
///   locus <mover> <predicate>
///   discover
/// with <predicate> one of concyclic P Q R S, collinear P Q R,
/// equallength s t (segments) or equallength A B C D (point pairs),
/// perpendicular f g, parallel f g (lines or segments).
/// Every name must be declared before use; errors carry line and column.
Script parse_script(const std::string& text);

/// Canonical text of a script; parse_script(pretty_print(s)) == s.
std::string pretty_print(const Script& s);

} // namespace geoprove
