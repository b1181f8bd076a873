#include "geoprove/script.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace geoprove {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\'')
            return false;
    return true;
}

const char* kind_word(ObjKind k) {
    switch (k) {
        case ObjKind::Point: return "point";
        case ObjKind::Line: return "line";
        case ObjKind::Circle: return "circle";
        case ObjKind::Segment: return "segment";
    }
    return "object";
}

class Parser {
public:
    Script parse(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        lineno_ = 0;
        while (std::getline(in, raw)) {
            ++lineno_;
            toks_ = tokenize(raw);
            if (toks_.empty()) continue;
            statement();
        }
        return std::move(script_);
    }

private:
    Script script_;
    std::map<std::string, ObjKind> declared_;
    std::vector<Token> toks_;
    int lineno_ = 0;

    [[noreturn]] void fail(const std::string& msg, int column) {
        throw ParseError(msg, lineno_, column);
    }

    const Token& tok(std::size_t i) {
        if (i >= toks_.size())
            fail("unexpected end of statement",
                 toks_.back().column + static_cast<int>(toks_.back().text.size()));
        return toks_[i];
    }

    void expect_word(std::size_t i, const std::string& word) {
        const Token& t = tok(i);
        if (t.text != word) fail("expected '" + word + "', got '" + t.text + "'", t.column);
    }

    void expect_end(std::size_t n) {
        if (toks_.size() > n)
            fail("unexpected token '" + toks_[n].text + "'", toks_[n].column);
    }

    std::string fresh_name(std::size_t i) {
        const Token& t = tok(i);
        if (!valid_name(t.text)) fail("invalid name '" + t.text + "'", t.column);
        if (declared_.count(t.text)) fail("duplicate name " + t.text, t.column);
        return t.text;
    }

    std::string ref(std::size_t i, ObjKind want) {
        const Token& t = tok(i);
        auto it = declared_.find(t.text);
        if (it == declared_.end()) fail("unknown identifier " + t.text, t.column);
        if (it->second != want)
            fail(t.text + " is a " + kind_word(it->second) + ", expected a " + kind_word(want),
                 t.column);
        return t.text;
    }

    ObjKind ref_kind(std::size_t i) {
        const Token& t = tok(i);
        auto it = declared_.find(t.text);
        if (it == declared_.end()) fail("unknown identifier " + t.text, t.column);
        return it->second;
    }

    void add_step(StepKind kind, std::string name, std::vector<std::string> args,
                  bool avoid = false) {
        declared_[name] = object_kind(kind);
        script_.construction.steps.push_back({kind, std::move(name), std::move(args), avoid});
    }

    void statement() {
        const std::string& head = toks_[0].text;
        if (head == "point") return point_stmt();
        if (head == "circle") return circle_stmt();
        if (head == "line") return through_stmt(StepKind::LineThrough);
        if (head == "segment") return through_stmt(StepKind::SegmentOf);
        if (head == "midpoint") return midpoint_stmt();
        if (head == "foot") return foot_stmt();
        if (head == "prove") return command_stmt(CommandKind::Prove);
        if (head == "details") return command_stmt(CommandKind::Details);
        if (head == "grade") return command_stmt(CommandKind::Grade);
        if (head == "locus") return locus_stmt();
        if (head == "discover") {
            expect_end(1);
            script_.commands.push_back({CommandKind::Discover, {}, ""});
            return;
        }
        fail("unknown statement '" + head + "'", toks_[0].column);
    }

    void point_stmt() {
        std::string name = fresh_name(1);
        const Token& how = tok(2);
        if (how.text == "free") {
            expect_end(3);
            add_step(StepKind::FreePoint, name, {});
        } else if (how.text == "on") {
            ObjKind k = ref_kind(3);
            expect_end(4);
            if (k == ObjKind::Circle)
                add_step(StepKind::PointOnCircle, name, {toks_[3].text});
            else if (k == ObjKind::Line)
                add_step(StepKind::PointOnLine, name, {toks_[3].text});
            else
                fail(toks_[3].text + " is a " + kind_word(k) + ", expected a circle or a line",
                     toks_[3].column);
        } else if (how.text == "reflect") {
            std::string src = ref(3, ObjKind::Point);
            expect_word(4, "over");
            std::string mirror = ref(5, ObjKind::Line);
            expect_end(6);
            add_step(StepKind::ReflectPointOverLine, name, {src, mirror});
        } else if (how.text == "intersect") {
            intersect_stmt(name);
        } else {
            fail("expected 'free', 'on', 'reflect' or 'intersect', got '" + how.text + "'",
                 how.column);
        }
    }

    void intersect_stmt(const std::string& name) {
        std::string first = ref(3, ObjKind::Line);
        ObjKind second = ref_kind(4);
        if (second == ObjKind::Line) {
            expect_end(5);
            add_step(StepKind::IntersectLines, name, {first, toks_[4].text});
        } else if (second == ObjKind::Circle) {
            expect_word(5, "other");
            std::string known = ref(6, ObjKind::Point);
            bool avoid = false;
            if (toks_.size() > 7 && toks_[7].text == "avoid") {
                avoid = true;
                expect_end(8);
            } else {
                expect_end(7);
            }
            add_step(StepKind::IntersectLineCircleOther, name, {first, toks_[4].text, known},
                     avoid);
        } else {
            fail(toks_[4].text + " is a " + kind_word(second) +
                 ", expected a line or a circle", toks_[4].column);
        }
    }

    void circle_stmt() {
        std::string name = fresh_name(1);
        expect_word(2, "center");
        std::string center = ref(3, ObjKind::Point);
        expect_word(4, "through");
        std::string through = ref(5, ObjKind::Point);
        expect_end(6);
        add_step(StepKind::CircleCenterThrough, name, {center, through});
    }

    void through_stmt(StepKind kind) {
        std::string name = fresh_name(1);
        std::string p = ref(2, ObjKind::Point);
        std::string q = ref(3, ObjKind::Point);
        expect_end(4);
        add_step(kind, name, {p, q});
    }

    void midpoint_stmt() {
        std::string name = fresh_name(1);
        std::string p = ref(2, ObjKind::Point);
        std::string q = ref(3, ObjKind::Point);
        expect_end(4);
        add_step(StepKind::Midpoint, name, {p, q});
    }

    void foot_stmt() {
        std::string name = fresh_name(1);
        std::string apex = ref(2, ObjKind::Point);
        std::string base = ref(3, ObjKind::Line);
        expect_end(4);
        add_step(StepKind::FootOfPerpendicular, name, {apex, base});
    }

    void command_stmt(CommandKind kind) {
        Command cmd{kind, predicate_from(1), ""};
        script_.commands.push_back(std::move(cmd));
    }

    void locus_stmt() {
        std::string mover = ref(1, ObjKind::Point);
        Command cmd{CommandKind::Locus, predicate_from(2), mover};
        script_.commands.push_back(std::move(cmd));
    }

    Predicate predicate_from(std::size_t i) {
        const Token& kw = tok(i);
        if (kw.text == "concyclic") {
            Predicate p{PredKind::AreConcyclic, {}};
            for (std::size_t j = 1; j <= 4; ++j) p.args.push_back(ref(i + j, ObjKind::Point));
            expect_end(i + 5);
            return p;
        }
        if (kw.text == "collinear") {
            Predicate p{PredKind::AreCollinear, {}};
            for (std::size_t j = 1; j <= 3; ++j) p.args.push_back(ref(i + j, ObjKind::Point));
            expect_end(i + 4);
            return p;
        }
        if (kw.text == "equallength") {
            // Two segments or four points.
            if (toks_.size() == i + 3) {
                Predicate p{PredKind::EqualLength,
                            {ref(i + 1, ObjKind::Segment), ref(i + 2, ObjKind::Segment)}};
                return p;
            }
            Predicate p{PredKind::EqualLength, {}};
            for (std::size_t j = 1; j <= 4; ++j) p.args.push_back(ref(i + j, ObjKind::Point));
            expect_end(i + 5);
            return p;
        }
        if (kw.text == "perpendicular" || kw.text == "parallel") {
            PredKind k = kw.text == "perpendicular" ? PredKind::ArePerpendicular
                                                    : PredKind::AreParallel;
            Predicate p{k, {}};
            for (std::size_t j = 1; j <= 2; ++j) {
                ObjKind got = ref_kind(i + j);
                if (got != ObjKind::Line && got != ObjKind::Segment)
                    fail(toks_[i + j].text + " is a " + kind_word(got) +
                         ", expected a line or a segment", toks_[i + j].column);
                p.args.push_back(toks_[i + j].text);
            }
            expect_end(i + 3);
            return p;
        }
        fail("unknown predicate '" + kw.text + "'", kw.column);
    }
};

} // namespace

std::string command_kind_name(CommandKind k) {
    switch (k) {
        case CommandKind::Prove: return "prove";
        case CommandKind::Details: return "details";
        case CommandKind::Locus: return "locus";
        case CommandKind::Grade: return "grade";
        case CommandKind::Discover: return "discover";
    }
    return "?";
}

bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.pred.kind == b.pred.kind && a.pred.args == b.pred.args &&
           a.mover == b.mover;
}

bool operator==(const Script& a, const Script& b) {
    if (a.commands != b.commands) return false;
    const auto& s = a.construction.steps;
    const auto& t = b.construction.steps;
    if (s.size() != t.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].kind != t[i].kind || s[i].name != t[i].name || s[i].args != t[i].args ||
            s[i].avoid_degenerate != t[i].avoid_degenerate)
            return false;
    return true;
}

Script parse_script(const std::string& text) { return Parser().parse(text); }

std::string pretty_print(const Script& s) {
    std::ostringstream out;
    for (const Step& st : s.construction.steps) {
        switch (st.kind) {
            case StepKind::FreePoint:
                out << "point " << st.name << " free\n";
                break;
            case StepKind::PointOnCircle:
            case StepKind::PointOnLine:
                out << "point " << st.name << " on " << st.args[0] << "\n";
                break;
            case StepKind::CircleCenterThrough:
                out << "circle " << st.name << " center " << st.args[0] << " through "
                    << st.args[1] << "\n";
                break;
            case StepKind::LineThrough:
                out << "line " << st.name << " " << st.args[0] << " " << st.args[1] << "\n";
                break;
            case StepKind::SegmentOf:
                out << "segment " << st.name << " " << st.args[0] << " " << st.args[1] << "\n";
                break;
            case StepKind::ReflectPointOverLine:
                out << "point " << st.name << " reflect " << st.args[0] << " over "
                    << st.args[1] << "\n";
                break;
            case StepKind::IntersectLines:
                out << "point " << st.name << " intersect " << st.args[0] << " " << st.args[1]
                    << "\n";
                break;
            case StepKind::IntersectLineCircleOther:
                out << "point " << st.name << " intersect " << st.args[0] << " " << st.args[1]
                    << " other " << st.args[2];
                if (st.avoid_degenerate) out << " avoid";
                out << "\n";
                break;
            case StepKind::Midpoint:
                out << "midpoint " << st.name << " " << st.args[0] << " " << st.args[1] << "\n";
                break;
            case StepKind::FootOfPerpendicular:
                out << "foot " << st.name << " " << st.args[0] << " " << st.args[1] << "\n";
                break;
        }
    }
    for (const Command& cmd : s.commands) {
        out << command_kind_name(cmd.kind);
        if (cmd.kind == CommandKind::Locus) out << " " << cmd.mover;
        if (cmd.kind != CommandKind::Discover) {
            switch (cmd.pred.kind) {
                case PredKind::AreConcyclic: out << " concyclic"; break;
                case PredKind::AreCollinear: out << " collinear"; break;
                case PredKind::EqualLength: out << " equallength"; break;
                case PredKind::ArePerpendicular: out << " perpendicular"; break;
                case PredKind::AreParallel: out << " parallel"; break;
            }
            for (const std::string& a : cmd.pred.args) out << " " << a;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace geoprove
