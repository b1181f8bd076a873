#include "geoprove/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace geoprove {

namespace {

struct Flags {
    CommandKind mode = CommandKind::Prove;
    std::string file;
    Pinning pinning;
    std::string order = "grevlex";
    double timeout_s = 60;
    bool json = false;
    std::string svg_path;
    bool trace = false;
    unsigned seed = 1;
};

void parse_pin(const std::string& spec, Pinning& pinning) {
    auto eq = spec.find('=');
    auto comma = spec.find(',', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || comma == std::string::npos || eq == 0)
        throw std::invalid_argument("pin must look like NAME=x,y: " + spec);
    std::string name = spec.substr(0, eq);
    Rational x(spec.substr(eq + 1, comma - eq - 1));
    Rational y(spec.substr(comma + 1));
    pinning[name] = {x, y};
}

std::map<std::string, Rational> pinning_choice(const Pinning& pinning) {
    std::map<std::string, Rational> choice;
    for (const auto& [name, xy] : pinning) {
        choice[coord_var_name(name, 'x')] = xy.first;
        choice[coord_var_name(name, 'y')] = xy.second;
    }
    return choice;
}

/// A drawable instance for the SVG: the pinned points plus the mover placed
/// on the locus, preferring a VALID witness.
Instance figure_instance(const Construction& c, const Pinning& pinning,
                         const LocusResult& locus, const std::string& mover, unsigned seed) {
    std::map<std::string, Rational> base = pinning_choice(pinning);

    std::vector<std::pair<Rational, Rational>> spots;
    for (const Component& comp : locus.components)
        if (comp.classification == ComponentClass::Valid && comp.witness) {
            auto it = comp.witness->coords.find(mover);
            if (it != comp.witness->coords.end()) spots.push_back(it->second);
        }
    for (const Component& comp : locus.components) {
        auto pts = component_points(comp, 3, seed);
        spots.insert(spots.end(), pts.begin(), pts.end());
    }
    for (const auto& [x, y] : spots) {
        auto choice = base;
        choice[coord_var_name(mover, 'x')] = x;
        choice[coord_var_name(mover, 'y')] = y;
        try {
            return eval_numeric(c, choice);
        } catch (const DegenerateInstance&) {
        }
    }
    std::mt19937 rng(seed);
    try {
        return sample_instance(c, rng, base);
    } catch (const DegenerateInstance&) {
        return {};
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double now_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::True:
        case Verdict::TrueUnderConditions: return 0;
        case Verdict::Unproved: return 1;
        case Verdict::Timeout: return 2;
    }
    return 3;
}

void render_text(const RunReport& report, std::ostream& out) {
    for (const CommandResult& r : report.results) {
        if (r.proof) {
            out << verdict_name(r.proof->verdict) << "\n";
            for (const std::string& cond : r.conditions) out << "condition: " << cond << "\n";
        }
        if (r.grade_report) {
            const GradeReport& g = *r.grade_report;
            out << "grade " << g.grade << "\n";
            out << "basis size " << g.basis_size << ", max multiplier degree "
                << g.max_multiplier_degree << ", max cofactor degree "
                << g.max_cofactor_degree;
            if (g.used_fallback) out << " (extended generators)";
            out << "\n";
        }
        if (r.locus) {
            const LocusResult& l = *r.locus;
            if (l.empty_locus) {
                out << "locus: entire plane\n";
            } else {
                out << "locus of " << r.mover << ": degree " << l.locus_poly.total_degree()
                    << "\n";
                out << "  " << l.locus_poly.str(r.var_names) << "\n";
                for (const Component& comp : l.components)
                    out << "  " << component_kind_name(comp.kind) << " "
                        << comp.poly.str(r.var_names) << "  "
                        << component_class_name(comp.classification) << "\n";
                if (!l.residual.is_constant())
                    out << "  residual " << l.residual.str(r.var_names) << "\n";
            }
        }
        if (r.discovery) {
            out << "found " << r.discovery->findings.size() << ":\n";
            for (const Finding& f : r.discovery->findings) {
                out << "  " << predicate_text(f.predicate) << "  [" << stage_name(f.stage);
                if (f.proof) out << " " << verdict_name(f.proof->verdict);
                out << "]\n";
            }
            if (r.discovery->truncated) out << "  (truncated)\n";
        }
        if (r.timed_out) out << "TIMEOUT\n";
        if (!r.note.empty()) out << r.note << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    if (const char* env = std::getenv("GEOPROVE_TIMEOUT")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0) f.timeout_s = v;
    }

    CLI::App app{"exact geometry theorem prover"};
    app.require_subcommand(1);
    std::vector<std::string> pin_specs;
    const std::pair<const char*, CommandKind> modes[] = {
        {"prove", CommandKind::Prove},     {"details", CommandKind::Details},
        {"locus", CommandKind::Locus},     {"grade", CommandKind::Grade},
        {"discover", CommandKind::Discover},
    };
    const std::map<std::string, std::string> blurb = {
        {"prove", "decide the script's statements"},
        {"details", "decide and list nondegeneracy conditions"},
        {"locus", "compute the curve swept by the script's locus command"},
        {"grade", "grade proved statements by cofactor degrees"},
        {"discover", "enumerate provable relations of the construction"},
    };
    for (const auto& [name, kind] : modes) {
        CLI::App* sub = app.add_subcommand(name, blurb.at(name));
        sub->add_option("file", f.file, "construction script (.geo)")->required();
        sub->add_option("--pin", pin_specs, "pin a free point, NAME=x,y (repeatable)");
        sub->add_option("--order", f.order, "monomial order for grading")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_option("--timeout", f.timeout_s, "per-command budget in seconds");
        sub->add_flag("--json", f.json, "machine-readable report");
        sub->add_option("--svg", f.svg_path, "write the locus figure to this file");
        sub->add_flag("--trace", f.trace, "log basis progress to stderr");
        sub->add_option("--seed", f.seed, "sampling seed");
        CommandKind k = kind;
        sub->callback([&f, k] { f.mode = k; });
    }

    std::vector<const char*> argv;
    argv.push_back("geoprove");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 3;
    }

    Script script;
    try {
        for (const std::string& spec : pin_specs) parse_pin(spec, f.pinning);
        script = parse_script(read_file(f.file));
        script.construction.validate();
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 3;
    }
    if (!f.svg_path.empty() && f.mode != CommandKind::Locus) {
        err << "--svg applies to the locus command only\n";
        return 3;
    }

    RunReport report;
    report.version = "0.1.0";
    report.command = command_kind_name(f.mode);
    report.file = f.file;
    report.order = f.order;
    report.timeout_s = f.timeout_s;

    TraceFn trace = nullptr;
    if (f.trace) trace = [&err](const std::string& line) { err << line << "\n"; };

    int exit_code = 0;
    auto worst = [&exit_code](int c) { exit_code = std::max(exit_code, c); };

    if (f.mode == CommandKind::Discover) {
        CommandResult r;
        r.kind = CommandKind::Discover;
        DiscoverOptions opts;
        opts.pinning = f.pinning;
        opts.seed = f.seed;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.discovery = discover(script.construction, opts,
                                   ResourceLimits::budget(f.timeout_s), trace);
        } catch (const TimeoutError&) {
            r.timed_out = true;
            worst(2);
        }
        r.time_ms = now_ms(t0);
        report.results.push_back(std::move(r));
    } else {
        // The subcommand picks the operation; the script supplies the
        // predicates.  Repeated commands reuse the earlier result.
        std::map<std::string, std::size_t> memo;
        for (const Command& cmd : script.commands) {
            if (f.mode == CommandKind::Locus && cmd.kind != CommandKind::Locus) continue;
            if (cmd.kind == CommandKind::Discover) continue;

            std::string key = predicate_text(cmd.pred) + "|" + cmd.mover;
            auto hit = memo.find(key);
            if (hit != memo.end()) {
                report.results.push_back(report.results[hit->second]);
                continue;
            }

            CommandResult r;
            r.kind = f.mode;
            r.pred = cmd.pred;
            r.mover = cmd.mover;
            auto t0 = std::chrono::steady_clock::now();
            try {
                if (f.mode == CommandKind::Locus) {
                    r.var_names = {coord_var_name(cmd.mover, 'x'),
                                   coord_var_name(cmd.mover, 'y')};
                    r.locus = locus_equation(script.construction, cmd.pred, cmd.mover,
                                             f.pinning, ResourceLimits::budget(f.timeout_s),
                                             trace);
                } else {
                    AlgebraicSystem sys = algebraize(script.construction, cmd.pred, f.pinning);
                    r.var_names = sys.vars.names();
                    ResourceLimits limits = ResourceLimits::budget(f.timeout_s);
                    if (f.mode == CommandKind::Grade) {
                        MonomialOrder ord = f.order == "lex"
                                                ? MonomialOrder::lex(sys.vars.size())
                                                : MonomialOrder::grevlex(sys.vars.size());
                        r.grade_report = grade(sys, ord, limits, trace);
                    } else {
                        r.proof = f.mode == CommandKind::Details
                                      ? prove_details(sys, limits, trace)
                                      : prove(sys, limits, trace);
                        for (const Polynomial& cond : r.proof->conditions)
                            r.conditions.push_back(cond.str(r.var_names));
                        worst(verdict_exit(r.proof->verdict));
                    }
                }
            } catch (const TimeoutError&) {
                r.timed_out = true;
                worst(2);
            } catch (const NotMemberError& e) {
                r.note = e.what();
                worst(1);
            } catch (const std::invalid_argument& e) {
                err << e.what() << "\n";
                return 3;
            }
            r.time_ms = now_ms(t0);
            memo[key] = report.results.size();
            report.results.push_back(std::move(r));
        }
        if (report.results.empty()) {
            err << "no ";
            err << (f.mode == CommandKind::Locus ? "locus" : "predicate");
            err << " command in " << f.file << "\n";
            return 3;
        }
    }

    if (!f.svg_path.empty()) {
        const CommandResult* lr = nullptr;
        for (const CommandResult& r : report.results)
            if (r.locus) {
                lr = &r;
                break;
            }
        if (lr) {
            Instance inst = figure_instance(script.construction, f.pinning, *lr->locus,
                                            lr->mover, f.seed);
            BBox box{Rational(-12), Rational(12), Rational(-12), Rational(12)};
            std::ofstream svg(f.svg_path);
            if (!svg) {
                err << "cannot write " << f.svg_path << "\n";
                return 3;
            }
            svg << emit_svg(*lr->locus, script.construction, inst, box, 640);
        }
    }

    if (f.json)
        out << emit_json(report);
    else
        render_text(report, out);
    return exit_code;
}

} // namespace geoprove
