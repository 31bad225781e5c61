#pragma once

// Command-line front end: `lattice`, `topology` and `tower`.
// Exit codes: 0 success, 1 a checked property failed, 2 bad input or a cap
// was exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triaf/commands.hpp"

namespace triaf::cli {

enum ExitCode { ok = 0, violation = 1, input_error = 2 };

inline std::vector<int> parse_int_list(const std::string &text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("not an integer list: '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

/// "i,j" (block 1) or "b,i,j".
inline MatrixUnit parse_unit(const std::string &text)
{
    auto v = parse_int_list(text);
    if (v.size() == 2)
        return {1, v[0], v[1]};
    if (v.size() == 3)
        return {v[0], v[1], v[2]};
    throw std::invalid_argument("unit must be 'row,col' or 'block,row,col'");
}

inline void emit(const std::string &text, const std::string &path, std::ostream &out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << text;
}

inline int exit_for(const Json &report)
{
    return report.contains("violations") && !report["violations"].empty() ? violation : ok;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Ideal lattices, hull-kernel topologies and strand towers of triangular AF approximants", "triaf"};
    app.require_subcommand(1);

    std::string shape_text, dot_kind, out_path, classify_unit, spec_path;
    bool count_only = false, list_mi = false, counterexample = false, twist = false;

    auto *lat = app.add_subcommand("lattice", "Enumerate and classify the ideals of a shape");
    lat->add_option("--shape", shape_text, "Block sizes, e.g. 4 or 2,3")->required();
    lat->add_flag("--count", count_only, "Print only the number of ideals");
    lat->add_flag("--meet-irreducibles", list_mi, "List the meet-irreducible ideals I(e)");
    lat->add_option("--classify-unit", classify_unit, "Classify I(e) for e = 'row,col' or 'block,row,col'");
    lat->add_option("--dot", dot_kind, "Emit a DOT diagram")->check(CLI::IsMember({"hasse"}));
    lat->add_option("--out", out_path, "Write DOT output to this file");

    auto *top = app.add_subcommand("topology", "Hull-kernel topology on the meet-irreducible ideals");
    top->add_option("--shape", shape_text, "Block sizes")->required();
    top->add_option("--dot", dot_kind, "Emit a DOT diagram")->check(CLI::IsMember({"specialization"}));
    top->add_option("--out", out_path, "Write DOT output to this file");

    auto *tow = app.add_subcommand("tower", "Chains, limit ideals and embeddings of a tower");
    tow->add_option("spec", spec_path, "Tower spec JSON file");
    tow->add_flag("--counterexample", counterexample, "Analyse the amplified refinement embedding T4 -> T8");
    tow->add_flag("--twist-search", twist, "Search all two-strand embeddings T4 -> T8 for the twist behaviour");
    tow->add_option("--dot", dot_kind, "Emit a DOT diagram")->check(CLI::IsMember({"bratteli"}));
    tow->add_option("--out", out_path, "Write DOT output to this file");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return input_error;
    }

    // DOT goes to --out when given (the report still goes to stdout),
    // otherwise it replaces the report on stdout.
    auto finish = [&](const Json &report, const std::string &dot) {
        if (!dot.empty()) {
            emit(dot, out_path, out);
            if (!out_path.empty())
                out << report.dump(2) << "\n";
        } else
            out << report.dump(2) << "\n";
        return exit_for(report);
    };

    try {
        if (lat->parsed()) {
            Shape shape(parse_int_list(shape_text));
            if (count_only) {
                out << count_ideals(shape, EnumerationLimits{}.max_ideals) << "\n";
                return ok;
            }
            if (list_mi) {
                out << meet_irreducibles_report(shape).dump(2) << "\n";
                return ok;
            }
            if (!classify_unit.empty()) {
                MatrixUnit e = parse_unit(classify_unit);
                IdealLattice lattice = enumerate_ideals(shape);
                auto c = classify(Ideal::largest_excluding(shape, e), lattice);
                out << "unit " << to_string(e) << ": k4=" << std::boolalpha << c.k4 << " prime=" << c.prime
                    << " meet_irreducible=" << c.meet_irreducible << " maximal=" << c.maximal
                    << " primary=" << c.primary << "\n";
                return c.k4 == c.meet_irreducible && (!c.prime || c.k4) ? ok : violation;
            }
            Json report = lattice_report(shape);
            std::string dot = dot_kind == "hasse" ? hasse_dot(enumerate_ideals(shape)) : "";
            return finish(report, dot);
        }
        if (top->parsed()) {
            Shape shape(parse_int_list(shape_text));
            Json report = topology_report(shape);
            std::string dot =
                dot_kind == "specialization" ? specialization_dot(IdealSpace::of_meet_irreducibles(shape), shape.units()) : "";
            return finish(report, dot);
        }
        if (tow->parsed()) {
            int modes = static_cast<int>(counterexample) + static_cast<int>(twist) + static_cast<int>(!spec_path.empty());
            if (modes != 1) {
                err << "tower: give exactly one of a spec file, --counterexample, --twist-search\n";
                return input_error;
            }
            if (twist)
                return finish(twist_search_report(), "");
            if (counterexample) {
                Tower t({amplified_refinement_counterexample()});
                return finish(counterexample_report(), dot_kind == "bratteli" ? bratteli_dot(t) : "");
            }
            std::ifstream f(spec_path);
            if (!f) {
                err << "cannot read " << spec_path << "\n";
                return input_error;
            }
            Json doc;
            try {
                doc = Json::parse(f);
            } catch (const std::exception &ex) {
                throw SpecError(std::string("invalid JSON: ") + ex.what());
            }
            TowerSpec spec = parse_tower_spec(doc);
            Json report = tower_report(spec.tower, spec.analyses);
            return finish(report, dot_kind == "bratteli" ? bratteli_dot(spec.tower) : "");
        }
    } catch (const CapExceeded &ex) {
        err << "cap exceeded: " << ex.what() << "\n";
        return input_error;
    } catch (const SpecError &ex) {
        err << "invalid spec: " << ex.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument &ex) {
        err << "invalid input: " << ex.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace triaf::cli
