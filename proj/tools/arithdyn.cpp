#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "arithdyn/cli/commands.hpp"
#include "arithdyn/cli/json_io.hpp"
#include "arithdyn/cli/paper_check.hpp"
#include "arithdyn/error.hpp"

using namespace arithdyn;
using namespace arithdyn::cli;

namespace {

enum Exit { kOk = 0, kInput = 2, kDegenerate = 3, kInternal = 4 };

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw validation_error("cannot write " + out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic dynamics of rational maps on P^1: resultants, minimality, stability, conductors"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string out, format = "json";
    auto common = [&](CLI::App* sc) {
        sc->add_option("--out", out, "Write output to this file instead of stdout");
        sc->add_option("--budget", opt.budget, "Descent budget (largest uniformizer power tried)")->default_val(8)->check(
            CLI::NonNegativeNumber);
        sc->add_option("--seed", opt.seed, "Seed for sampled checks, echoed in reports")->default_val(0);
        sc->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->default_val("json");
    };

    std::string map_file;
    auto* analyze = app.add_subcommand("analyze", "Full report for a map description file");
    analyze->add_option("map", map_file, "MapDescription JSON file ('-' for stdin)")->required();
    analyze->add_flag("--skip-critical", opt.skip_critical, "Do not compute the critical conductor");
    common(analyze);

    auto* minimal = app.add_subcommand("minimal", "Minimal resultant and conductor");
    minimal->add_option("map", map_file, "MapDescription JSON file ('-' for stdin)")->required();
    common(minimal);

    auto* critical = app.add_subcommand("critical", "Critical conductor in the given coordinates");
    critical->add_option("map", map_file, "MapDescription JSON file ('-' for stdin)")->required();
    common(critical);

    FamilyOptions fam;
    std::string fa, fb, fbp;
    auto* family = app.add_subcommand("family", "Emit a member of a built-in family as a map description");
    family->add_option("name", fam.kind, "ex1 | ex2 | nf-number-field")
        ->required()
        ->check(CLI::IsMember({"ex1", "ex2", "nf-number-field"}));
    family->add_option("--N", fam.N, "Family exponent N >= 1")->default_val(1);
    auto* oa = family->add_option("--a", fa, "Parameter a (default 2)");
    auto* ob = family->add_option("--b", fb, "Parameter b (default 3)");
    auto* obp = family->add_option("--bp", fbp, "Parameter b' (default forced by a*b' + b/a = 0)");
    family->add_option("--p", fam.p, "Prime for nf-number-field")->default_val("5");
    common(family);

    std::string lA = "0", lB = "1";
    long ln = 2;
    auto* lattes = app.add_subcommand("lattes", "Multiplication-by-n Lattes map on y^2 = x^3 + Ax + B");
    lattes->add_option("--A", lA, "A (rational, or an expression in t)")->default_val("0");
    lattes->add_option("--B", lB, "B (rational, or an expression in t)")->default_val("1");
    lattes->add_option("--n", ln, "n >= 2")->default_val(2);
    common(lattes);

    std::string section = "all";
    auto* check = app.add_subcommand("paper-check", "Run the table of reference values and report pass/fail rows");
    check->add_option("--section", section, "all | examples | lattes | critical")
        ->check(CLI::IsMember({"all", "examples", "lattes", "critical"}))
        ->default_val("all");
    common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        const bool tsv = format == "tsv";
        if (*analyze || *minimal || *critical) {
            AnyPresentation phi = parse_map_description(read_file(map_file));
            std::string text = std::visit(
                [&](const auto& p) -> std::string {
                    if (*analyze) return tsv ? analyze_tsv(p, opt) : dump(analyze_json(p, opt));
                    if (*minimal) return tsv ? minimal_tsv(p, opt) : dump(minimal_command_json(p, opt));
                    return tsv ? critical_tsv(p) : dump(critical_command_json(p, opt));
                },
                phi);
            emit(text, out);
        } else if (*family) {
            if (tsv) throw validation_error("family output is JSON only");
            if (*oa) fam.a = fa;
            if (*ob) fam.b = fb;
            if (*obp) fam.bp = fbp;
            emit(dump(family_json(fam)), out);
        } else if (*lattes) {
            if (tsv) throw validation_error("lattes output is JSON only");
            emit(dump(lattes_json(lA, lB, ln, opt)), out);
        } else if (*check) {
            auto rows = paper_check_rows(section, opt.seed);
            emit(tsv ? paper_check_tsv(rows) : dump(paper_check_json(rows, section, opt)), out);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const degenerate_error& e) {
        std::cerr << "error: degenerate input: " << e.what() << "\n";
        return kDegenerate;
    } catch (const invariant_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
