// Command-line front-end: analyze | compare | sweep | decompose over action
// spec files, emitting deterministic JSON (or text/CSV) reports.
//
// Exit codes: 0 success, 2 malformed input, 3 non-commuting permutations.

#include "scx/action.hpp"
#include "scx/report.hpp"
#include "scx/version.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNotCommuting = 3;

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return kExitInput;
    }
    out << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(scx::kToolName) +
                 ": semicrossed products of finite Z^2-dynamical systems as truncated "
                 "matrix function algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(scx::kToolVersion));

    std::string spec_path, spec_path_b, out_path;
    std::string format = "json";
    int degree = 8;
    int max_k = 4;
    bool override_degree = false;

    const auto add_common = [&](CLI::App* cmd, bool with_degree) {
        cmd->add_option("--out", out_path, "Output path (default stdout)");
        cmd->add_option("--format", format, "Output format: json | text")
            ->check(CLI::IsMember({"json", "text"}));
        if (with_degree)
            cmd->add_option("--degree", degree, "Total-degree cap (overrides the spec file)")
                ->check(CLI::Range(0, scx::kMaxSpecDegree))
                ->each([&](const std::string&) { override_degree = true; });
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Full analysis of one action spec");
    analyze->add_option("spec", spec_path, "Action spec file (JSON)")->required();
    add_common(analyze, true);

    CLI::App* compare = app.add_subcommand("compare", "Invariant comparison of two action specs");
    compare->add_option("spec-a", spec_path, "First action spec file")->required();
    compare->add_option("spec-b", spec_path_b, "Second action spec file")->required();
    add_common(compare, true);

    CLI::App* decompose =
        app.add_subcommand("decompose", "Perpendicular decomposition of one action spec");
    decompose->add_option("spec", spec_path, "Action spec file (JSON)")->required();
    add_common(decompose, true);

    CLI::App* sweep =
        app.add_subcommand("sweep", "Tabulate all commuting pairs up to a ground-set size");
    sweep->add_option("--max-k", max_k, "Largest ground-set size")
        ->required()
        ->check(CLI::Range(1, scx::kMaxSweepSize));
    sweep->add_option("--degree", degree, "Total-degree cap (default 8)")
        ->check(CLI::Range(0, scx::kMaxSpecDegree));
    sweep->add_option("--out", out_path, "Output path (default stdout)");
    sweep->add_option("--format", format, "Output format: json (JSON lines) | text (CSV)")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (sweep->parsed()) {
            const auto rows = scx::sweep_rows(max_k, degree);
            const std::string payload = format == "json" ? scx::render_sweep_jsonl(rows)
                                                         : scx::render_sweep_csv(rows);
            return write_output(payload, out_path);
        }

        scx::ActionSpec spec = scx::load_action_spec(spec_path);
        if (override_degree) spec.degree = degree;

        nlohmann::json report;
        if (analyze->parsed()) {
            report = scx::analyze_report(spec);
        } else if (decompose->parsed()) {
            report = scx::decompose_report(spec);
        } else {
            scx::ActionSpec spec_b = scx::load_action_spec(spec_path_b);
            if (override_degree) spec_b.degree = degree;
            report = scx::compare_report(spec, spec_b);
        }
        const std::string payload =
            format == "json" ? scx::render_json(report) : scx::render_text(report);
        return write_output(payload, out_path);
    } catch (const scx::NotCommutingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotCommuting;
    } catch (const scx::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
