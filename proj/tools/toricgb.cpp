#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "toricgb/config_io.hpp"
#include "toricgb/presets.hpp"
#include "toricgb/sweep.hpp"
#include "toricgb/version.hpp"

namespace {

using namespace toricgb;

int cmd_run(const std::string& config_path, const std::vector<std::string>& orders,
            const std::vector<std::string>& emit, bool ja_maxdeg, bool normality, bool truncate,
            bool with_basis) {
    Configuration cfg = load_configuration(config_path);
    ReportOptions opts;
    opts.compute_ja_maxdeg = ja_maxdeg;
    opts.compute_normality = normality;
    opts.truncate_check = truncate;
    for (const auto& o : orders) {
        if (o == "lex")
            opts.compute_lex = true;
        else if (o != "grevlex")
            throw InputError("unknown order '" + o + "' (grevlex or lex)");
    }

    PipelineResult res = run_pipeline(cfg, opts);

    bool table = emit.empty();
    bool json_out = false;
    for (const auto& e : emit) {
        if (e == "table")
            table = true;
        else if (e == "json")
            json_out = true;
        else
            throw InputError("unknown emit format '" + e + "' (json or table)");
    }
    if (table) {
        std::cout << report_table(res.report);
        if (with_basis) {
            std::cout << "reduced basis (grevlex):\n" << basis_to_string(res.ia_revlex, res.xy_vars);
            if (res.ia_lex)
                std::cout << "reduced basis (lex):\n" << basis_to_string(*res.ia_lex, res.xy_vars);
        }
    }
    if (json_out) {
        nlohmann::json j = report_to_json(res.report);
        j["config"] = configuration_to_json(cfg);
        if (with_basis) {
            j["basis_revlex"] = basis_to_json(res.ia_revlex, res.xy_vars);
            if (res.ia_lex) j["basis_lex"] = basis_to_json(*res.ia_lex, res.xy_vars);
        }
        std::cout << j.dump(2) << '\n';
    }
    if (!res.report.conjecture_holds) {
        nlohmann::json candidate{{"counterexample_candidate", report_to_json(res.report)},
                                 {"config", configuration_to_json(cfg)}};
        std::cerr << "conjectured bound exceeded; candidate record follows\n" << candidate.dump(2) << '\n';
    }
    return 0;
}

int cmd_sweep(SweepSpec spec, const std::string& out_path) {
    for (const auto& expr : spec.checks) {
        if (check_needs_ja(expr)) spec.options.compute_ja_maxdeg = true;
        if (check_needs_normality(expr)) spec.options.compute_normality = true;
    }
    SweepResult result = run_sweep(spec);

    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file " + out_path);
    write_sweep_jsonl(spec, result, out);

    std::size_t failed = 0;
    for (const auto& rec : result.records)
        for (const auto& c : rec.checks)
            if (!c.pass) ++failed;
    std::cerr << result.raw_count << " raw configurations, " << result.records.size() << " classes, "
              << result.situation_count << " incidence situations, " << failed << " failed checks\n";
    return result.all_passed ? 0 : 1;
}

int cmd_reproduce(const std::string& preset) {
    if (preset == "list") {
        for (const auto& n : preset_names()) std::cout << n << '\n';
        return 0;
    }
    PresetOutcome out = run_preset(preset);
    std::size_t passed = 0;
    for (const auto& c : out.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << '\n';
        if (!c.pass && !c.detail.empty()) std::cout << "       " << c.detail << '\n';
        if (c.pass) ++passed;
    }
    std::cout << out.preset << ": " << passed << "/" << out.checks.size() << " expectations met\n";
    return out.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for toric ideals of simplicial semigroup configurations"};
    app.set_version_flag("--version", TORICGB_VERSION);
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "compute the bound report for one configuration");
    std::string config_path;
    std::vector<std::string> orders, emit;
    bool ja_maxdeg = false, normality = false, truncate = false, with_basis = false;
    run->add_option("--config", config_path, "configuration JSON file")->required();
    run->add_option("--order", orders, "basis order to compute (grevlex|lex, repeatable)");
    run->add_flag("--ja-maxdeg", ja_maxdeg, "report the elimination-ideal basis degree");
    run->add_flag("--normality", normality, "decide normality of the semigroup");
    run->add_flag("--truncate", truncate, "also run the truncated computation and compare");
    run->add_flag("--basis", with_basis, "include the reduced bases in the output");
    run->add_option("--emit", emit, "output format (json|table, repeatable; default table)");

    auto* sweep = app.add_subcommand("sweep", "enumerate deletion configurations and evaluate checks");
    SweepSpec spec;
    std::string predicate_text = "none", out_path;
    bool no_symmetry = false;
    sweep->add_option("--alpha", spec.alpha, "simplex dilation")->required();
    sweep->add_option("--dim", spec.d, "ambient dimension")->required();
    sweep->add_option("--delete", spec.k, "number of deleted non-vertex points")->required();
    sweep->add_option("--predicate", predicate_text,
                      "deletion filter: none|edge-one-each|facet-min=M|must-delete=V|edge-full=I,J");
    sweep->add_option("--check", spec.checks, "assertion per class, e.g. 'r <= 8' or 'conjecture'");
    sweep->add_flag("--no-symmetry", no_symmetry, "emit every raw configuration");
    sweep->add_flag("--verify-classes", spec.verify_members,
                    "recompute up to 3 extra members per class and compare invariants");
    sweep->add_option("--threads", spec.threads, "worker threads (default TORICGB_THREADS or hardware)");
    sweep->add_option("--out", out_path, "JSONL output file")->required();

    auto* repro = app.add_subcommand("reproduce", "run a named verification suite");
    std::string preset;
    repro->add_option("preset", preset, "preset name, or 'list'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, orders, emit, ja_maxdeg, normality, truncate, with_basis);
        if (sweep->parsed()) {
            spec.predicate = toricgb::parse_predicate(predicate_text);
            spec.symmetry = !no_symmetry;
            return cmd_sweep(std::move(spec), out_path);
        }
        if (repro->parsed()) return cmd_reproduce(preset);
    } catch (const toricgb::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const toricgb::InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
