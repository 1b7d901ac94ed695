#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hodgechase/json_io.hpp"
#include "hodgechase/reports.hpp"

using namespace hodgechase;

int main(int argc, char** argv) {
    CLI::App app{"dimension chases for degenerations of I-surfaces"};
    app.require_subcommand(1);

    std::string dump_dir;
    std::string run_path;
    std::string catalog_dir;
    bool poset_as_dot = false;
    bool chains_as_dot = false;

    auto* cat_cmd = app.add_subcommand("catalog", "list the built-in scenario catalog");
    cat_cmd->add_option("--dump", dump_dir, "write the catalog as JSON files into this directory");

    auto* run_cmd = app.add_subcommand("run", "evaluate one scenario file");
    run_cmd->add_option("path", run_path, "scenario JSON file")->required();

    auto* poset_cmd = app.add_subcommand("poset", "print the Hodge type poset");
    poset_cmd->add_flag("--dot", poset_as_dot, "emit DOT instead of text");

    auto* table_cmd = app.add_subcommand("table2", "print the generic-cover table");

    auto* verify_cmd = app.add_subcommand("verify-all", "check every catalog claim");
    verify_cmd->add_option("--catalog", catalog_dir,
                           "load the catalog from this directory instead of the built-in one");

    auto* chains_cmd = app.add_subcommand("chains", "print the degeneration chains");
    chains_cmd->add_flag("--dot", chains_as_dot, "emit the realized transitions as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cat_cmd->parsed()) {
            const Catalog& cat = builtin_catalog();
            if (!dump_dir.empty()) {
                dump_catalog(cat, dump_dir);
                std::cout << "wrote " << cat.scenarios.size() << " scenarios and "
                          << cat.chains.size() << " chains to " << dump_dir << "\n";
            } else {
                std::cout << format_catalog(cat);
            }
        } else if (run_cmd->parsed()) {
            const RunReport report = run_report(load_scenario(run_path));
            std::cout << report.text;
            return report.ok ? 0 : 1;
        } else if (poset_cmd->parsed()) {
            const HodgePoset poset = build_poset();
            std::cout << (poset_as_dot ? poset_dot(poset) : format_poset(poset));
        } else if (table_cmd->parsed()) {
            std::cout << format_table2(computed_table2());
        } else if (verify_cmd->parsed()) {
            const Catalog cat =
                catalog_dir.empty() ? builtin_catalog() : load_catalog(catalog_dir);
            const VerifySummary summary = verify_all(cat);
            std::cout << summary.text;
            return summary.failed == 0 ? 0 : 1;
        } else if (chains_cmd->parsed()) {
            const Catalog& cat = builtin_catalog();
            if (chains_as_dot) {
                std::cout << chains_dot(cat);
            } else {
                for (const auto& c : cat.chains)
                    std::cout << format_chain(verify_chain(cat, c));
            }
        }
    } catch (const ChaseError& e) {
        std::cerr << "chase error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
