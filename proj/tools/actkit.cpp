#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "actkit/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact computation with finite monoids, acts, and the hom/tensor adjunction"};
    app.require_subcommand(1);

    actkit::RunConfig config;

    struct Subcommand {
        const char* name;
        const char* help;
        bool takes_files;
        bool takes_property;
    };
    const std::vector<Subcommand> subcommands = {
        {"validate", "parse and validate input files", true, false},
        {"classify", "decide reflexivity, generation, and (co)locality", true, true},
        {"star", "certify weak star and star properties of a base act", true, true},
        {"morita", "enumerate and verify equivalence-inducing base acts", true, false},
        {"cellular", "build cellular approximations of an object", true, true},
        {"universe", "list act representatives up to the bound", true, false},
        {"selftest", "run the full acceptance sweep", false, false},
    };

    for (const Subcommand& sc : subcommands) {
        CLI::App* sub = app.add_subcommand(sc.name, sc.help);
        sub->add_option("--bound", config.bound, "size cap for universe sweeps")
            ->capture_default_str();
        sub->add_option("--format", config.output_format, "output format: text or machine")
            ->capture_default_str();
        sub->add_option("--seed", config.seed, "seed for randomized sweeps")
            ->capture_default_str();
        if (sc.takes_property)
            sub->add_option("--property", config.property, "restrict to one named property");
        if (sc.takes_files)
            sub->add_option("files", config.inputs, "input files (ACT/1 text or JSON mirror)")
                ->expected(-1);
        sub->callback([&config, name = std::string(sc.name)]() { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // Help and version exit cleanly; real parse errors map to the
        // validation exit code.
        return code == 0 ? 0 : 2;
    }

    return actkit::run(config, std::cout, std::cerr);
}
