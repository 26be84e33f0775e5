// tropix: tropical curves, compactified polyhedra and root-count checks from a JSON scenario.

#include "tropix/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    using namespace tropix::cli;

    CLI::App app{"Tropical intersection and continuity-of-roots checks"};
    app.require_subcommand(1);

    CommandOptions opt;
    struct Spec {
        const char* name;
        const char* help;
        bool poly, seed, threads;
    };
    const Spec specs[] = {
        {"tropicalize", "vertices, cells, weights and dual subdivision of one polynomial", true, false, false},
        {"intersect", "stable intersection, prevariety and finiteness criterion at one parameter point", false, false, false},
        {"verify", "continuity-of-roots table over the scenario's parameter grid", false, false, true},
        {"plot", "SVG figure of both curves, the region and the crossings", false, false, false},
        {"oracle", "root valuations of the literal system by elimination", false, true, false},
        {"check-fan", "whether the regions' recession cones form a fan", false, false, false},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--scenario", opt.scenario, "scenario JSON file")->required();
        sub->add_option("--out", opt.out, "write the report here instead of stdout");
        if (std::string(spec.name) != "verify" && std::string(spec.name) != "check-fan")
            sub->add_option("--params", opt.params,
                            std::string(spec.name) == "oracle" ? "literal values, e.g. t1=u*p^-8,t2=p^6"
                                                               : "valuations, e.g. vt1=-8,vt2=6");
        if (spec.poly)
            sub->add_option("--poly", opt.poly, "polynomial name (default: the first)");
        if (spec.seed)
            sub->add_option("--seed", opt.seed, "seed for random units (u)");
        if (spec.threads)
            sub->add_option("--threads", opt.threads, "worker threads for the grid")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }
    return run_command(app.get_subcommands().front()->get_name(), opt, std::cout, std::cerr);
}
