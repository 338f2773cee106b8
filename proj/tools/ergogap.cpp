// ergogap: marginal ergotropic gaps and SLOCC class exclusion from the
// command line. Exit codes: 0 success, 1 input error, 2 numerical failure.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ergogap/cli/commands.hpp"

namespace {

using namespace ergogap::cli;

const std::map<std::string, OutputFormat> kFormats{{"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
const std::map<std::string, ClassifyMode> kModes{{"catalog", ClassifyMode::catalog}, {"facet", ClassifyMode::facet}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marginal ergotropic gaps, MEG polytopes and SLOCC class exclusion for n-qubit states"};
    app.require_subcommand(1);

    std::string input;
    double energy_unit = 0.0;

    MegOptions meg_opts;
    auto* meg = app.add_subcommand("meg", "MEG vector, total MEG, eta and polygon slacks per state");
    meg->add_option("input", input, "State file (JSON)")->required();
    meg->add_option("--output", meg_opts.output, "Output format")->transform(CLI::CheckedTransformer(kFormats));
    auto* meg_unit = meg->add_option("--energy-unit", energy_unit, "Energy unit E (overrides the file)");

    ClassifyOptions cls_opts;
    double epsilon = 0.0;
    auto* classify = app.add_subcommand("classify", "Exclude SLOCC classes via MEG polytopes and facets");
    classify->add_option("input", input, "State file (JSON)")->required();
    classify->add_option("--output", cls_opts.output, "Output format")->transform(CLI::CheckedTransformer(kFormats));
    classify->add_option("--mode", cls_opts.mode, "catalog (3 qubits) or facet (any n >= 3)")
        ->transform(CLI::CheckedTransformer(kModes));
    classify->add_option("--tol", cls_opts.tol, "Containment tolerance in units of E");
    auto* cls_eps = classify->add_option("--epsilon", epsilon, "Impurity 1 - Tr(rho^2) for noise-hardened exclusion");
    auto* cls_unit = classify->add_option("--energy-unit", energy_unit, "Energy unit E (overrides the file)");

    OrbitOptions orbit_opts;
    std::string polytope;
    auto* orbit = app.add_subcommand("orbit", "Sample the SLOCC orbit of a seed state; CSV of MEG vectors");
    orbit->add_option("input", input, "Seed state file (JSON, one state)")->required();
    orbit->add_option("--samples", orbit_opts.samples, "Number of orbit samples");
    orbit->add_option("--seed", orbit_opts.seed, "Random seed");
    orbit->add_option("--condition-cap", orbit_opts.condition_cap, "Maximum condition number of local operators");
    orbit->add_option("--tol", orbit_opts.tol, "Containment tolerance in units of E");
    auto* orbit_poly = orbit->add_option("--polytope", polytope, "Catalog polytope to test against (3 qubits)");
    auto* orbit_unit = orbit->add_option("--energy-unit", energy_unit, "Energy unit E (overrides the file)");

    CatalogOptions cat_opts;
    std::vector<std::string> dicke_pairs;
    auto* catalog = app.add_subcommand("catalog", "Dump the 3-qubit polytope catalog and n-qubit facet constants");
    catalog->add_option("--format", cat_opts.format, "Output format")->check(CLI::IsMember({"json"}));
    catalog->add_option("--dicke", dicke_pairs, "Dicke facet pairs as n:l (repeatable)");
    catalog->add_option("--energy-unit", cat_opts.energy_unit, "Energy unit E");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kInputError;
    }

    if (*meg) {
        if (meg_unit->count()) meg_opts.energy_unit = energy_unit;
        return cmd_meg(input, meg_opts, std::cout, std::cerr);
    }
    if (*classify) {
        if (cls_eps->count()) cls_opts.epsilon = epsilon;
        if (cls_unit->count()) cls_opts.energy_unit = energy_unit;
        return cmd_classify(input, cls_opts, std::cout, std::cerr);
    }
    if (*orbit) {
        if (orbit_poly->count()) orbit_opts.polytope = polytope;
        if (orbit_unit->count()) orbit_opts.energy_unit = energy_unit;
        return cmd_orbit(input, orbit_opts, std::cout, std::cerr);
    }
    for (const auto& pair : dicke_pairs) {
        const auto colon = pair.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument(pair);
            cat_opts.dicke.emplace_back(std::stoi(pair.substr(0, colon)), std::stoi(pair.substr(colon + 1)));
        } catch (const std::exception&) {
            std::cerr << "error: --dicke expects n:l, got '" << pair << "'\n";
            return kInputError;
        }
    }
    return cmd_catalog(cat_opts, std::cout, std::cerr);
}
