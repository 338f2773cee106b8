#include "ergogap/cli/commands.hpp"

#include <cstdio>

#include "ergogap/errors.hpp"
#include "ergogap/meg.hpp"
#include "ergogap/states.hpp"

namespace ergogap::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kPureStateRegion = "pure-state";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const InconclusiveError& e) {
        err << "inconclusive: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

StateFile load(const std::string& input, std::optional<double> energy_unit, std::ostream& err) {
    StateFile file = load_state_file(input);
    for (const auto& w : file.warnings) err << w << '\n';
    if (energy_unit) {
        if (!(*energy_unit > 0.0)) throw UsageError("--energy-unit must be positive");
        for (auto& s : file.states) s.energy_unit = *energy_unit;
    }
    return file;
}

void emit(const std::vector<ReportRecord>& records, OutputFormat format, CsvLayout layout, std::ostream& out) {
    if (format == OutputFormat::csv) {
        write_csv(records, layout, out);
    } else {
        out << records_to_json(records).dump(2) << '\n';
    }
}

bool inside_pure_state_region(const MegVector& lambda, double tol) {
    for (double d : lambda.deltas()) {
        if (d < -tol || d > lambda.energy_unit() * (1.0 + tol)) return false;
    }
    return polygon_check(lambda, tol * lambda.energy_unit()).satisfied;
}

std::string default_orbit_target(const MegVector& seed_meg, double tol) {
    if (seed_meg.n() != 3) return std::string(kPureStateRegion);
    std::vector<double> x(seed_meg.deltas());
    for (double& v : x) v /= seed_meg.energy_unit();
    for (const auto& p : three_qubit_catalog()) {
        if (contains(p, x, tol)) return p.label();
    }
    return std::string(catalog_label::kGhz);
}

}  // namespace

ReportRecord meg_record(const StateEntry& entry) {
    const MegVector lambda = meg_vector(entry.state, entry.energy_unit);
    const PolygonReport polygon = polygon_check(lambda, 1e-9 * entry.energy_unit);
    ReportRecord r;
    r.id = entry.id;
    r.n_qubits = lambda.n();
    r.energy_unit = entry.energy_unit;
    r.meg = lambda.deltas();
    r.total_meg = total_meg(lambda).value;
    if (lambda.n() >= 3) r.eta = eta_indicator(lambda).value;
    r.polygon_slacks = polygon.slacks;
    r.polygon_satisfied = polygon.satisfied;
    return r;
}

ReportRecord classify_record(const StateEntry& entry, const ClassifyOptions& options) {
    ReportRecord r = meg_record(entry);
    const int n = r.n_qubits;
    if (n < 3) {
        throw UsageError("state '" + entry.id + "' has " + std::to_string(n) +
                         " qubits; classification needs at least 3");
    }
    const MegVector lambda(r.meg, entry.energy_unit);

    if (n == 3) {
        // eta is in units of E; the witness tolerance is absolute in those units.
        r.witness = std::abs(*r.eta / entry.energy_unit) > kEtaZeroTolerance ? "genuine" : "inconclusive";
    }
    r.w_facet = std::string(to_string(wn_facet_test(lambda, options.tol)));

    const double epsilon = options.epsilon.value_or(0.0);
    if (options.epsilon) {
        const NoiseMargin nm = noise_margin(n, epsilon, entry.energy_unit);
        r.noise = NoiseInfo{epsilon, nm.eigenvalue_deviation, nm.meg_margin};
    }

    if (options.mode == ClassifyMode::catalog) {
        if (n != 3 && !options.epsilon) {
            throw UsageError("state '" + entry.id + "' has " + std::to_string(n) +
                             " qubits; catalog classification supports 3 qubits only. Use --mode facet for the "
                             "n-qubit W and Dicke facet tests, or --epsilon for W-type exclusion");
        }
        r.classification = classify_with_margin(lambda, epsilon, options.tol);
    } else {
        for (int l = 1; l <= n - 1; ++l) {
            const double facet = dicke_facet_value(n, l, entry.energy_unit).value;
            r.dicke_facets.push_back({l, facet, r.total_meg <= facet + options.tol * entry.energy_unit});
        }
        if (options.epsilon) r.classification = classify_with_margin(lambda, epsilon, options.tol);
    }
    return r;
}

int cmd_meg(const std::string& input, const MegOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const StateFile file = load(input, options.energy_unit, err);
        std::vector<ReportRecord> records;
        for (const auto& entry : file.states) {
            if (entry.state.n_qubits() < 2) {
                throw UsageError("state '" + entry.id + "' has a single qubit; MEG needs a bipartition");
            }
            records.push_back(meg_record(entry));
        }
        emit(records, options.output, CsvLayout::meg, out);
        return static_cast<int>(kSuccess);
    });
}

int cmd_classify(const std::string& input, const ClassifyOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.epsilon && !(*options.epsilon >= 0.0 && *options.epsilon < 0.5)) {
            throw UsageError("--epsilon must lie in [0, 0.5)");
        }
        if (!(options.tol >= 0.0)) throw UsageError("--tol must be non-negative");
        const StateFile file = load(input, options.energy_unit, err);
        std::vector<ReportRecord> records;
        for (const auto& entry : file.states) records.push_back(classify_record(entry, options));
        emit(records, options.output, CsvLayout::classify, out);
        return static_cast<int>(kSuccess);
    });
}

int cmd_orbit(const std::string& input, const OrbitOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.samples < 0) throw UsageError("--samples must be non-negative");
        if (!(options.condition_cap >= 1.0)) throw UsageError("--condition-cap must be >= 1");
        const StateFile file = load(input, options.energy_unit, err);
        if (file.states.size() != 1) throw UsageError("orbit expects exactly one seed state");
        const StateEntry& seed_entry = file.states.front();
        const int n = seed_entry.state.n_qubits();
        if (n < 2) throw UsageError("orbit needs at least two qubits");
        const double unit = seed_entry.energy_unit;

        const MegVector seed_meg = meg_vector(seed_entry.state, unit);
        const std::string target = options.polytope.value_or(default_orbit_target(seed_meg, options.tol));
        const Polytope* polytope = nullptr;
        if (target != kPureStateRegion) {
            if (n != 3) throw UsageError("--polytope applies to 3-qubit seeds only");
            polytope = &catalog_polytope(target);
        }

        out << "sample";
        for (int i = 1; i <= n; ++i) out << ",delta_" << i;
        out << ",total_meg,inside\n";

        const RandomSource root(options.seed);
        int violations = 0;
        long resampled = 0;
        for (int s = 0; s < options.samples; ++s) {
            // Per-sample stream: rows depend only on (seed, sample index).
            RandomSource rng = root.fork(static_cast<std::uint64_t>(s));
            std::optional<StateVector> image;
            while (!image) {
                try {
                    image = apply_slocc(seed_entry.state, random_slocc(n, rng, options.condition_cap));
                } catch (const DegenerateTransformError&) {
                    ++resampled;
                    if (resampled > 1000L * (options.samples + 1)) {
                        throw NumericalError("orbit: SLOCC draws keep annihilating the seed state");
                    }
                }
            }
            const MegVector lambda = meg_vector(*image, unit);
            bool inside;
            if (polytope) {
                std::vector<double> x(lambda.deltas());
                for (double& v : x) v /= unit;
                inside = contains(*polytope, x, options.tol);
            } else {
                inside = inside_pure_state_region(lambda, options.tol);
            }
            if (!inside) ++violations;
            out << s;
            for (double d : lambda.deltas()) out << ',' << format12(d);
            out << ',' << format12(total_meg(lambda).value) << ',' << (inside ? 1 : 0) << '\n';
        }
        out << "# summary: samples=" << options.samples << " violations=" << violations
            << " resampled=" << resampled << " target=" << target << " tol=" << format12(options.tol)
            << " seed=" << options.seed << " condition_cap=" << format12(options.condition_cap)
            << " energy_unit=" << format12(unit) << " rng=" << RandomSource::kAlgorithm << '\n';
        return static_cast<int>(kSuccess);
    });
}

int cmd_catalog(const CatalogOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.format != "json") throw UsageError("catalog supports --format json only");
        if (!(options.energy_unit > 0.0)) throw UsageError("--energy-unit must be positive");
        const double unit = options.energy_unit;
        json root;
        root["energy_unit"] = round12(unit);
        root["units"] = "vertices, offsets and facet values are multiples of energy_unit";
        json polys = json::array();
        for (const auto& p : three_qubit_catalog()) {
            json halfspaces = json::array();
            for (const auto& h : p.halfspaces()) halfspaces.push_back({{"normal", h.normal}, {"offset", h.offset}});
            polys.push_back({{"label", p.label()}, {"vertices", p.vertices()}, {"halfspaces", halfspaces}});
        }
        root["three_qubit"] = std::move(polys);

        std::vector<std::pair<int, int>> pairs = options.dicke;
        if (pairs.empty()) {
            for (int n = 3; n <= 8; ++n)
                for (int l = 1; l <= n - 1; ++l) pairs.emplace_back(n, l);
        }
        json dicke = json::array();
        for (const auto& [n, l] : pairs) {
            dicke.push_back({{"n", n}, {"l", l}, {"total_meg_max", round12(dicke_facet_value(n, l, 1.0).value)}});
        }
        root["facets"] = {{"w", {{"total_meg_max", 2.0}, {"normal", "all ones"}, {"applies_to", "n >= 3"}}},
                          {"dicke", std::move(dicke)}};
        out << root.dump(2) << '\n';
        return static_cast<int>(kSuccess);
    });
}

}  // namespace ergogap::cli
