#include "ergogap/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace ergogap::cli {

using nlohmann::json;

namespace {

json rounded(const std::vector<double>& values) {
    json out = json::array();
    for (double v : values) out.push_back(round12(v));
    return out;
}

json verdicts(const std::vector<ClassVerdict>& list) {
    json out = json::array();
    for (const auto& v : list) out.push_back({{"label", v.label}, {"l1_distance", round12(v.distance)}});
    return out;
}

std::string join_labels(const std::vector<ClassVerdict>& list, bool with_distance) {
    std::string out;
    for (const auto& v : list) {
        if (!out.empty()) out += ';';
        out += v.label;
        if (with_distance) out += ":" + format12(v.distance);
    }
    return out;
}

// Labels contain '|', never ',' or '"', so no CSV quoting is required.
std::string optional_number(const std::optional<double>& v) { return v ? format12(*v) : ""; }

}  // namespace

std::string format12(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

double round12(double value) {
    const double r = std::strtod(format12(value).c_str(), nullptr);
    return r == 0.0 ? 0.0 : r;
}

json to_json(const ReportRecord& r) {
    json j;
    j["id"] = r.id;
    j["n_qubits"] = r.n_qubits;
    j["energy_unit"] = round12(r.energy_unit);
    j["meg"] = rounded(r.meg);
    j["total_meg"] = round12(r.total_meg);
    j["eta"] = r.eta ? json(round12(*r.eta)) : json(nullptr);
    j["polygon"] = {{"satisfied", r.polygon_satisfied}, {"slacks", rounded(r.polygon_slacks)}};
    if (r.witness) j["genuine_tripartite"] = *r.witness;
    if (r.classification) {
        j["classification"] = {{"candidates", verdicts(r.classification->candidates)},
                               {"excluded", verdicts(r.classification->excluded)},
                               {"margin", round12(r.classification->margin)}};
    }
    if (r.w_facet) j["w_facet"] = *r.w_facet;
    if (!r.dicke_facets.empty()) {
        json facets = json::array();
        for (const auto& f : r.dicke_facets)
            facets.push_back({{"l", f.l}, {"facet_value", round12(f.facet_value)}, {"within", f.within}});
        j["dicke_facets"] = std::move(facets);
    }
    if (r.noise) {
        j["noise"] = {{"epsilon", round12(r.noise->epsilon)},
                      {"eigenvalue_deviation", round12(r.noise->eigenvalue_deviation)},
                      {"margin", round12(r.noise->margin)}};
    }
    return j;
}

json records_to_json(const std::vector<ReportRecord>& records) {
    json out;
    out["units"] = "energies in absolute units: multiples of energy_unit E per record";
    out["records"] = json::array();
    for (const auto& r : records) out["records"].push_back(to_json(r));
    return out;
}

void write_csv(const std::vector<ReportRecord>& records, CsvLayout layout, std::ostream& out) {
    int max_n = 0;
    for (const auto& r : records) max_n = std::max(max_n, r.n_qubits);

    out << "id,n_qubits,energy_unit";
    for (int i = 1; i <= max_n; ++i) out << ",delta_" << i;
    out << ",total_meg,eta,polygon_satisfied,min_slack";
    if (layout == CsvLayout::classify) out << ",genuine_tripartite,w_facet,candidates,excluded,margin";
    out << '\n';

    for (const auto& r : records) {
        out << r.id << ',' << r.n_qubits << ',' << format12(r.energy_unit);
        for (int i = 0; i < max_n; ++i) {
            out << ',';
            if (i < r.n_qubits) out << format12(r.meg[static_cast<std::size_t>(i)]);
        }
        const double min_slack =
            r.polygon_slacks.empty() ? 0.0 : *std::min_element(r.polygon_slacks.begin(), r.polygon_slacks.end());
        out << ',' << format12(r.total_meg) << ',' << optional_number(r.eta) << ','
            << (r.polygon_satisfied ? "true" : "false") << ',' << format12(min_slack);
        if (layout == CsvLayout::classify) {
            out << ',' << r.witness.value_or("") << ',' << r.w_facet.value_or("") << ',';
            if (r.classification) {
                out << join_labels(r.classification->candidates, false) << ','
                    << join_labels(r.classification->excluded, true) << ',' << format12(r.classification->margin);
            } else {
                out << ",,";
            }
        }
        out << '\n';
    }
}

}  // namespace ergogap::cli
