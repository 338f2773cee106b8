#pragma once

// Report records emitted by the CLI. JSON is canonical; CSV is a flat
// projection. Both print every number at 12 significant digits, so the two
// encodings of one run carry identical values.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ergogap/polytope.hpp"

namespace ergogap::cli {

struct DickeFacetCheck {
    int l = 0;
    double facet_value = 0.0;
    bool within = true;  // total MEG <= facet value (+ tol)
};

struct NoiseInfo {
    double epsilon = 0.0;
    double eigenvalue_deviation = 0.0;
    double margin = 0.0;
};

struct ReportRecord {
    std::string id;
    int n_qubits = 0;
    double energy_unit = 1.0;
    std::vector<double> meg;
    double total_meg = 0.0;
    std::optional<double> eta;
    std::vector<double> polygon_slacks;
    bool polygon_satisfied = true;
    std::optional<std::string> witness;  // "genuine" | "inconclusive"
    std::optional<ClassificationResult> classification;
    std::optional<std::string> w_facet;
    std::vector<DickeFacetCheck> dicke_facets;
    std::optional<NoiseInfo> noise;
};

// Value as printed with 12 significant digits, parsed back; negative zero
// becomes zero.
double round12(double value);
std::string format12(double value);

nlohmann::json to_json(const ReportRecord& record);
// {"energy_unit_convention": ..., "records": [...]}
nlohmann::json records_to_json(const std::vector<ReportRecord>& records);

enum class CsvLayout { meg, classify };
void write_csv(const std::vector<ReportRecord>& records, CsvLayout layout, std::ostream& out);

}  // namespace ergogap::cli
