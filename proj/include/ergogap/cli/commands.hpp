#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ergogap/cli/report.hpp"
#include "ergogap/cli/statefile.hpp"

namespace ergogap::cli {

// Process exit codes.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kNumericalFailure = 2 };

enum class OutputFormat { json, csv };
enum class ClassifyMode { catalog, facet };

struct MegOptions {
    OutputFormat output = OutputFormat::json;
    std::optional<double> energy_unit;  // overrides the file's value
};

struct ClassifyOptions {
    OutputFormat output = OutputFormat::json;
    ClassifyMode mode = ClassifyMode::catalog;
    double tol = kContainmentTolerance;
    std::optional<double> epsilon;
    std::optional<double> energy_unit;
};

struct OrbitOptions {
    int samples = 1000;
    std::uint64_t seed = 1;
    double condition_cap = 10.0;
    double tol = 1e-6;
    std::optional<std::string> polytope;  // catalog label; default chosen from the seed
    std::optional<double> energy_unit;
};

struct CatalogOptions {
    std::string format = "json";
    std::vector<std::pair<int, int>> dicke;  // (n, l); empty = all 3 <= n <= 8
    double energy_unit = 1.0;
};

// Record builders shared by the commands.
ReportRecord meg_record(const StateEntry& entry);
ReportRecord classify_record(const StateEntry& entry, const ClassifyOptions& options);

int cmd_meg(const std::string& input, const MegOptions& options, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& input, const ClassifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_orbit(const std::string& input, const OrbitOptions& options, std::ostream& out, std::ostream& err);
int cmd_catalog(const CatalogOptions& options, std::ostream& out, std::ostream& err);

}  // namespace ergogap::cli
