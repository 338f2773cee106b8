#pragma once

// State files (JSON, version 1).
//
// A file holds one state object, an array of them, or {"version": 1,
// "states": [...]}. Each state object carries exactly one of
//
//   "amplitudes": [[re, im], ...]            2^n entries, basis order
//   "family": {"name": "ghz", "n": 3, "theta": 0.785398}
//             {"name": "w", "coeffs": [a_1, ..., a_n]}
//             {"name": "dicke", "n": 4, "l": 2}
//             {"name": "dicke_general", "n": 4, "l": 2, "alphas": [...]}
//             {"name": "product", "locals": [[c0, c1], ...]}
//
// plus optional "id", "n_qubits" (required with amplitudes), "energy_unit"
// (default 1.0) and "version". Complex entries are [re, im] pairs or plain
// reals. Angles are in radians.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ergogap/qstate.hpp"

namespace ergogap::cli {

inline constexpr int kStateFileVersion = 1;

// Malformed or invalid input; what() is "<source>:<line>:<column>: <message>".
class InputError : public std::runtime_error {
public:
    InputError(std::string source, std::size_t line, std::size_t column, const std::string& message);

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

struct StateEntry {
    std::string id;
    std::string family;  // "amplitudes" for explicit states
    double energy_unit = 1.0;
    StateVector state;
};

struct StateFile {
    std::vector<StateEntry> states;
    std::vector<std::string> warnings;
};

StateFile parse_state_file(std::string_view text, const std::string& source_name);
StateFile load_state_file(const std::filesystem::path& path);

// Serializes states with explicit amplitudes at round-trip precision.
std::string write_state_file(const std::vector<StateEntry>& states);

}  // namespace ergogap::cli
