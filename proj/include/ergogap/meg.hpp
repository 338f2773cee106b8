#pragma once

// Marginal ergotropic gaps of pure n-qubit states: the gap across the cut
// qubit i | rest under H_i = E|1><1| equals 2 * lambda_min(rho_i) * E.

#include <cstddef>
#include <vector>

#include "ergogap/qstate.hpp"
#include "ergogap/thermo.hpp"

namespace ergogap {

// Lambda = (Delta_1, ..., Delta_n), each in [0, E].
class MegVector {
public:
    // Throws DomainError if some component lies outside [-tol, E + tol]
    // (tol = 1e-9) or E <= 0. Components are clamped into [0, E].
    MegVector(std::vector<double> deltas, double energy_unit = 1.0);

    int n() const { return static_cast<int>(deltas_.size()); }
    double energy_unit() const { return energy_unit_; }
    const std::vector<double>& deltas() const { return deltas_; }
    double operator[](std::size_t i) const { return deltas_[i]; }

private:
    std::vector<double> deltas_;
    double energy_unit_;
};

struct PolygonReport {
    bool satisfied = true;
    std::vector<double> slacks;  // slack_i = sum_{j != i} Delta_j - Delta_i

    double min_slack() const;
};

// 2 lambda_min(rho_i) E for 1 <= qubit <= n; throws IndexError otherwise and
// DomainError for single-qubit states.
Energy meg_component(const StateVector& psi, int qubit, double energy_unit = 1.0);

MegVector meg_vector(const StateVector& psi, double energy_unit = 1.0);

PolygonReport polygon_check(const MegVector& lambda, double tol = 1e-9);

// sum_j Delta_j.
Energy total_meg(const MegVector& lambda);

// max_j (Delta_j - sum_{k != j} Delta_k) = -(minimum polygon slack); <= 0
// whenever the polygon inequality holds, and exactly 0 for biseparable
// three-qubit states. Throws DomainError for n < 3.
Energy eta_indicator(const MegVector& lambda);

inline constexpr double kEtaZeroTolerance = 1e-7;

// True iff |eta| > tol for a three-qubit state, which certifies genuine
// tripartite entanglement. False means inconclusive, not biseparable.
// Throws DomainError unless psi has exactly 3 qubits.
bool genuine_tripartite_witness(const StateVector& psi, double tol = kEtaZeroTolerance);

}  // namespace ergogap
