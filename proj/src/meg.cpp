#include "ergogap/meg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {
constexpr double kComponentSlack = 1e-9;
}

MegVector::MegVector(std::vector<double> deltas, double energy_unit)
    : deltas_(std::move(deltas)), energy_unit_(energy_unit) {
    if (!(energy_unit_ > 0.0) || !std::isfinite(energy_unit_)) {
        throw DomainError("MegVector: energy unit must be positive and finite");
    }
    if (deltas_.empty()) throw DomainError("MegVector: empty vector");
    for (double& d : deltas_) {
        if (!std::isfinite(d) || d < -kComponentSlack * energy_unit_ ||
            d > energy_unit_ * (1.0 + kComponentSlack)) {
            throw DomainError("MegVector: component " + std::to_string(d) + " outside [0, E]");
        }
        d = std::clamp(d, 0.0, energy_unit_);
    }
}

double PolygonReport::min_slack() const {
    return slacks.empty() ? 0.0 : *std::min_element(slacks.begin(), slacks.end());
}

Energy meg_component(const StateVector& psi, int qubit, double energy_unit) {
    if (psi.n_qubits() < 2) throw DomainError("meg_component: a single qubit has no bipartition");
    if (qubit < 1 || qubit > psi.n_qubits()) {
        throw IndexError("meg_component: qubit " + std::to_string(qubit) + " out of range 1.." +
                         std::to_string(psi.n_qubits()));
    }
    const double lambda_min = std::clamp(min_eigenvalue_2x2(single_qubit_marginal(psi, qubit)), 0.0, 0.5);
    return {2.0 * lambda_min * energy_unit};
}

MegVector meg_vector(const StateVector& psi, double energy_unit) {
    std::vector<double> deltas;
    deltas.reserve(static_cast<std::size_t>(psi.n_qubits()));
    for (int i = 1; i <= psi.n_qubits(); ++i) deltas.push_back(meg_component(psi, i, energy_unit).value);
    return MegVector(std::move(deltas), energy_unit);
}

PolygonReport polygon_check(const MegVector& lambda, double tol) {
    const auto& d = lambda.deltas();
    const double total = std::accumulate(d.begin(), d.end(), 0.0);
    PolygonReport report;
    report.slacks.reserve(d.size());
    for (double di : d) report.slacks.push_back((total - di) - di);
    report.satisfied = report.min_slack() >= -tol;
    return report;
}

Energy total_meg(const MegVector& lambda) {
    const auto& d = lambda.deltas();
    return {std::accumulate(d.begin(), d.end(), 0.0)};
}

Energy eta_indicator(const MegVector& lambda) {
    if (lambda.n() < 3) throw DomainError("eta_indicator: requires at least 3 qubits");
    return {-polygon_check(lambda).min_slack()};
}

bool genuine_tripartite_witness(const StateVector& psi, double tol) {
    if (psi.n_qubits() != 3) throw DomainError("genuine_tripartite_witness: defined for 3 qubits only");
    const MegVector lambda = meg_vector(psi, 1.0);
    return std::abs(eta_indicator(lambda).value) > tol;
}

}  // namespace ergogap
