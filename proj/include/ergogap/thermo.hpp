#pragma once

// Hamiltonians, passive states and ergotropy. Energies are reported in
// absolute units, i.e. level values multiplied by the energy unit E.

#include <compare>
#include <cstddef>
#include <vector>

#include "ergogap/qstate.hpp"

namespace ergogap {

struct Energy {
    double value = 0.0;

    friend Energy operator+(Energy a, Energy b) { return {a.value + b.value}; }
    friend Energy operator-(Energy a, Energy b) { return {a.value - b.value}; }
    friend auto operator<=>(const Energy&, const Energy&) = default;
};

// Non-interacting Hamiltonian H = sum_i H_i (x) I_rest, each H_i diagonal in
// the computational basis of its subsystem with ascending levels (units of E).
// Subsystem 1 is the most significant factor, as with qubits.
class HamiltonianSpec {
public:
    // Throws DomainError for empty/non-ascending/non-finite level arrays or a
    // non-positive energy unit.
    explicit HamiltonianSpec(std::vector<std::vector<double>> subsystem_levels, double energy_unit = 1.0);

    // H = E|1><1|.
    static HamiltonianSpec qubit(double energy_unit = 1.0);
    // Composite of n qubit Hamiltonians.
    static HamiltonianSpec qubits(int n, double energy_unit = 1.0);
    // H_A (x) I + I (x) H_B; both must share the energy unit.
    static HamiltonianSpec compose(const HamiltonianSpec& a, const HamiltonianSpec& b);

    std::size_t dim() const;
    bool composite() const { return subsystems_.size() > 1; }
    double energy_unit() const { return energy_unit_; }
    const std::vector<std::vector<double>>& subsystems() const { return subsystems_; }

    // Energy of every computational basis state, basis order, times E.
    std::vector<double> diagonal() const;
    // Basis indices ordered by (energy ascending, index ascending).
    std::vector<std::size_t> level_order() const;
    // Energies sorted ascending, times E.
    std::vector<double> sorted_spectrum() const;

private:
    std::vector<std::vector<double>> subsystems_;
    double energy_unit_;
};

// Split of the qubits 1..n into two nonempty blocks A | B.
class Bipartition {
public:
    // Throws IndexError unless block_a is a nonempty proper subset of 1..n
    // without duplicates.
    Bipartition(int n_qubits, std::vector<int> block_a);
    static Bipartition single(int n_qubits, int qubit) { return Bipartition(n_qubits, {qubit}); }

    int n_qubits() const { return n_qubits_; }
    const std::vector<int>& block_a() const { return block_a_; }
    const std::vector<int>& block_b() const { return block_b_; }

private:
    int n_qubits_;
    std::vector<int> block_a_;
    std::vector<int> block_b_;
};

struct LocalHamiltonians {
    HamiltonianSpec a;
    HamiltonianSpec b;
};

// Qubit Hamiltonians E|1><1| on every qubit of each block.
LocalHamiltonians qubit_locals(const Bipartition& partition, double energy_unit = 1.0);

HamiltonianSpec qubit_hamiltonian(double energy_unit = 1.0);

// Tr(rho H).
Energy mean_energy(const DensityMatrix& rho, const HamiltonianSpec& h);

// sum_k lambda_k |e_k><e_k| with eigenvalues descending on levels ascending
// (ties between equal levels broken by basis index).
DensityMatrix passive_state(const DensityMatrix& rho, const HamiltonianSpec& h);

// Tr(rho^p H) = sum_k lambda_k(desc) e_k(asc).
Energy passive_energy(const DensityMatrix& rho, const HamiltonianSpec& h);

// Tr(rho H) - Tr(rho^p H) >= 0.
Energy ergotropy(const DensityMatrix& rho, const HamiltonianSpec& h);

// Ergotropy of the joint state under a composite Hamiltonian.
Energy global_ergotropy(const DensityMatrix& rho_ab, const HamiltonianSpec& h_ab);

// Tr(rho_AB H_AB) - Tr(rho_A^p H_A) - Tr(rho_B^p H_B) with
// H_AB = H_A (x) I_B + I_A (x) H_B placed on the blocks of `partition`.
Energy local_ergotropy(const DensityMatrix& rho_ab, const Bipartition& partition, const LocalHamiltonians& h);

// Tr(rho_A^p H_A) + Tr(rho_B^p H_B) - Tr(rho_AB^p H_AB).
Energy ergotropic_gap(const DensityMatrix& rho_ab, const Bipartition& partition, const LocalHamiltonians& h);

// Joint state with qubits reordered so block A comes first (then B), each
// block in ascending qubit order.
DensityMatrix reorder_to_blocks(const DensityMatrix& rho_ab, const Bipartition& partition);

}  // namespace ergogap
