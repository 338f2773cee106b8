#include "ergogap/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

constexpr double kZeroEigenvalue = 1e-12;

void require_dim(const DensityMatrix& rho, const HamiltonianSpec& h, const char* what) {
    if (rho.dim() != h.dim()) {
        throw ShapeError(std::string(what) + ": state dimension " + std::to_string(rho.dim()) +
                         " does not match Hamiltonian dimension " + std::to_string(h.dim()));
    }
}

Eigen::VectorXd passive_weights(const DensityMatrix& rho) {
    Eigen::VectorXd lambda = eig_hermitian(rho).eigenvalues;
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        if (lambda(k) < kZeroEigenvalue) lambda(k) = 0.0;
    }
    return lambda;
}

std::size_t block_index(std::size_t full, const std::vector<int>& block, int n_qubits) {
    std::size_t out = 0;
    for (int q : block) out = (out << 1) | ((full >> bit_of(q, n_qubits)) & 1U);
    return out;
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(std::vector<std::vector<double>> subsystem_levels, double energy_unit)
    : subsystems_(std::move(subsystem_levels)), energy_unit_(energy_unit) {
    if (!(energy_unit_ > 0.0) || !std::isfinite(energy_unit_)) {
        throw DomainError("HamiltonianSpec: energy unit must be positive and finite");
    }
    if (subsystems_.empty()) throw DomainError("HamiltonianSpec: no subsystems");
    for (const auto& levels : subsystems_) {
        if (levels.empty()) throw DomainError("HamiltonianSpec: subsystem without levels");
        for (double e : levels) {
            if (!std::isfinite(e)) throw DomainError("HamiltonianSpec: non-finite level");
        }
        if (!std::is_sorted(levels.begin(), levels.end())) {
            throw DomainError("HamiltonianSpec: levels must be ascending");
        }
    }
}

HamiltonianSpec HamiltonianSpec::qubit(double energy_unit) { return HamiltonianSpec({{0.0, 1.0}}, energy_unit); }

HamiltonianSpec HamiltonianSpec::qubits(int n, double energy_unit) {
    if (n < 1) throw DomainError("HamiltonianSpec::qubits: n must be positive");
    return HamiltonianSpec(std::vector<std::vector<double>>(static_cast<std::size_t>(n), {0.0, 1.0}), energy_unit);
}

HamiltonianSpec HamiltonianSpec::compose(const HamiltonianSpec& a, const HamiltonianSpec& b) {
    if (a.energy_unit_ != b.energy_unit_) throw DomainError("HamiltonianSpec::compose: energy units differ");
    auto subsystems = a.subsystems_;
    subsystems.insert(subsystems.end(), b.subsystems_.begin(), b.subsystems_.end());
    return HamiltonianSpec(std::move(subsystems), a.energy_unit_);
}

std::size_t HamiltonianSpec::dim() const {
    std::size_t d = 1;
    for (const auto& levels : subsystems_) d *= levels.size();
    return d;
}

std::vector<double> HamiltonianSpec::diagonal() const {
    std::vector<double> diag{0.0};
    for (const auto& levels : subsystems_) {
        std::vector<double> next;
        next.reserve(diag.size() * levels.size());
        for (double base : diag)
            for (double e : levels) next.push_back(base + e);
        diag = std::move(next);
    }
    for (double& e : diag) e *= energy_unit_;
    return diag;
}

std::vector<std::size_t> HamiltonianSpec::level_order() const {
    const auto diag = diagonal();
    std::vector<std::size_t> order(diag.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
    return order;
}

std::vector<double> HamiltonianSpec::sorted_spectrum() const {
    auto diag = diagonal();
    std::sort(diag.begin(), diag.end());
    return diag;
}

Bipartition::Bipartition(int n_qubits, std::vector<int> block_a) : n_qubits_(n_qubits), block_a_(std::move(block_a)) {
    if (n_qubits_ < 2) throw IndexError("Bipartition: need at least two qubits");
    std::sort(block_a_.begin(), block_a_.end());
    if (block_a_.empty() || static_cast<int>(block_a_.size()) >= n_qubits_) {
        throw IndexError("Bipartition: block A must be a nonempty proper subset");
    }
    if (std::adjacent_find(block_a_.begin(), block_a_.end()) != block_a_.end()) {
        throw IndexError("Bipartition: duplicate qubit in block A");
    }
    if (block_a_.front() < 1 || block_a_.back() > n_qubits_) throw IndexError("Bipartition: qubit out of range");
    for (int q = 1; q <= n_qubits_; ++q) {
        if (!std::binary_search(block_a_.begin(), block_a_.end(), q)) block_b_.push_back(q);
    }
}

LocalHamiltonians qubit_locals(const Bipartition& partition, double energy_unit) {
    return {HamiltonianSpec::qubits(static_cast<int>(partition.block_a().size()), energy_unit),
            HamiltonianSpec::qubits(static_cast<int>(partition.block_b().size()), energy_unit)};
}

HamiltonianSpec qubit_hamiltonian(double energy_unit) { return HamiltonianSpec::qubit(energy_unit); }

Energy mean_energy(const DensityMatrix& rho, const HamiltonianSpec& h) {
    require_dim(rho, h, "mean_energy");
    const auto diag = h.diagonal();
    double e = 0.0;
    for (std::size_t s = 0; s < diag.size(); ++s) e += rho(s, s).real() * diag[s];
    return {e};
}

DensityMatrix passive_state(const DensityMatrix& rho, const HamiltonianSpec& h) {
    require_dim(rho, h, "passive_state");
    const Eigen::VectorXd lambda = passive_weights(rho);
    const auto order = h.level_order();
    const auto d = static_cast<Eigen::Index>(rho.dim());
    CMatrix out = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto s = static_cast<Eigen::Index>(order[k]);
        out(s, s) = lambda(static_cast<Eigen::Index>(k));
    }
    return DensityMatrix(std::move(out));
}

Energy passive_energy(const DensityMatrix& rho, const HamiltonianSpec& h) {
    require_dim(rho, h, "passive_energy");
    const Eigen::VectorXd lambda = passive_weights(rho);
    const auto levels = h.sorted_spectrum();
    double e = 0.0;
    for (std::size_t k = 0; k < levels.size(); ++k) e += lambda(static_cast<Eigen::Index>(k)) * levels[k];
    return {e};
}

Energy ergotropy(const DensityMatrix& rho, const HamiltonianSpec& h) {
    const double w = mean_energy(rho, h).value - passive_energy(rho, h).value;
    // Rounding can push an exactly passive state a few ulps below zero.
    return {std::max(w, 0.0)};
}

Energy global_ergotropy(const DensityMatrix& rho_ab, const HamiltonianSpec& h_ab) { return ergotropy(rho_ab, h_ab); }

DensityMatrix reorder_to_blocks(const DensityMatrix& rho_ab, const Bipartition& partition) {
    const int n = partition.n_qubits();
    if (rho_ab.dim() != (std::size_t{1} << n)) throw ShapeError("reorder_to_blocks: dimension is not 2^n");
    std::vector<int> order = partition.block_a();
    order.insert(order.end(), partition.block_b().begin(), partition.block_b().end());
    const std::size_t dim = rho_ab.dim();
    std::vector<std::size_t> to_new(dim);
    for (std::size_t s = 0; s < dim; ++s) to_new[s] = block_index(s, order, n);
    CMatrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out(static_cast<Eigen::Index>(to_new[r]), static_cast<Eigen::Index>(to_new[c])) =
                rho_ab(r, c);
    return DensityMatrix(std::move(out));
}

namespace {

struct BlockEnergies {
    double passive_a;
    double passive_b;
};

BlockEnergies block_passive_energies(const DensityMatrix& rho_ab, const Bipartition& partition,
                                     const LocalHamiltonians& h) {
    const int n = partition.n_qubits();
    if (rho_ab.dim() != (std::size_t{1} << n)) throw ShapeError("bipartite state dimension is not 2^n");
    const DensityMatrix rho_a = partial_trace(rho_ab, n, partition.block_a());
    const DensityMatrix rho_b = partial_trace(rho_ab, n, partition.block_b());
    return {passive_energy(rho_a, h.a).value, passive_energy(rho_b, h.b).value};
}

}  // namespace

Energy local_ergotropy(const DensityMatrix& rho_ab, const Bipartition& partition, const LocalHamiltonians& h) {
    const BlockEnergies local = block_passive_energies(rho_ab, partition, h);
    const HamiltonianSpec h_ab = HamiltonianSpec::compose(h.a, h.b);
    const Energy total = mean_energy(reorder_to_blocks(rho_ab, partition), h_ab);
    return {total.value - local.passive_a - local.passive_b};
}

Energy ergotropic_gap(const DensityMatrix& rho_ab, const Bipartition& partition, const LocalHamiltonians& h) {
    const BlockEnergies local = block_passive_energies(rho_ab, partition, h);
    // Passive energy depends only on the spectra, so no reordering is needed.
    const HamiltonianSpec h_ab = HamiltonianSpec::compose(h.a, h.b);
    return {local.passive_a + local.passive_b - passive_energy(rho_ab, h_ab).value};
}

}  // namespace ergogap
