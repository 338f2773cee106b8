#include "ergogap/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

bool is_power_of_two_dim(std::size_t dim, int n_qubits) {
    return n_qubits >= 0 && n_qubits < 63 && dim == (std::size_t{1} << n_qubits);
}

double hermitian_defect(const CMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Full-register bit positions for a sorted list of 1-based qubits; entry j
// belongs to the j-th qubit, which is the (size-1-j)-th bit of the sub-index.
std::vector<int> bit_positions(const std::vector<int>& qubits, int n_qubits) {
    std::vector<int> pos;
    pos.reserve(qubits.size());
    for (int q : qubits) pos.push_back(bit_of(q, n_qubits));
    return pos;
}

std::size_t scatter(std::size_t sub_index, const std::vector<int>& positions) {
    const std::size_t k = positions.size();
    std::size_t full = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if ((sub_index >> (k - 1 - j)) & 1U) full |= std::size_t{1} << positions[j];
    }
    return full;
}

struct Split {
    std::vector<int> kept;
    std::vector<int> traced;
};

Split split_qubits(int n_qubits, std::span<const int> keep) {
    if (keep.empty()) throw IndexError("partial_trace: keep set is empty");
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw IndexError("partial_trace: duplicate qubit in keep set");
    }
    if (kept.front() < 1 || kept.back() > n_qubits) {
        throw IndexError("partial_trace: qubit index out of range 1.." + std::to_string(n_qubits));
    }
    std::vector<int> traced;
    for (int q = 1; q <= n_qubits; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
    }
    return {std::move(kept), std::move(traced)};
}

Spectrum sorted_descending(const Eigen::SelfAdjointEigenSolver<CMatrix>& solver) {
    const Eigen::Index d = solver.eigenvalues().size();
    Spectrum out;
    out.eigenvalues.resize(d);
    out.eigenvectors.resize(d, d);
    // Eigen returns ascending order.
    for (Eigen::Index k = 0; k < d; ++k) {
        out.eigenvalues(k) = solver.eigenvalues()(d - 1 - k);
        out.eigenvectors.col(k) = solver.eigenvectors().col(d - 1 - k);
    }
    return out;
}

}  // namespace

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1) throw ShapeError("StateVector: n_qubits must be positive");
    if (!is_power_of_two_dim(static_cast<std::size_t>(amplitudes_.size()), n_qubits)) {
        throw ShapeError("StateVector: expected " + std::to_string(std::size_t{1} << n_qubits) +
                         " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tolerance::kNormalization) {
        throw NormalizationError("StateVector: squared norm " + std::to_string(norm2) + " differs from 1");
    }
}

StateVector StateVector::normalized(int n_qubits, CVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw NormalizationError("StateVector: cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return StateVector(n_qubits, std::move(amplitudes));
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    if (n_qubits < 1 || n_qubits >= 63) throw ShapeError("StateVector::basis: bad qubit count");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) throw IndexError("StateVector::basis: index out of range");
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim));
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const Eigen::Index db = static_cast<Eigen::Index>(b.dim());
    CVector out(static_cast<Eigen::Index>(a.dim()) * db);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
        out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
    }
    return StateVector::normalized(a.n_qubits() + b.n_qubits(), std::move(out));
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw ShapeError("DensityMatrix: matrix must be square and nonempty");
    }
    if (!entries_.allFinite()) throw ShapeError("DensityMatrix: non-finite entries");
    if (hermitian_defect(entries_) > tolerance::kHermitian) {
        throw ShapeError("DensityMatrix: matrix is not Hermitian");
    }
    const double tr = entries_.trace().real();
    if (std::abs(tr - 1.0) > tolerance::kTrace) {
        throw NormalizationError("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tolerance::kNegativeEigenvalue) {
        throw NumericalError("DensityMatrix: matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    if (dim == 0) throw ShapeError("maximally_mixed: dim must be positive");
    const auto d = static_cast<Eigen::Index>(dim);
    return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(dim));
}

DensityMatrix density_from_pure(const StateVector& psi) {
    const CVector& a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint(), DensityMatrix::Trusted{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, int n_qubits, std::span<const int> keep) {
    if (!is_power_of_two_dim(rho.dim(), n_qubits)) {
        throw ShapeError("partial_trace: density matrix dimension is not 2^n_qubits");
    }
    const Split split = split_qubits(n_qubits, keep);
    const auto kept_pos = bit_positions(split.kept, n_qubits);
    const auto traced_pos = bit_positions(split.traced, n_qubits);
    const std::size_t dk = std::size_t{1} << split.kept.size();
    const std::size_t dt = std::size_t{1} << split.traced.size();

    std::vector<std::size_t> kept_full(dk), traced_full(dt);
    for (std::size_t a = 0; a < dk; ++a) kept_full[a] = scatter(a, kept_pos);
    for (std::size_t t = 0; t < dt; ++t) traced_full[t] = scatter(t, traced_pos);

    const CMatrix& m = rho.matrix();
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            Complex acc{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                acc += m(static_cast<Eigen::Index>(kept_full[a] | traced_full[t]),
                         static_cast<Eigen::Index>(kept_full[b] | traced_full[t]));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
        }
    }
    return DensityMatrix(std::move(out), DensityMatrix::Trusted{});
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const int> keep) {
    const int n = psi.n_qubits();
    const Split split = split_qubits(n, keep);
    const auto kept_pos = bit_positions(split.kept, n);
    const auto traced_pos = bit_positions(split.traced, n);
    const std::size_t dk = std::size_t{1} << split.kept.size();
    const std::size_t dt = std::size_t{1} << split.traced.size();

    // rho_K = M M^dagger with M(a, t) = psi[a | t].
    CMatrix amp(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dt));
    for (std::size_t a = 0; a < dk; ++a) {
        const std::size_t base = scatter(a, kept_pos);
        for (std::size_t t = 0; t < dt; ++t) {
            amp(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(t)) = psi[base | scatter(t, traced_pos)];
        }
    }
    return DensityMatrix(amp * amp.adjoint(), DensityMatrix::Trusted{});
}

Eigen::Matrix2cd single_qubit_marginal(const StateVector& psi, int qubit) {
    const int n = psi.n_qubits();
    if (qubit < 1 || qubit > n) throw IndexError("single_qubit_marginal: qubit out of range");
    const std::size_t mask = std::size_t{1} << bit_of(qubit, n);
    double p0 = 0.0, p1 = 0.0;
    Complex coherence{0.0, 0.0};
    for (std::size_t s = 0; s < psi.dim(); ++s) {
        if (s & mask) continue;
        const Complex a0 = psi[s];
        const Complex a1 = psi[s | mask];
        p0 += std::norm(a0);
        p1 += std::norm(a1);
        coherence += a0 * std::conj(a1);
    }
    Eigen::Matrix2cd m;
    m << p0, coherence, std::conj(coherence), p1;
    return m;
}

Eigen::Matrix2cd single_qubit_marginal(const DensityMatrix& rho, int n_qubits, int qubit) {
    const int keep[] = {qubit};
    const DensityMatrix reduced = partial_trace(rho, n_qubits, keep);
    return reduced.matrix();
}

double min_eigenvalue_2x2(const Eigen::Matrix2cd& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double b = std::abs(m(0, 1));
    const double half_gap = std::hypot(0.5 * (a - d), b);
    return 0.5 * (a + d) - half_gap;
}

Spectrum eig_hermitian(const CMatrix& m) {
    if (m.rows() == 0 || m.rows() != m.cols()) throw ShapeError("eig_hermitian: matrix must be square");
    if (hermitian_defect(m) > tolerance::kHermitian) throw ShapeError("eig_hermitian: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalError("eig_hermitian: eigensolver did not converge");
    return sorted_descending(solver);
}

Spectrum eig_hermitian(const DensityMatrix& rho) {
    Spectrum s = eig_hermitian(rho.matrix());
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        double& v = s.eigenvalues(k);
        if (v < -tolerance::kNegativeEigenvalue) {
            throw NumericalError("eig_hermitian: eigenvalue " + std::to_string(v) + " below tolerance");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    const double total = s.eigenvalues.sum();
    if (total > 0.0) s.eigenvalues /= total;
    return s;
}

double purity(const DensityMatrix& rho) {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    return rho.matrix().squaredNorm();
}

double fidelity_pure(const DensityMatrix& rho, const StateVector& psi) {
    if (rho.dim() != psi.dim()) throw ShapeError("fidelity_pure: dimension mismatch");
    const CVector& a = psi.amplitudes();
    const double f = (a.adjoint() * rho.matrix() * a)(0, 0).real();
    return std::clamp(f, 0.0, 1.0);
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight_b) {
    if (a.dim() != b.dim()) throw ShapeError("mix: dimension mismatch");
    if (!(weight_b >= 0.0 && weight_b <= 1.0)) throw DomainError("mix: weight outside [0, 1]");
    return DensityMatrix((1.0 - weight_b) * a.matrix() + weight_b * b.matrix(), DensityMatrix::Trusted{});
}

}  // namespace ergogap
