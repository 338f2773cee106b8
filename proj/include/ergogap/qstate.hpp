#pragma once

// Dense complex linear algebra for multi-qubit states.
//
// Basis convention, shared by every module: qubits are numbered 1..n and
// qubit 1 is the most significant bit of the computational-basis index, so
// |s_1 s_2 ... s_n> lives at index sum_i s_i * 2^(n-i).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ergogap {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

namespace tolerance {
inline constexpr double kNormalization = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kNegativeEigenvalue = 1e-10;
}  // namespace tolerance

// Bit position (0 = least significant) of 1-based qubit `qubit` in an
// n-qubit basis index.
constexpr int bit_of(int qubit, int n_qubits) { return n_qubits - qubit; }

class StateVector {
public:
    // Throws ShapeError unless amplitudes.size() == 2^n_qubits and
    // NormalizationError unless the squared norm is 1 within 1e-10.
    StateVector(int n_qubits, CVector amplitudes);

    // Rescales to unit norm; throws NormalizationError for a zero vector.
    static StateVector normalized(int n_qubits, CVector amplitudes);
    static StateVector basis(int n_qubits, std::size_t index);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const CVector& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

private:
    int n_qubits_;
    CVector amplitudes_;
};

// |a> (x) |b>, with the qubits of `a` first.
StateVector tensor(const StateVector& a, const StateVector& b);

class DensityMatrix {
public:
    // Validates Hermiticity (1e-10), unit trace (1e-10) and eigenvalues
    // >= -1e-10. Throws ShapeError / NormalizationError / NumericalError.
    explicit DensityMatrix(CMatrix entries);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const CMatrix& matrix() const { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    // I/dim.
    static DensityMatrix maximally_mixed(std::size_t dim);

private:
    struct Trusted {};
    DensityMatrix(CMatrix entries, Trusted) : entries_(std::move(entries)) {}

    friend DensityMatrix density_from_pure(const StateVector&);
    friend DensityMatrix partial_trace(const DensityMatrix&, int, std::span<const int>);
    friend DensityMatrix partial_trace(const StateVector&, std::span<const int>);
    friend DensityMatrix mix(const DensityMatrix&, const DensityMatrix&, double);

    CMatrix entries_;
};

struct Spectrum {
    Eigen::VectorXd eigenvalues;  // descending
    CMatrix eigenvectors;         // column k pairs with eigenvalues(k)
};

DensityMatrix density_from_pure(const StateVector& psi);

// Reduced state on the 1-based qubits in `keep` (any order, no duplicates);
// kept qubits appear in ascending order in the result. Requires
// rho.dim() == 2^n_qubits. Throws IndexError for an empty, duplicated or
// out-of-range keep set.
DensityMatrix partial_trace(const DensityMatrix& rho, int n_qubits, std::span<const int> keep);

// Same as partial_trace(density_from_pure(psi), ...) without forming the
// full 2^n x 2^n matrix.
DensityMatrix partial_trace(const StateVector& psi, std::span<const int> keep);

// 2x2 reduced state of one qubit, computed directly from amplitudes.
Eigen::Matrix2cd single_qubit_marginal(const StateVector& psi, int qubit);
Eigen::Matrix2cd single_qubit_marginal(const DensityMatrix& rho, int n_qubits, int qubit);

// Smaller eigenvalue of a Hermitian 2x2 matrix, closed form.
double min_eigenvalue_2x2(const Eigen::Matrix2cd& m);

// Full decomposition of a Hermitian matrix (no clamping). Throws
// ShapeError when ||m - m^dagger||_max > 1e-10 or m is not square.
Spectrum eig_hermitian(const CMatrix& m);

// As above, then eigenvalues in [-1e-10, 0) are clamped to zero, values
// above one are clamped to one, and the spectrum is renormalized to unit sum.
Spectrum eig_hermitian(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// <psi|rho|psi>; throws ShapeError on dimension mismatch.
double fidelity_pure(const DensityMatrix& rho, const StateVector& psi);

// (1 - weight_b) a + weight_b b, weight_b in [0, 1].
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight_b);

}  // namespace ergogap
