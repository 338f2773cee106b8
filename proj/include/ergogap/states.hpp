#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ergogap/qstate.hpp"
#include "ergogap/random.hpp"

namespace ergogap {

// cos(theta)|0...0> + sin(theta)|1...1>, n >= 2, theta in (0, pi/4].
StateVector ghz_general(int n, double theta);

// sum_i sqrt(a_i)|0..1_i..0>; a_i >= 0 summing to 1 within 1e-10.
// Coefficients are independent per qubit (no ordering assumed).
StateVector w_general(std::span<const double> coeffs);

// Uniform superposition of the C(n, l) weight-l basis states, 1 <= l <= n-1.
StateVector dicke(int n, int l);

// sum_g alpha_g |g> over weight-l basis states, with alphas indexed in
// ascending basis-index order (see weight_basis). Requires
// alphas.size() == C(n, l) and sum alpha_g^2 = 1 within 1e-10.
StateVector dicke_general(int n, int l, std::span<const double> alphas);

// Ascending basis indices of Hamming weight l in an n-qubit register.
std::vector<std::size_t> weight_basis(int n, int l);

// (x)_i (c0_i|0> + c1_i|1>); each local pair is normalized independently.
StateVector product_state(std::span<const std::array<Complex, 2>> locals);

// Unitarily invariant random pure state (normalized complex Gaussian).
StateVector haar_random_state(int n, RandomSource& rng);

// Haar-distributed dim x dim unitary (QR of a Ginibre matrix with the
// diagonal phase fixed).
CMatrix haar_random_unitary(std::size_t dim, RandomSource& rng);

double condition_number(const Eigen::Matrix2cd& m);

// Tensor product g_1 (x) ... (x) g_n of invertible single-qubit operators.
class SloccOperator {
public:
    static constexpr double kMinAbsDeterminant = 1e-8;

    // Throws DomainError when some |det g_i| <= 1e-8.
    explicit SloccOperator(std::vector<Eigen::Matrix2cd> locals);
    static SloccOperator identity(int n);

    int n_qubits() const { return static_cast<int>(locals_.size()); }
    const std::vector<Eigen::Matrix2cd>& locals() const { return locals_; }
    const Eigen::Matrix2cd& local(int qubit) const { return locals_.at(static_cast<std::size_t>(qubit - 1)); }

private:
    std::vector<Eigen::Matrix2cd> locals_;
};

// n local operators with condition number <= condition_cap: complex Gaussian
// draws rejected above the cap; condition_cap == 1 yields Haar local unitaries.
// Throws DomainError for condition_cap < 1.
SloccOperator random_slocc(int n, RandomSource& rng, double condition_cap = 10.0);

// (g_1 (x) ... (x) g_n)|psi>, renormalized. Throws ShapeError on a qubit-count
// mismatch and DegenerateTransformError when the norm drops below 1e-10.
StateVector apply_slocc(const StateVector& psi, const SloccOperator& g);

}  // namespace ergogap
