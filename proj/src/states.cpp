#include "ergogap/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ergogap/errors.hpp"

namespace ergogap {

namespace {

constexpr double kCoefficientTol = 1e-10;
constexpr double kMinTransformedNorm = 1e-10;

void require_register(int n, int min_n, const char* what) {
    if (n < min_n || n > 30) {
        throw DomainError(std::string(what) + ": qubit count " + std::to_string(n) + " out of range");
    }
}

std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

}  // namespace

StateVector ghz_general(int n, double theta) {
    require_register(n, 2, "ghz_general");
    if (!(theta > 0.0 && theta <= std::numbers::pi / 4 + 1e-12)) {
        throw DomainError("ghz_general: theta must lie in (0, pi/4]");
    }
    const std::size_t dim = std::size_t{1} << n;
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim));
    amps(0) = std::cos(theta);
    amps(static_cast<Eigen::Index>(dim - 1)) = std::sin(theta);
    return StateVector::normalized(n, std::move(amps));
}

StateVector w_general(std::span<const double> coeffs) {
    const int n = static_cast<int>(coeffs.size());
    require_register(n, 2, "w_general");
    double total = 0.0;
    for (double a : coeffs) {
        if (!(a >= 0.0)) throw NormalizationError("w_general: coefficients must be non-negative");
        total += a;
    }
    if (std::abs(total - 1.0) > kCoefficientTol) {
        throw NormalizationError("w_general: coefficients sum to " + std::to_string(total) + ", expected 1");
    }
    CVector amps = CVector::Zero(Eigen::Index{1} << n);
    for (int i = 1; i <= n; ++i) {
        amps(Eigen::Index{1} << bit_of(i, n)) = std::sqrt(coeffs[static_cast<std::size_t>(i - 1)]);
    }
    return StateVector::normalized(n, std::move(amps));
}

std::vector<std::size_t> weight_basis(int n, int l) {
    std::vector<std::size_t> out;
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t s = 0; s < dim; ++s) {
        if (std::popcount(s) == l) out.push_back(s);
    }
    return out;
}

StateVector dicke(int n, int l) {
    require_register(n, 2, "dicke");
    if (l < 1 || l > n - 1) throw IndexError("dicke: excitation count must lie in 1..n-1");
    const auto support = weight_basis(n, l);
    const double amp = 1.0 / std::sqrt(static_cast<double>(support.size()));
    CVector amps = CVector::Zero(Eigen::Index{1} << n);
    for (std::size_t s : support) amps(static_cast<Eigen::Index>(s)) = amp;
    return StateVector::normalized(n, std::move(amps));
}

StateVector dicke_general(int n, int l, std::span<const double> alphas) {
    require_register(n, 2, "dicke_general");
    if (l < 1 || l > n - 1) throw IndexError("dicke_general: excitation count must lie in 1..n-1");
    const std::size_t expected = binomial(n, l);
    if (alphas.size() != expected) {
        throw ShapeError("dicke_general: expected " + std::to_string(expected) + " coefficients, got " +
                         std::to_string(alphas.size()));
    }
    double norm2 = 0.0;
    for (double a : alphas) norm2 += a * a;
    if (std::abs(norm2 - 1.0) > kCoefficientTol) {
        throw NormalizationError("dicke_general: sum of squared coefficients is " + std::to_string(norm2));
    }
    const auto support = weight_basis(n, l);
    CVector amps = CVector::Zero(Eigen::Index{1} << n);
    for (std::size_t g = 0; g < support.size(); ++g) amps(static_cast<Eigen::Index>(support[g])) = alphas[g];
    return StateVector::normalized(n, std::move(amps));
}

StateVector product_state(std::span<const std::array<Complex, 2>> locals) {
    const int n = static_cast<int>(locals.size());
    require_register(n, 1, "product_state");
    CVector amps = CVector::Ones(1);
    for (const auto& local : locals) {
        const double norm = std::sqrt(std::norm(local[0]) + std::norm(local[1]));
        if (!(norm > 0.0)) throw NormalizationError("product_state: zero local state");
        const Complex c0 = local[0] / norm, c1 = local[1] / norm;
        CVector next(amps.size() * 2);
        for (Eigen::Index i = 0; i < amps.size(); ++i) {
            next(2 * i) = amps(i) * c0;
            next(2 * i + 1) = amps(i) * c1;
        }
        amps = std::move(next);
    }
    return StateVector::normalized(n, std::move(amps));
}

StateVector haar_random_state(int n, RandomSource& rng) {
    require_register(n, 1, "haar_random_state");
    CVector amps(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < amps.size(); ++i) amps(i) = rng.complex_normal();
    return StateVector::normalized(n, std::move(amps));
}

CMatrix haar_random_unitary(std::size_t dim, RandomSource& rng) {
    const auto d = static_cast<Eigen::Index>(dim);
    CMatrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) z(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    const CMatrix& r = qr.matrixQR();
    for (Eigen::Index k = 0; k < d; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

double condition_number(const Eigen::Matrix2cd& m) {
    // The closed form sqrt(s_max^2 / s_min^2) cancels catastrophically near
    // unitaries, so take the singular values directly.
    const Eigen::Vector2d s = Eigen::JacobiSVD<Eigen::Matrix2cd>(m).singularValues();
    if (s(1) == 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / s(1);
}

SloccOperator::SloccOperator(std::vector<Eigen::Matrix2cd> locals) : locals_(std::move(locals)) {
    if (locals_.empty()) throw DomainError("SloccOperator: no local operators");
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        if (!(std::abs(locals_[i].determinant()) > kMinAbsDeterminant)) {
            throw DomainError("SloccOperator: local operator " + std::to_string(i + 1) + " is not invertible");
        }
    }
}

SloccOperator SloccOperator::identity(int n) {
    return SloccOperator(std::vector<Eigen::Matrix2cd>(static_cast<std::size_t>(n), Eigen::Matrix2cd::Identity()));
}

SloccOperator random_slocc(int n, RandomSource& rng, double condition_cap) {
    require_register(n, 1, "random_slocc");
    if (!(condition_cap >= 1.0)) throw DomainError("random_slocc: condition cap must be >= 1");
    std::vector<Eigen::Matrix2cd> locals;
    locals.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (condition_cap == 1.0) {
            locals.emplace_back(haar_random_unitary(2, rng));
            continue;
        }
        Eigen::Matrix2cd g;
        do {
            g << rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), rng.complex_normal();
        } while (!(std::abs(g.determinant()) > SloccOperator::kMinAbsDeterminant) ||
                 condition_number(g) > condition_cap);
        locals.push_back(g);
    }
    return SloccOperator(std::move(locals));
}

StateVector apply_slocc(const StateVector& psi, const SloccOperator& g) {
    const int n = psi.n_qubits();
    if (g.n_qubits() != n) throw ShapeError("apply_slocc: operator and state qubit counts differ");
    CVector amps = psi.amplitudes();
    for (int q = 1; q <= n; ++q) {
        const Eigen::Matrix2cd& op = g.local(q);
        const std::size_t mask = std::size_t{1} << bit_of(q, n);
        for (std::size_t s = 0; s < psi.dim(); ++s) {
            if (s & mask) continue;
            const auto i0 = static_cast<Eigen::Index>(s);
            const auto i1 = static_cast<Eigen::Index>(s | mask);
            const Complex a0 = amps(i0), a1 = amps(i1);
            amps(i0) = op(0, 0) * a0 + op(0, 1) * a1;
            amps(i1) = op(1, 0) * a0 + op(1, 1) * a1;
        }
    }
    const double norm = amps.norm();
    if (!(norm > kMinTransformedNorm)) {
        throw DegenerateTransformError("apply_slocc: transformed state norm " + std::to_string(norm) +
                                       " below threshold");
    }
    return StateVector::normalized(n, std::move(amps));
}

}  // namespace ergogap
