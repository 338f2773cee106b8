#pragma once

// Test-only oracles. Everything here is written independently of the
// library's fast paths: bit strings are handled as explicit digit arrays,
// passive energies come from enumerating level assignments, and minimal
// energies from sampling unitaries.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ergogap/qstate.hpp"
#include "ergogap/random.hpp"
#include "ergogap/states.hpp"
#include "ergogap/thermo.hpp"

namespace ergogap::oracle {

inline std::vector<int> digits(std::size_t index, int n) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) d[static_cast<std::size_t>(q)] = static_cast<int>((index >> (n - 1 - q)) & 1U);
    return d;  // d[0] is qubit 1
}

inline std::size_t undigits(const std::vector<int>& d) {
    std::size_t s = 0;
    for (int b : d) s = (s << 1) | static_cast<std::size_t>(b);
    return s;
}

// Reduced matrix on the sorted 1-based `keep` qubits by summing
// <a t|rho|b t> over all traced digit patterns.
inline CMatrix brute_partial_trace(const CMatrix& rho, int n, const std::vector<int>& keep) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t dk = std::size_t{1} << keep.size();
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const auto dr = digits(r, n), dc = digits(c, n);
            bool traced_equal = true;
            for (int q = 1; q <= n; ++q) {
                if (std::find(keep.begin(), keep.end(), q) != keep.end()) continue;
                if (dr[static_cast<std::size_t>(q - 1)] != dc[static_cast<std::size_t>(q - 1)]) traced_equal = false;
            }
            if (!traced_equal) continue;
            std::vector<int> kr, kc;
            for (int q : keep) {
                kr.push_back(dr[static_cast<std::size_t>(q - 1)]);
                kc.push_back(dc[static_cast<std::size_t>(q - 1)]);
            }
            out(static_cast<Eigen::Index>(undigits(kr)), static_cast<Eigen::Index>(undigits(kc))) +=
                rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

// min over all assignments of eigenvalues to levels of sum lambda_k e_pi(k).
inline double passive_energy_by_enumeration(std::vector<double> lambda, const std::vector<double>& levels) {
    std::vector<std::size_t> perm(levels.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        double e = 0.0;
        for (std::size_t k = 0; k < perm.size(); ++k) e += lambda[k] * levels[perm[k]];
        best = std::min(best, e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// min over sampled Haar unitaries of Tr(U rho U^dagger H).
inline double min_energy_over_unitaries(const DensityMatrix& rho, const HamiltonianSpec& h, int samples,
                                        std::uint64_t seed) {
    RandomSource rng(seed);
    const auto diag = h.diagonal();
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const CMatrix u = haar_random_unitary(rho.dim(), rng);
        const CMatrix rotated = u * rho.matrix() * u.adjoint();
        double e = 0.0;
        for (std::size_t i = 0; i < diag.size(); ++i) e += rotated(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real() * diag[i];
        best = std::min(best, e);
    }
    return best;
}

inline StateVector bell_phi_plus() {
    CVector a = CVector::Zero(4);
    a(0) = a(3) = 1.0 / std::sqrt(2.0);
    return StateVector(2, a);
}

// Uniform on the simplex (normalized exponentials).
inline std::vector<double> random_simplex(int n, RandomSource& rng) {
    std::vector<double> a(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& v : a) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        v = -std::log(u);
        total += v;
    }
    for (double& v : a) v /= total;
    return a;
}

// Real unit vector of the given length with Gaussian direction.
inline std::vector<double> random_unit_reals(std::size_t len, RandomSource& rng) {
    std::vector<double> a(len);
    double norm2 = 0.0;
    for (double& v : a) {
        v = rng.normal();
        norm2 += v * v;
    }
    for (double& v : a) v /= std::sqrt(norm2);
    return a;
}

// |phi>_separated (x) |phi>_pair for a three-qubit register, with the
// separated qubit placed at position `separated` (1..3).
inline StateVector random_biseparable(int separated, RandomSource& rng) {
    const StateVector single = haar_random_state(1, rng);
    const StateVector pair = haar_random_state(2, rng);
    CVector amps = CVector::Zero(8);
    for (std::size_t s = 0; s < 8; ++s) {
        const auto d = digits(s, 3);
        std::vector<int> rest;
        for (int q = 1; q <= 3; ++q)
            if (q != separated) rest.push_back(d[static_cast<std::size_t>(q - 1)]);
        amps(static_cast<Eigen::Index>(s)) =
            single[static_cast<std::size_t>(d[static_cast<std::size_t>(separated - 1)])] * pair[undigits(rest)];
    }
    return StateVector::normalized(3, amps);
}

inline StateVector random_product(int n, RandomSource& rng) {
    std::vector<std::array<Complex, 2>> locals;
    for (int q = 0; q < n; ++q) locals.push_back({rng.complex_normal(), rng.complex_normal()});
    return product_state(locals);
}

}  // namespace ergogap::oracle
