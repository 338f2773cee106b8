// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned here and printed with each verdict.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ergogap/errors.hpp"
#include "ergogap/meg.hpp"
#include "ergogap/polytope.hpp"
#include "ergogap/states.hpp"
#include "ergogap/thermo.hpp"
#include "test_support.hpp"

using namespace ergogap;
namespace label = catalog_label;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass = true;
    std::string detail;
};

class Gate {
public:
    void run(const char* id, const char* title, const std::function<Verdict()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = body();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
        std::fflush(stdout);
        failures_ += v.pass ? 0 : 1;
    }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double max_dev(const MegVector& m, const std::vector<double>& expected) {
    double d = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) d = std::max(d, std::abs(m[i] - expected[i]));
    return d;
}

// |0> on `separated`, Bell pair on the other two qubits.
StateVector bell_with_spectator(int separated) {
    CVector amps = CVector::Zero(8);
    for (std::size_t s : {std::size_t{0}, std::size_t{7}}) {
        // both partner qubits equal, spectator 0
        std::size_t idx = s;
        idx &= ~(std::size_t{1} << bit_of(separated, 3));
        amps(static_cast<Eigen::Index>(idx)) = 1.0 / std::sqrt(2.0);
    }
    return StateVector(3, amps);
}

// Coefficients with a_max > 1/2 (dominant) or all a_i < 1/2 (balanced).
std::vector<double> w_coeffs(int n, bool dominant, RandomSource& rng) {
    for (;;) {
        auto a = oracle::random_simplex(n, rng);
        if (dominant) {
            const double lead = 0.5 + 0.5 * rng.uniform();
            for (double& v : a) v *= 1.0 - lead;
            a[static_cast<std::size_t>(rng.next_u64() % static_cast<std::uint64_t>(n))] += lead;
        }
        const double amax = *std::max_element(a.begin(), a.end());
        if (dominant ? amax > 0.5 + 1e-6 : amax < 0.5 - 1e-6) return a;
    }
}

// (1 - p)|GHZ_4(theta)><.| + p I/16 with purity 0.9 and sum Delta = target.
DensityMatrix noisy_ghz4(double target_total) {
    // (1-p)^2 + (2p(1-p) + p^2)/16 = 0.9  <=>  15p^2 - 30p + 1.6 = 0.
    const double p = (30.0 - std::sqrt(900.0 - 4 * 15 * 1.6)) / 30.0;
    // Single-qubit lambda_min = (1-p) sin^2(theta) + p/2; total = 8 lambda_min.
    const double s2 = (target_total / 8.0 - p / 2.0) / (1.0 - p);
    const double theta = std::asin(std::sqrt(s2));
    return mix(density_from_pure(ghz_general(4, theta)), DensityMatrix::maximally_mixed(16), p);
}

}  // namespace

int main() {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();

    gate.run("AC1", "catalog vertices from the MEG pipeline", [] {
        const auto t0 = std::chrono::steady_clock::now();
        double worst = 0.0;
        RandomSource rng(101);
        for (int k = 0; k < 100; ++k) worst = std::max(worst, max_dev(meg_vector(oracle::random_product(3, rng)), {0, 0, 0}));
        worst = std::max(worst, max_dev(meg_vector(StateVector::basis(3, 0)), {0, 0, 0}));
        worst = std::max(worst, max_dev(meg_vector(bell_with_spectator(1)), {0, 1, 1}));
        worst = std::max(worst, max_dev(meg_vector(bell_with_spectator(2)), {1, 0, 1}));
        worst = std::max(worst, max_dev(meg_vector(bell_with_spectator(3)), {1, 1, 0}));
        worst = std::max(worst, max_dev(meg_vector(ghz_general(3, kPi / 4)), {1, 1, 1}));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return Verdict{worst <= 1e-8 && secs < 1.0, fmt("max |dev| %.2e E (tol 1e-8), runtime %.4fs (limit 1s)", worst, secs)};
    });

    gate.run("AC2", "W facet sum Delta <= 2E", [] {
        RandomSource rng(202);
        double worst = -1e300;
        for (int k = 0; k < 1000; ++k) {
            const auto a = oracle::random_simplex(3, rng);
            worst = std::max(worst, total_meg(meg_vector(w_general(a))).value - 2.0);
        }
        const std::vector<double> sym(3, 1.0 / 3.0);
        const double sym_dev = std::abs(total_meg(meg_vector(w_general(sym))).value - 2.0);
        return Verdict{worst <= 1e-7 && sym_dev <= 1e-8,
                       fmt("1000 draws: max(sum - 2E) %.2e (tol 1e-7); symmetric |sum - 2E| %.2e (tol 1e-8)", worst,
                           sym_dev)};
    });

    gate.run("AC3", "GHZ_3 violates the W facet and is excluded from W", [] {
        const MegVector m = meg_vector(ghz_general(3, kPi / 4));
        const double dev = std::abs(total_meg(m).value - 3.0);
        const bool above = wn_facet_test(m) == FacetSide::above;
        const bool excluded = classify_three_qubit(m).is_excluded(label::kW);
        return Verdict{dev <= 1e-8 && above && excluded,
                       fmt("|sum - 3E| %.2e, facet side %s, W excluded %s", dev, std::string(to_string(wn_facet_test(m))).c_str(),
                           excluded ? "yes" : "no")};
    });

    gate.run("AC4", "generalized W_n totals", [] {
        RandomSource rng(404);
        double worst = 0.0;
        int balanced = 0, dominant = 0;
        for (int n = 3; n <= 6; ++n) {
            for (int k = 0; k < 1000; ++k) {
                const bool dom = k % 2 == 1;
                const auto a = w_coeffs(n, dom, rng);
                const double amax = *std::max_element(a.begin(), a.end());
                const double expected = dom ? 4.0 * (1.0 - amax) : 2.0;
                worst = std::max(worst, std::abs(total_meg(meg_vector(w_general(a))).value - expected));
                (dom ? dominant : balanced) += 1;
            }
        }
        return Verdict{worst <= 1e-8, fmt("n=3..6, %d balanced + %d dominant draws, max |dev| %.2e E (tol 1e-8)", balanced,
                                          dominant, worst)};
    });

    gate.run("AC5", "GHZ_n total = 2n sin^2(theta) E", [] {
        double worst = 0.0, peak = 0.0;
        for (int n = 3; n <= 8; ++n) {
            for (int k = 1; k <= 20; ++k) {
                const double theta = kPi / 4 * k / 20.0;
                const double total = total_meg(meg_vector(ghz_general(n, theta))).value;
                worst = std::max(worst, std::abs(total - 2.0 * n * std::pow(std::sin(theta), 2)));
                if (k == 20) peak = std::max(peak, std::abs(total - n));
            }
        }
        return Verdict{worst <= 1e-8 && peak <= 1e-8,
                       fmt("n=3..8 x 20 angles, max |dev| %.2e E; |total(pi/4) - nE| %.2e (tol 1e-8)", worst, peak)};
    });

    gate.run("AC6", "eta closed forms", [] {
        RandomSource rng(606);
        double ghz_dev = 0.0, dom_dev = 0.0, bal_min_dev = 0.0, bal_max_dev = 0.0;
        for (int n = 3; n <= 8; ++n)
            for (int k = 1; k <= 20; ++k) {
                const double theta = kPi / 4 * k / 20.0;
                const double eta = eta_indicator(meg_vector(ghz_general(n, theta))).value;
                ghz_dev = std::max(ghz_dev, std::abs(eta + 2.0 * (n - 2) * std::pow(std::sin(theta), 2)));
            }
        for (int n = 3; n <= 6; ++n)
            for (int k = 0; k < 200; ++k) {
                dom_dev = std::max(dom_dev, std::abs(eta_indicator(meg_vector(w_general(w_coeffs(n, true, rng)))).value));
                const auto a = w_coeffs(n, false, rng);
                const double eta = eta_indicator(meg_vector(w_general(a))).value;
                const double amin = *std::min_element(a.begin(), a.end());
                const double amax = *std::max_element(a.begin(), a.end());
                bal_min_dev = std::max(bal_min_dev, std::abs(eta - (4.0 * amin - 2.0)));
                bal_max_dev = std::max(bal_max_dev, std::abs(eta - (4.0 * amax - 2.0)));
            }
        const bool pass = ghz_dev <= 1e-8 && dom_dev <= 1e-8 && bal_min_dev <= 1e-8;
        return Verdict{pass, fmt("GHZ_n |dev| %.2e; W a_i>1/2 |eta| %.2e; W all a_i<1/2 |eta - (4a_min-2)E| %.2e "
                                 "(tol 1e-8) [observed |eta - (4a_max-2)E| %.2e]",
                                 ghz_dev, dom_dev, bal_min_dev, bal_max_dev)};
    });

    gate.run("AC7", "Dicke facets", [] {
        RandomSource rng(707);
        double comp_dev = 0.0, total_dev = 0.0, worst_excess = -1e300;
        int pairs = 0;
        for (int n = 2; n <= 8; ++n)
            for (int l = 1; l < n; ++l) {
                ++pairs;
                const MegVector m = meg_vector(dicke(n, l));
                const double lo = std::min(l, n - l);
                for (double d : m.deltas()) comp_dev = std::max(comp_dev, std::abs(d - 2.0 * lo / n));
                const double facet = dicke_facet_value(n, l).value;
                total_dev = std::max(total_dev, std::abs(total_meg(m).value - 2.0 * lo));
                total_dev = std::max(total_dev, std::abs(facet - 2.0 * lo));
                const std::size_t size = weight_basis(n, l).size();
                for (int k = 0; k < 1000; ++k) {
                    const auto alphas = oracle::random_unit_reals(size, rng);
                    worst_excess = std::max(worst_excess, total_meg(meg_vector(dicke_general(n, l, alphas))).value - facet);
                }
            }
        return Verdict{comp_dev <= 1e-8 && total_dev <= 1e-8 && worst_excess <= 1e-8,
                       fmt("%d (n,l) pairs: |Delta_i dev| %.2e, |total dev| %.2e (tol 1e-8); 1000 alpha draws each, "
                           "max(total - facet) %.2e (tol 1e-8)",
                           pairs, comp_dev, total_dev, worst_excess)};
    });

    gate.run("AC8", "noise-hardened W exclusion, n=4, eps=0.1", [] {
        const double threshold = 2.0 + noise_margin(4, 0.1).meg_margin;
        const DensityMatrix above = noisy_ghz4(2.5), below = noisy_ghz4(2.3);
        // Totals through the brute-force partial trace, independent of the library route.
        const auto oracle_total = [](const DensityMatrix& rho) {
            double t = 0.0;
            for (int q = 1; q <= 4; ++q) {
                const CMatrix r = oracle::brute_partial_trace(rho.matrix(), 4, {q});
                t += 2.0 * eig_hermitian(r).eigenvalues(1);
            }
            return t;
        };
        const double t_above = oracle_total(above), t_below = oracle_total(below);
        const double eps_above = 1.0 - purity(above), eps_below = 1.0 - purity(below);
        const auto r_above = classify_noisy(above, 4), r_below = classify_noisy(below, 4);
        const bool pass = std::abs(threshold - 2.42) <= 1e-12 && std::abs(t_above - 2.5) <= 1e-9 &&
                          std::abs(t_below - 2.3) <= 1e-9 && std::abs(eps_above - 0.1) <= 1e-9 &&
                          std::abs(eps_below - 0.1) <= 1e-9 && r_above.is_excluded(label::kW) &&
                          r_below.is_candidate(label::kW);
        return Verdict{pass, fmt("threshold %.12gE (expect 2.42E); rho totals %.12g / %.12g at eps %.12g / %.12g; "
                                 "2.5E excluded %s, 2.3E excluded %s",
                                 threshold, t_above, t_below, eps_above, eps_below,
                                 r_above.is_excluded(label::kW) ? "yes" : "no",
                                 r_below.is_excluded(label::kW) ? "yes" : "no")};
    });

    gate.run("AC9a", "passive state minimal over 10^4 random unitaries", [] {
        RandomSource rng(901);
        double worst = -std::numeric_limits<double>::infinity();
        const std::vector<HamiltonianSpec> hams{HamiltonianSpec::qubits(2), HamiltonianSpec({{0.0, 1.0, 3.0}}, 1.0),
                                                HamiltonianSpec::qubits(3, 0.5)};
        for (std::size_t h = 0; h < hams.size(); ++h) {
            const std::size_t dim = hams[h].dim();
            CMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
            for (auto& z : g.reshaped()) z = rng.complex_normal();
            CMatrix m = g * g.adjoint();
            m /= m.trace();
            const DensityMatrix rho(0.5 * (m + m.adjoint()));
            const double sampled = oracle::min_energy_over_unitaries(rho, hams[h], 10000, 9000 + h);
            worst = std::max(worst, passive_energy(rho, hams[h]).value - sampled);
        }
        return Verdict{worst <= 1e-9, fmt("3 states x 10^4 unitaries, max(passive - sampled min) %.2e (tol 1e-9)", worst)};
    });

    gate.run("AC9b", "polygon inequality on Haar states", [] {
        RandomSource rng(902);
        int violations = 0;
        double worst = 1e300;
        for (int n = 3; n <= 5; ++n)
            for (int k = 0; k < 100000; ++k) {
                const double s = polygon_check(meg_vector(haar_random_state(n, rng))).min_slack();
                worst = std::min(worst, s);
                violations += s < -1e-9 ? 1 : 0;
            }
        return Verdict{violations == 0,
                       fmt("n=3..5 x 10^5 states, %d violations beyond 1e-9, min slack %.3e", violations, worst)};
    });

    gate.run("AC9c", "closed-form MEG equals the ergotropic-gap pipeline", [] {
        RandomSource rng(903);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const int n = 2 + k % 4;
            const StateVector psi = haar_random_state(n, rng);
            const DensityMatrix rho = density_from_pure(psi);
            for (int q = 1; q <= n; ++q) {
                const Bipartition cut = Bipartition::single(n, q);
                const double full = ergotropic_gap(rho, cut, qubit_locals(cut)).value;
                worst = std::max(worst, std::abs(full - meg_component(psi, q).value));
            }
        }
        return Verdict{worst <= 1e-8, fmt("1000 states, n=2..5, max |dev| %.2e E (tol 1e-8)", worst)};
    });

    gate.run("AC9d", "SLOCC orbits stay in their class polytope", [] {
        RandomSource rng(904);
        struct Seed {
            const char* name;
            StateVector psi;
            std::string_view poly;
        };
        const std::vector<Seed> seeds{
            {"product", oracle::random_product(3, rng), label::kProduct},
            {"bisep1", oracle::random_biseparable(1, rng), label::kBiseparable1},
            {"bisep2", oracle::random_biseparable(2, rng), label::kBiseparable2},
            {"bisep3", oracle::random_biseparable(3, rng), label::kBiseparable3},
            {"W", w_general(oracle::random_simplex(3, rng)), label::kW},
            {"GHZ", ghz_general(3, kPi / 4), label::kGhz},
        };
        int violations = 0, degenerate = 0;
        double worst = 0.0;
        for (const auto& s : seeds) {
            const Polytope& p = catalog_polytope(s.poly);
            for (int k = 0; k < 1000; ++k) {
                try {
                    const StateVector t = apply_slocc(s.psi, random_slocc(3, rng));
                    const double d = l1_distance(p, meg_vector(t).deltas());
                    worst = std::max(worst, d);
                    violations += d > 1e-6 ? 1 : 0;
                } catch (const DegenerateTransformError&) {
                    ++degenerate;
                    --k;
                }
            }
        }
        return Verdict{violations == 0, fmt("6 seed families x 10^3 samples, %d violations beyond 1e-6, max L1 distance "
                                            "%.2e, %d degenerate draws redrawn",
                                            violations, worst, degenerate)};
    });

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("acceptance: %d failing criteria, %.1fs total (target < 300s)\n", gate.failures(), total);
    return gate.failures() == 0 ? 0 : 1;
}
