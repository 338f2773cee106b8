#include "ergogap/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ergogap/errors.hpp"
#include "ergogap/lp.hpp"

namespace ergogap {

namespace {

constexpr double kVertexTolerance = 1e-12;
constexpr int kMinFacetQubits = 3;

double dot(const Point& a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void require_dim(const Polytope& p, std::span<const double> x, const char* what) {
    if (x.size() != p.dim()) {
        throw ShapeError(std::string(what) + ": point has dimension " + std::to_string(x.size()) +
                         ", polytope has " + std::to_string(p.dim()));
    }
}

Point scaled(const MegVector& lambda) {
    Point x(lambda.deltas());
    for (double& v : x) v /= lambda.energy_unit();
    return x;
}

// Facets enumerated offline from the vertex lists (every affine plane through
// vertices with all vertices on one side), plus coordinate bounds.
std::vector<Halfspace> full_polytope_halfspaces() {
    return {
        {{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0},
        {{1, 0, 0}, 1},  {{0, 1, 0}, 1},  {{0, 0, 1}, 1},
        {{1, -1, -1}, 0}, {{-1, 1, -1}, 0}, {{-1, -1, 1}, 0},
    };
}

std::vector<Halfspace> w_polytope_halfspaces() {
    auto h = full_polytope_halfspaces();
    h.push_back({{1, 1, 1}, 2});
    return h;
}

// Segment conv{0, e_j + e_k} for the separated qubit i.
std::vector<Halfspace> biseparable_halfspaces(int separated) {
    const int i = separated - 1;
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    auto unit = [](int axis, double v) {
        Point n(3, 0.0);
        n[static_cast<std::size_t>(axis)] = v;
        return n;
    };
    Point jk(3, 0.0), kj(3, 0.0);
    jk[static_cast<std::size_t>(j)] = 1.0;
    jk[static_cast<std::size_t>(k)] = -1.0;
    kj[static_cast<std::size_t>(j)] = -1.0;
    kj[static_cast<std::size_t>(k)] = 1.0;
    return {{unit(i, 1.0), 0}, {unit(i, -1.0), 0}, {jk, 0}, {kj, 0}, {unit(j, -1.0), 0}, {unit(j, 1.0), 1}};
}

std::vector<Halfspace> product_halfspaces() {
    return {{{1, 0, 0}, 0}, {{-1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, 1}, 0}, {{0, 0, -1}, 0}};
}

std::vector<Polytope> build_catalog() {
    const Point origin{0, 0, 0};
    const Point b1{0, 1, 1}, b2{1, 0, 1}, b3{1, 1, 0}, ghz{1, 1, 1};
    std::vector<Polytope> out;
    out.emplace_back(std::string(catalog_label::kProduct), std::vector<Point>{origin}, product_halfspaces());
    out.emplace_back(std::string(catalog_label::kBiseparable1), std::vector<Point>{origin, b1},
                     biseparable_halfspaces(1));
    out.emplace_back(std::string(catalog_label::kBiseparable2), std::vector<Point>{origin, b2},
                     biseparable_halfspaces(2));
    out.emplace_back(std::string(catalog_label::kBiseparable3), std::vector<Point>{origin, b3},
                     biseparable_halfspaces(3));
    out.emplace_back(std::string(catalog_label::kW), std::vector<Point>{origin, b1, b2, b3}, w_polytope_halfspaces());
    out.emplace_back(std::string(catalog_label::kGhz), std::vector<Point>{origin, b1, b2, b3, ghz},
                     full_polytope_halfspaces());
    return out;
}

bool has_label(const std::vector<ClassVerdict>& v, std::string_view label) {
    return std::any_of(v.begin(), v.end(), [&](const ClassVerdict& c) { return c.label == label; });
}

}  // namespace

Polytope::Polytope(std::string label, std::vector<Point> vertices, std::vector<Halfspace> halfspaces)
    : label_(std::move(label)), vertices_(std::move(vertices)), halfspaces_(std::move(halfspaces)) {
    if (vertices_.empty() || vertices_.front().empty()) throw ShapeError("Polytope: no vertices");
    const std::size_t d = vertices_.front().size();
    for (const auto& v : vertices_) {
        if (v.size() != d) throw ShapeError("Polytope: vertices of mixed dimension");
    }
    for (const auto& h : halfspaces_) {
        if (h.normal.size() != d) throw ShapeError("Polytope: halfspace of wrong dimension");
        for (const auto& v : vertices_) {
            if (dot(h.normal, v) - h.offset > kVertexTolerance) {
                throw DomainError("Polytope " + label_ + ": vertex violates a halfspace");
            }
        }
    }
}

Projection l1_projection(const Polytope& p, std::span<const double> x) {
    require_dim(p, x, "l1_projection");
    const auto d = static_cast<Eigen::Index>(p.dim());
    const auto k = static_cast<Eigen::Index>(p.vertices().size());
    // Variables: [c (k) | u+ (d) | u- (d)].
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d + 1, k + 2 * d);
    Eigen::VectorXd b(d + 1);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k + 2 * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index v = 0; v < k; ++v) A(i, v) = p.vertices()[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        A(i, k + i) = 1.0;
        A(i, k + d + i) = -1.0;
        b(i) = x[static_cast<std::size_t>(i)];
    }
    A.row(d).head(k).setOnes();
    b(d) = 1.0;
    c.tail(2 * d).setOnes();

    const lp::Result r = lp::solve_standard_form(A, b, c);
    if (r.status != lp::Status::optimal) throw NumericalError("l1_projection: LP did not reach an optimum");

    Projection out;
    out.weights.assign(r.x.data(), r.x.data() + k);
    out.nearest.assign(static_cast<std::size_t>(d), 0.0);
    for (Eigen::Index v = 0; v < k; ++v)
        for (Eigen::Index i = 0; i < d; ++i)
            out.nearest[static_cast<std::size_t>(i)] +=
                r.x(v) * p.vertices()[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
    out.distance = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        out.distance += std::abs(x[static_cast<std::size_t>(i)] - out.nearest[static_cast<std::size_t>(i)]);
    return out;
}

double l1_distance(const Polytope& p, std::span<const double> x) { return l1_projection(p, x).distance; }

bool contains(const Polytope& p, std::span<const double> x, double tol) { return l1_distance(p, x) <= tol; }

double max_halfspace_violation(const Polytope& p, std::span<const double> x) {
    require_dim(p, x, "max_halfspace_violation");
    if (!p.has_halfspaces()) throw DomainError("Polytope " + p.label() + " has no halfspace form");
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& h : p.halfspaces()) worst = std::max(worst, dot(h.normal, x) - h.offset);
    return worst;
}

bool satisfies_halfspaces(const Polytope& p, std::span<const double> x, double tol) {
    return max_halfspace_violation(p, x) <= tol;
}

const std::vector<Polytope>& three_qubit_catalog() {
    static const std::vector<Polytope> catalog = build_catalog();
    return catalog;
}

const Polytope& catalog_polytope(std::string_view label) {
    for (const auto& p : three_qubit_catalog()) {
        if (p.label() == label) return p;
    }
    throw IndexError("catalog_polytope: unknown class '" + std::string(label) + "'");
}

bool ClassificationResult::is_candidate(std::string_view label) const { return has_label(candidates, label); }
bool ClassificationResult::is_excluded(std::string_view label) const { return has_label(excluded, label); }

std::optional<std::string> ClassificationResult::unique() const {
    if (candidates.size() == 1) return candidates.front().label;
    return std::nullopt;
}

ClassificationResult classify_three_qubit(const MegVector& lambda, double tol) {
    if (lambda.n() != 3) throw DomainError("classify_three_qubit: MEG vector must have 3 components");
    return classify_with_margin(lambda, 0.0, tol);
}

std::string_view to_string(FacetSide side) {
    switch (side) {
        case FacetSide::below: return "below";
        case FacetSide::on: return "on";
        case FacetSide::above: return "above";
    }
    return "unknown";
}

FacetSide wn_facet_test(const MegVector& lambda, double tol) {
    if (lambda.n() < kMinFacetQubits) throw DomainError("wn_facet_test: requires at least 3 qubits");
    const double excess = total_meg(lambda).value / lambda.energy_unit() - 2.0;
    if (excess > tol) return FacetSide::above;
    if (excess < -tol) return FacetSide::below;
    return FacetSide::on;
}

Energy dicke_facet_value(int n, int l, double energy_unit) {
    if (n < 2 || l < 1 || l > n - 1) {
        throw IndexError("dicke_facet_value: need 1 <= l <= n-1 (n=" + std::to_string(n) + ", l=" +
                         std::to_string(l) + ")");
    }
    const int weight = 2 * l <= n ? l : n - l;
    return {2.0 * weight * energy_unit};
}

NoiseMargin noise_margin(int n, double epsilon, double energy_unit) {
    if (n < 1) throw DomainError("noise_margin: n must be positive");
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw DomainError("noise_margin: epsilon must lie in [0, 1)");
    // Tabulated four-qubit bound at purity 0.9; the n*eps/2 rule gives 0.20.
    const bool tabulated = n == 4 && std::abs(epsilon - 0.1) <= 1e-9;
    const double delta = tabulated ? 0.21 : 0.5 * n * epsilon;
    return {delta, 2.0 * delta * energy_unit};
}

MegVector marginal_meg_vector(const DensityMatrix& rho, int n_qubits, double energy_unit) {
    if (n_qubits < 1 || n_qubits > 30 || rho.dim() != (std::size_t{1} << n_qubits)) {
        throw ShapeError("marginal_meg_vector: density matrix dimension is not 2^n");
    }
    std::vector<double> deltas;
    for (int q = 1; q <= n_qubits; ++q) {
        const double lambda_min = std::clamp(min_eigenvalue_2x2(single_qubit_marginal(rho, n_qubits, q)), 0.0, 0.5);
        deltas.push_back(2.0 * lambda_min * energy_unit);
    }
    return MegVector(std::move(deltas), energy_unit);
}

ClassificationResult classify_with_margin(const MegVector& lambda, double epsilon, double tol) {
    const int n = lambda.n();
    if (n < kMinFacetQubits) throw DomainError("classification requires at least 3 qubits");
    const double unit = lambda.energy_unit();
    ClassificationResult result;
    result.margin = noise_margin(n, epsilon, unit).meg_margin;
    const double threshold = result.margin + tol * unit;

    auto sort_into = [&](std::string label, double distance) {
        ClassVerdict verdict{std::move(label), distance};
        (distance > threshold ? result.excluded : result.candidates).push_back(std::move(verdict));
    };

    if (n == 3) {
        const Point x = scaled(lambda);
        for (const auto& p : three_qubit_catalog()) sort_into(p.label(), l1_distance(p, x) * unit);
    } else {
        // L1 distance to {sum x <= 2}: the all-ones normal has unit L-inf norm.
        const double excess = total_meg(lambda).value - 2.0 * unit;
        sort_into(std::string(catalog_label::kW), std::max(0.0, excess));
    }
    return result;
}

ClassificationResult classify_noisy(const DensityMatrix& rho, int n_qubits, double tol, double energy_unit) {
    const double epsilon = std::max(0.0, 1.0 - purity(rho));
    if (epsilon >= 0.5) {
        throw InconclusiveError("classify_noisy: purity " + std::to_string(1.0 - epsilon) +
                                " too low for a noise-robust verdict");
    }
    const MegVector lambda = marginal_meg_vector(rho, n_qubits, energy_unit);
    return classify_with_margin(lambda, epsilon, tol);
}

}  // namespace ergogap
