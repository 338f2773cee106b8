#pragma once

// MEG polytopes: vertex/halfspace geometry, the three-qubit SLOCC catalog,
// general-n facet tests and noise-hardened class exclusion.
//
// Polytope coordinates are in units of E. Functions taking a MegVector
// rescale by its energy unit and report distances and margins in absolute
// energy.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ergogap/meg.hpp"
#include "ergogap/qstate.hpp"
#include "ergogap/thermo.hpp"

namespace ergogap {

using Point = std::vector<double>;

// normal . x <= offset
struct Halfspace {
    Point normal;
    double offset = 0.0;
};

class Polytope {
public:
    // Throws ShapeError on inconsistent dimensions or an empty vertex list,
    // and DomainError if a vertex violates a halfspace by more than 1e-12.
    Polytope(std::string label, std::vector<Point> vertices, std::vector<Halfspace> halfspaces = {});

    const std::string& label() const { return label_; }
    std::size_t dim() const { return vertices_.front().size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    bool has_halfspaces() const { return !halfspaces_.empty(); }

private:
    std::string label_;
    std::vector<Point> vertices_;
    std::vector<Halfspace> halfspaces_;
};

inline constexpr double kContainmentTolerance = 1e-7;

struct Projection {
    double distance = 0.0;  // L1
    Point nearest;
    std::vector<double> weights;  // convex weights over the vertices
};

// Nearest point of conv(vertices) in L1, via the LP
// min sum|x - V c| s.t. c >= 0, sum c = 1. Throws ShapeError on a dimension
// mismatch.
Projection l1_projection(const Polytope& p, std::span<const double> x);
double l1_distance(const Polytope& p, std::span<const double> x);

// Vertex-form membership: l1_distance(p, x) <= tol.
bool contains(const Polytope& p, std::span<const double> x, double tol = kContainmentTolerance);

// Halfspace-form cross-check: max_h (normal.x - offset); requires halfspaces.
double max_halfspace_violation(const Polytope& p, std::span<const double> x);
bool satisfies_halfspaces(const Polytope& p, std::span<const double> x, double tol = kContainmentTolerance);

namespace catalog_label {
inline constexpr std::string_view kProduct = "product";
inline constexpr std::string_view kBiseparable1 = "biseparable_1|23";
inline constexpr std::string_view kBiseparable2 = "biseparable_2|13";
inline constexpr std::string_view kBiseparable3 = "biseparable_3|12";
inline constexpr std::string_view kW = "W";
inline constexpr std::string_view kGhz = "GHZ";
}  // namespace catalog_label

// Product point, three biseparable segments, W tetrahedron and the full
// five-vertex GHZ polytope, in that order, with committed halfspace forms.
const std::vector<Polytope>& three_qubit_catalog();
const Polytope& catalog_polytope(std::string_view label);

struct ClassVerdict {
    std::string label;
    double distance = 0.0;  // L1, absolute energy
};

// Containment is necessary for class membership, not sufficient: candidates
// are the classes that could not be excluded.
struct ClassificationResult {
    std::vector<ClassVerdict> candidates;
    std::vector<ClassVerdict> excluded;
    double margin = 0.0;  // absolute energy

    bool is_candidate(std::string_view label) const;
    bool is_excluded(std::string_view label) const;
    // The remaining class when exactly one candidate is left.
    std::optional<std::string> unique() const;
};

// Throws DomainError unless lambda.n() == 3.
ClassificationResult classify_three_qubit(const MegVector& lambda, double tol = kContainmentTolerance);

enum class FacetSide { below, on, above };
std::string_view to_string(FacetSide side);

// Compares total MEG to the W facet 2E; `above` excludes W-type
// entanglement. Throws DomainError for n < 3.
FacetSide wn_facet_test(const MegVector& lambda, double tol = kContainmentTolerance);

// Upper bound on total MEG over (generalized) Dicke states with l
// excitations: 2lE for l <= n/2, else 2(n-l)E. Throws IndexError unless
// 1 <= l <= n-1.
Energy dicke_facet_value(int n, int l, double energy_unit = 1.0);

struct NoiseMargin {
    double eigenvalue_deviation = 0.0;  // delta(eps), summed over qubits
    double meg_margin = 0.0;            // 2 delta(eps) E
};

// delta(eps) = n eps / 2, except the tabulated n = 4, eps = 0.1 bound 0.21.
// Throws DomainError unless 0 <= eps < 1.
NoiseMargin noise_margin(int n, double epsilon, double energy_unit = 1.0);

// MEG-like vector of a mixed state: 2 lambda_min of each single-qubit
// marginal, times E.
MegVector marginal_meg_vector(const DensityMatrix& rho, int n_qubits, double energy_unit = 1.0);

// Excludes a class only when the L1 distance exceeds noise_margin + tol*E.
// n == 3 uses the catalog; other n >= 3 use the W-type facet (label "W").
ClassificationResult classify_with_margin(const MegVector& lambda, double epsilon,
                                          double tol = kContainmentTolerance);

// Purity measured internally (eps = 1 - Tr rho^2). Throws InconclusiveError
// for eps >= 0.5 and ShapeError if rho.dim() != 2^n_qubits.
ClassificationResult classify_noisy(const DensityMatrix& rho, int n_qubits, double tol = kContainmentTolerance,
                                    double energy_unit = 1.0);

}  // namespace ergogap
