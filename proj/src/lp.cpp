#include "ergogap/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ergogap/errors.hpp"

namespace ergogap::lp {

namespace {

class Tableau {
public:
    Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double eps)
        : m_(A.rows()), n_(A.cols()), eps_(eps), t_(Eigen::MatrixXd::Zero(A.rows() + 1, A.cols() + A.rows() + 1)),
          basis_(static_cast<std::size_t>(A.rows())) {
        for (Eigen::Index r = 0; r < m_; ++r) {
            const double sign = b(r) < 0.0 ? -1.0 : 1.0;
            t_.row(r).head(n_) = sign * A.row(r);
            t_(r, n_ + r) = 1.0;
            t_(r, rhs()) = sign * b(r);
            basis_[static_cast<std::size_t>(r)] = n_ + r;
        }
    }

    Eigen::Index rhs() const { return n_ + m_; }
    bool is_artificial(Eigen::Index j) const { return j >= n_; }

    // Objective row holds reduced costs for `cost` under the current basis.
    void set_objective(const Eigen::VectorXd& cost) {
        t_.row(m_).setZero();
        t_.row(m_).head(cost.size()) = cost.transpose();
        for (Eigen::Index r = 0; r < m_; ++r) {
            const double cb = basis_cost(cost, basis_[static_cast<std::size_t>(r)]);
            if (cb != 0.0) t_.row(m_) -= cb * t_.row(r);
        }
    }

    // Returns false when unbounded.
    bool optimize(bool allow_artificial) {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < rhs(); ++j) {
                if (!allow_artificial && is_artificial(j)) continue;
                if (t_(m_, j) < -eps_) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index r = 0; r < m_; ++r) {
                const double a = t_(r, enter);
                if (a <= eps_) continue;
                const double ratio = t_(r, rhs()) / a;
                if (ratio < best - eps_ ||
                    (std::abs(ratio - best) <= eps_ && basis_[static_cast<std::size_t>(r)] <
                                                           basis_[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (Eigen::Index r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[static_cast<std::size_t>(r)])) continue;
            for (Eigen::Index j = 0; j < n_; ++j) {
                if (std::abs(t_(r, j)) > 1e-9) {
                    pivot(r, j);
                    break;
                }
            }
            // A row with no usable column is redundant; its artificial stays at zero.
        }
    }

    double objective_value() const { return -t_(m_, rhs()); }

    Eigen::VectorXd solution() const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (Eigen::Index r = 0; r < m_; ++r) {
            const Eigen::Index j = basis_[static_cast<std::size_t>(r)];
            if (j < n_) x(j) = std::max(0.0, t_(r, rhs()));
        }
        return x;
    }

private:
    double basis_cost(const Eigen::VectorXd& cost, Eigen::Index j) const { return j < cost.size() ? cost(j) : 0.0; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index r = 0; r <= m_; ++r) {
            if (r == row) continue;
            const double f = t_(r, col);
            if (f != 0.0) t_.row(r) -= f * t_.row(row);
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    Eigen::Index m_, n_;
    double eps_;
    Eigen::MatrixXd t_;
    std::vector<Eigen::Index> basis_;
};

}  // namespace

Result solve_standard_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, double eps) {
    if (A.rows() != b.size() || A.cols() != c.size()) throw ShapeError("lp: inconsistent problem dimensions");
    Tableau tableau(A, b, eps);

    Eigen::VectorXd phase_one = Eigen::VectorXd::Zero(A.cols() + A.rows());
    phase_one.tail(A.rows()).setOnes();
    tableau.set_objective(phase_one);
    tableau.optimize(true);

    Result result;
    const double scale = 1.0 + b.cwiseAbs().sum();
    if (tableau.objective_value() > 1e-9 * scale) {
        result.status = Status::infeasible;
        return result;
    }
    tableau.drive_out_artificials();
    tableau.set_objective(c);
    if (!tableau.optimize(false)) {
        result.status = Status::unbounded;
        return result;
    }
    result.status = Status::optimal;
    result.x = tableau.solution();
    result.objective = c.dot(result.x);
    return result;
}

}  // namespace ergogap::lp
