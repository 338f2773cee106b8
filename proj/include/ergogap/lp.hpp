#pragma once

#include <Eigen/Dense>

namespace ergogap::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;
};

// minimize c.x subject to A x = b, x >= 0.
// Dense two-phase tableau simplex with Bland's anti-cycling rule; meant for
// the handful of variables that polytope queries need.
Result solve_standard_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                           double eps = 1e-12);

}  // namespace ergogap::lp
