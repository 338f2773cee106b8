#include "ergogap/lp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ergogap/random.hpp"

using ergogap::lp::Status;
using ergogap::lp::solve_standard_form;

TEST(Simplex, TextbookProblem) {
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 (slacks s1..s3).
    Eigen::MatrixXd A(3, 5);
    A << 1, 0, 1, 0, 0,
         0, 2, 0, 1, 0,
         3, 2, 0, 0, 1;
    Eigen::VectorXd b(3);
    b << 4, 12, 18;
    Eigen::VectorXd c(5);
    c << -3, -5, 0, 0, 0;
    const auto r = solve_standard_form(A, b, c);
    ASSERT_EQ(r.status, Status::optimal);
    EXPECT_NEAR(r.objective, -36.0, 1e-10);
    EXPECT_NEAR(r.x(0), 2.0, 1e-10);
    EXPECT_NEAR(r.x(1), 6.0, 1e-10);
}

TEST(Simplex, Infeasible) {
    // x + y = 1 and x + y = 2.
    Eigen::MatrixXd A(2, 2);
    A << 1, 1, 1, 1;
    Eigen::VectorXd b(2);
    b << 1, 2;
    const auto r = solve_standard_form(A, b, Eigen::VectorXd::Zero(2));
    EXPECT_EQ(r.status, Status::infeasible);
}

TEST(Simplex, Unbounded) {
    // min -x s.t. x - y = 1.
    Eigen::MatrixXd A(1, 2);
    A << 1, -1;
    Eigen::VectorXd b(1);
    b << 1;
    Eigen::VectorXd c(2);
    c << -1, 0;
    EXPECT_EQ(solve_standard_form(A, b, c).status, Status::unbounded);
}

TEST(Simplex, NegativeRightHandSideAndRedundantRows) {
    // -x - y = -2 twice (redundant), min x + 2y -> x = 2, y = 0.
    Eigen::MatrixXd A(2, 2);
    A << -1, -1, -1, -1;
    Eigen::VectorXd b(2);
    b << -2, -2;
    Eigen::VectorXd c(2);
    c << 1, 2;
    const auto r = solve_standard_form(A, b, c);
    ASSERT_EQ(r.status, Status::optimal);
    EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

TEST(Simplex, DegenerateVerticesTerminate) {
    // Klee-Minty-like degenerate instance: many ties at zero.
    const int m = 6;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, 2 * m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) A(i, j) = (j == i) ? 1.0 : 2.0;
        A(i, m + i) = 1.0;
        b(i) = (i == m - 1) ? 1.0 : 0.0;
        c(i) = -std::pow(2.0, m - 1 - i);
    }
    const auto r = solve_standard_form(A, b, c);
    ASSERT_EQ(r.status, Status::optimal);
    EXPECT_NEAR(r.objective, -1.0, 1e-12);
}

TEST(Simplex, RandomFeasibleProblemsMatchVertexEnumeration) {
    // min c.x over {x >= 0, x1 + x2 + x3 = 1} is min_i c_i.
    ergogap::RandomSource rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Ones(1, 3);
        Eigen::VectorXd b = Eigen::VectorXd::Ones(1);
        Eigen::VectorXd c(3);
        for (int i = 0; i < 3; ++i) c(i) = rng.normal();
        const auto r = solve_standard_form(A, b, c);
        ASSERT_EQ(r.status, Status::optimal);
        EXPECT_NEAR(r.objective, c.minCoeff(), 1e-12);
        EXPECT_NEAR(r.x.sum(), 1.0, 1e-12);
        EXPECT_GE(r.x.minCoeff(), 0.0);
    }
}
