#pragma once

#include <stdexcept>
#include <string>

namespace ergogap {

// Input violates the normalization invariant of a state or coefficient set.
class NormalizationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Qubit index, partition, or excitation count outside its admissible range.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Dimension mismatch or a matrix that is not of the required form
// (non-square, non-Hermitian, wrong size).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numerical breakdown: eigenvalues too negative, degenerate transforms,
// LP failure.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// SLOCC transform annihilated the state (result norm below threshold).
class DegenerateTransformError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Noisy classification refused: the state is too mixed for the bound.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ergogap
