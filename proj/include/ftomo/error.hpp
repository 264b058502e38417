#pragma once

#include <stdexcept>
#include <string>

namespace ftomo {

// Base for failures that come from the numerics rather than from bad input.
// Precondition violations use std::invalid_argument / std::domain_error.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// f(n) is zero, negative under the square root, non-finite, or undefined.
class DeformationSingular : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Adaptive truncation hit its hard cap before the tail mass dropped below eps.
class TruncationOverflow : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// The two recurrence paths of a two-mode construction disagree.
class IncompatibleDeformation : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// |a> - |a> style superposition with (numerically) zero norm.
class DegenerateSuperposition : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// An infinite sum was cut before its tail became negligible.
class TailNotConverged : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Symplectic tomogram requested with mu = nu = 0.
class DegenerateDirection : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace ftomo
