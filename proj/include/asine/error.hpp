#pragma once

#include <stdexcept>
#include <string>

namespace asine {

/// Precondition or parameter violation. The CLI maps these to exit code 2.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine exhausted its budget before meeting its tolerance.
/// The CLI maps these to exit code 3.
class NonConvergence : public std::runtime_error {
public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Diagonal c_1 of the triangular system vanishes (alpha = 0).
class SingularDiagonal : public DomainError {
public:
  explicit SingularDiagonal(const std::string& what) : DomainError(what) {}
};

/// No samples of T_alpha f beyond R from which F f(0) could be estimated.
class NoTailSamples : public DomainError {
public:
  explicit NoTailSamples(const std::string& what) : DomainError(what) {}
};

/// Spherical inversion is impossible for alpha in {0, 2, 4, ...}.
class EvenIntegerAlpha : public DomainError {
public:
  explicit EvenIntegerAlpha(const std::string& what) : DomainError(what) {}
};

/// A cosine coefficient needed by the spherical inversion is too small to divide by.
class CoefficientUnderflow : public DomainError {
public:
  explicit CoefficientUnderflow(const std::string& what) : DomainError(what) {}
};

}  // namespace asine
