#pragma once

#include <stdexcept>
#include <string>

namespace latzeta {

enum class ErrorKind {
  domain,
  pole_proximity,
  no_convergence,
  derivative_underflow,
  boundary_zero,
  phase_step_failure,
  depth_exceeded,
  quadrature_failure,
  branch_boundary,
  step_collapse,
  unclassifiable,
  insufficient_samples,
};

[[nodiscard]] const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& what) : Error(K, what) {}
};

using DomainError = KindedError<ErrorKind::domain>;
using PoleProximity = KindedError<ErrorKind::pole_proximity>;
using NoConvergence = KindedError<ErrorKind::no_convergence>;
using DerivativeUnderflow = KindedError<ErrorKind::derivative_underflow>;
using BoundaryZero = KindedError<ErrorKind::boundary_zero>;
using PhaseStepFailure = KindedError<ErrorKind::phase_step_failure>;
using DepthExceeded = KindedError<ErrorKind::depth_exceeded>;
using QuadratureFailure = KindedError<ErrorKind::quadrature_failure>;
using BranchBoundary = KindedError<ErrorKind::branch_boundary>;
using StepCollapse = KindedError<ErrorKind::step_collapse>;
using Unclassifiable = KindedError<ErrorKind::unclassifiable>;
using InsufficientSamples = KindedError<ErrorKind::insufficient_samples>;

}  // namespace latzeta
