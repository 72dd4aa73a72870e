#include "latzeta/errors.hpp"

namespace latzeta {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::pole_proximity: return "PoleProximity";
    case ErrorKind::no_convergence: return "NoConvergence";
    case ErrorKind::derivative_underflow: return "DerivativeUnderflow";
    case ErrorKind::boundary_zero: return "BoundaryZero";
    case ErrorKind::phase_step_failure: return "PhaseStepFailure";
    case ErrorKind::depth_exceeded: return "DepthExceeded";
    case ErrorKind::quadrature_failure: return "QuadratureFailure";
    case ErrorKind::branch_boundary: return "BranchBoundary";
    case ErrorKind::step_collapse: return "StepCollapse";
    case ErrorKind::unclassifiable: return "Unclassifiable";
    case ErrorKind::insufficient_samples: return "InsufficientSamples";
  }
  return "Error";
}

}  // namespace latzeta
