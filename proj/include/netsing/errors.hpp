#ifndef NETSING_ERRORS_HPP
#define NETSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netsing {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input file or document violates the network schema.
struct SchemaError : Error {
  SchemaError(std::string location_, const std::string& message)
      : Error(location_ + ": " + message), location(std::move(location_)) {}
  std::string location;
};

/// The underlying undirected graph is not connected.
struct DisconnectedGraph : Error {
  using Error::Error;
};

/// Two edge entries describe the same node pair.
struct DuplicateEdgeModel : Error {
  using Error::Error;
};

/// The internal (central) block of the Laplacian is numerically singular.
struct SingularInternalBlock : Error {
  using Error::Error;
};

/// Effective resistance requested on a Laplacian whose kernel is not
/// one-dimensional.
struct DegenerateKernel : Error {
  using Error::Error;
};

/// Newton iteration failed to reach the residual tolerance.
struct NoConvergence : Error {
  using Error::Error;
};

/// Jacobian of a plain equilibrium solve is rank-deficient.
struct SingularJacobian : Error {
  using Error::Error;
};

/// More than one near-zero eigenvalue beyond the shift direction.
struct AmbiguousKernel : Error {
  using Error::Error;
};

/// Richardson levels of a finite-difference stencil disagree too much.
struct IllConditionedStencil : Error {
  using Error::Error;
};

/// Closed-form coefficient formulas require a single negative edge with
/// linear positive edges.
struct HypothesesViolated : Error {
  using Error::Error;
};

/// A continuation seed failed to converge.
struct SeedDivergence : Error {
  using Error::Error;
};

/// Continuation step control hit the minimum step without progress.
struct StepUnderflow : Error {
  using Error::Error;
};

/// Bisection refinement of a special point did not converge.
struct RefinementFailure : Error {
  using Error::Error;
};

/// Coefficient certificate fails the singularity consistency check.
struct InconsistentCertificate : Error {
  using Error::Error;
};

}  // namespace netsing

#endif
