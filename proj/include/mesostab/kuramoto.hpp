#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mesostab/graph.hpp"
#include "mesostab/matrix.hpp"
#include "mesostab/report.hpp"
#include "mesostab/sylvester.hpp"

namespace mesostab {

/// Network of N phase oscillators with intrinsic frequencies omega_i and a
/// symmetric non-negative coupling matrix B with zero diagonal.
class KuramotoSystem {
 public:
  /// Throws std::invalid_argument on size mismatch, a non-finite value, a
  /// negative coupling or a nonzero diagonal coupling.
  KuramotoSystem(std::vector<double> omega, SymmetricMatrix coupling);

  std::size_t size() const noexcept { return omega_.size(); }
  const std::vector<double>& omega() const noexcept { return omega_; }
  const SymmetricMatrix& coupling() const noexcept { return coupling_; }
  double mean_frequency() const noexcept { return mean_frequency_; }

  /// Edges {i,j} with B_ij != 0, weighted by B_ij.
  WeightedGraph coupling_graph() const;

  /// 1e-10 * max(1, |omega|_2)
  double equilibrium_tolerance() const;

 private:
  std::vector<double> omega_;
  SymmetricMatrix coupling_;
  double mean_frequency_ = 0.0;
};

/// Point on the N-torus; every phase is reduced into [0, 2*pi).
class PhaseState {
 public:
  explicit PhaseState(std::vector<double> theta);

  std::size_t size() const noexcept { return theta_.size(); }
  double operator[](std::size_t i) const { return theta_[i]; }
  const std::vector<double>& phases() const noexcept { return theta_; }

  /// x_j - x_i reduced into (-pi, pi].
  double difference(std::size_t j, std::size_t i) const;

 private:
  std::vector<double> theta_;
};

/// Reduces an angle into (-pi, pi].
double wrap_to_pi(double angle);

/// dx_i/dt = omega_i - Omega + sum_j B_ij sin(x_j - x_i) in the frame rotating
/// with the mean frequency Omega. Zero exactly at equilibria.
std::vector<double> rotating_frame_residual(const KuramotoSystem& sys, const PhaseState& x);

double residual_norm(const KuramotoSystem& sys, const PhaseState& x);

struct NewtonOptions {
  std::size_t max_iterations = 200;
  std::size_t max_halvings = 50;
  /// Defaults to sys.equilibrium_tolerance().
  std::optional<double> tolerance;
};

struct NewtonDiagnostics {
  std::size_t iterations = 0;
  std::size_t singular_steps = 0;  // iterations that fell back to a gradient step
  double residual_norm = 0.0;
  bool converged = false;
};

/// Damped Newton iteration on the residual with the last phase pinned to 0,
/// which removes the rotational family of equivalent equilibria. A singular
/// reduced Jacobian is counted in the diagnostics and answered with a
/// steepest-descent step. Absent when no step lowers the residual or the
/// iteration cap is reached.
std::optional<PhaseState> find_equilibrium(const KuramotoSystem& sys, const PhaseState& x0,
                                           const NewtonOptions& options = {},
                                           NewtonDiagnostics* diagnostics = nullptr);

/// Linearisation at x: A_ij = B_ij cos(x_j - x_i) off the diagonal and
/// A_ii = -sum_{j != i} A_ij. Symmetric with zero row sums.
SymmetricMatrix jacobian(const KuramotoSystem& sys, const PhaseState& x);

/// Necessary linear-stability test at an equilibrium: -A must be positive
/// semi-definite with rank N-1. Passing does not establish stability.
/// Throws std::invalid_argument when x is not an equilibrium.
StabilityReport classify_stability(const KuramotoSystem& sys, const PhaseState& xstar,
                                   const SylvesterOptions& options = {});

/// Every component of the coupling graph has a spanning tree of couplings
/// whose phase difference satisfies |x_j - x_i| < pi/2.
/// Throws std::invalid_argument when x is not an equilibrium.
bool spanning_phase_condition(const KuramotoSystem& sys, const PhaseState& xstar);

}  // namespace mesostab
