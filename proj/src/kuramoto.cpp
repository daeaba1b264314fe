#include "mesostab/kuramoto.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "disjoint_sets.hpp"

namespace mesostab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void require_equilibrium(const KuramotoSystem& sys, const PhaseState& x, const char* op) {
  if (x.size() != sys.size()) throw std::invalid_argument(std::string(op) + ": phase count differs from N");
  const double r = residual_norm(sys, x);
  if (!(r < sys.equilibrium_tolerance())) {
    throw std::invalid_argument(std::string(op) + ": state is not an equilibrium (residual " +
                                std::to_string(r) + ")");
  }
}

}  // namespace

KuramotoSystem::KuramotoSystem(std::vector<double> omega, SymmetricMatrix coupling)
    : omega_(std::move(omega)), coupling_(std::move(coupling)) {
  const std::size_t n = omega_.size();
  if (n == 0) throw std::invalid_argument("KuramotoSystem: no oscillators");
  if (coupling_.size() != n)
    throw std::invalid_argument("KuramotoSystem: coupling matrix is not N x N");
  for (double w : omega_)
    if (!std::isfinite(w)) throw std::invalid_argument("KuramotoSystem: non-finite frequency");
  for (std::size_t i = 0; i < n; ++i) {
    if (coupling_(i, i) != 0.0)
      throw std::invalid_argument("KuramotoSystem: coupling diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double b = coupling_(i, j);
      if (!std::isfinite(b) || b < 0.0)
        throw std::invalid_argument("KuramotoSystem: couplings must be finite and non-negative");
    }
  }
  mean_frequency_ = std::accumulate(omega_.begin(), omega_.end(), 0.0) / static_cast<double>(n);
}

WeightedGraph KuramotoSystem::coupling_graph() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (coupling_(i, j) != 0.0) edges.push_back({i, j, coupling_(i, j)});
  return WeightedGraph(size(), std::move(edges));
}

double KuramotoSystem::equilibrium_tolerance() const {
  return 1e-10 * std::max(1.0, norm2(omega_));
}

PhaseState::PhaseState(std::vector<double> theta) : theta_(std::move(theta)) {
  for (double& t : theta_) {
    if (!std::isfinite(t)) throw std::invalid_argument("PhaseState: non-finite phase");
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
  }
}

double PhaseState::difference(std::size_t j, std::size_t i) const {
  return wrap_to_pi(theta_.at(j) - theta_.at(i));
}

double wrap_to_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  else if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

std::vector<double> rotating_frame_residual(const KuramotoSystem& sys, const PhaseState& x) {
  const std::size_t n = sys.size();
  if (x.size() != n) throw std::invalid_argument("rotating_frame_residual: phase count differs from N");
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = sys.omega()[i] - sys.mean_frequency();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double b = sys.coupling()(i, j);
      if (b != 0.0) s += b * std::sin(x[j] - x[i]);
    }
    f[i] = s;
  }
  return f;
}

double residual_norm(const KuramotoSystem& sys, const PhaseState& x) {
  return norm2(rotating_frame_residual(sys, x));
}

SymmetricMatrix jacobian(const KuramotoSystem& sys, const PhaseState& x) {
  const std::size_t n = sys.size();
  if (x.size() != n) throw std::invalid_argument("jacobian: phase count differs from N");
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double b = sys.coupling()(i, j);
      if (b == 0.0) continue;
      const double w = b * std::cos(x.difference(j, i));
      a.set(i, j, w);
      a.add(i, i, -w);
      a.add(j, j, -w);
    }
  return a;
}

std::optional<PhaseState> find_equilibrium(const KuramotoSystem& sys, const PhaseState& x0,
                                           const NewtonOptions& options,
                                           NewtonDiagnostics* diagnostics) {
  const std::size_t n = sys.size();
  if (x0.size() != n) throw std::invalid_argument("find_equilibrium: phase count differs from N");
  const double tol = options.tolerance.value_or(sys.equilibrium_tolerance());
  NewtonDiagnostics local;
  NewtonDiagnostics& diag = diagnostics ? *diagnostics : local;
  diag = {};

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = x0[i] - x0[n - 1];
  const auto residual_at = [&](const std::vector<double>& y) {
    return rotating_frame_residual(sys, PhaseState(y));
  };
  std::vector<double> f = residual_at(x);
  double fnorm = norm2(f);
  const std::size_t m = n - 1;  // free phases

  for (diag.iterations = 0; diag.iterations <= options.max_iterations; ++diag.iterations) {
    diag.residual_norm = fnorm;
    if (fnorm < tol) {
      diag.converged = true;
      return PhaseState(x);
    }
    if (diag.iterations == options.max_iterations || m == 0) break;

    const SymmetricMatrix a = jacobian(sys, PhaseState(x));
    DenseMatrix reduced(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) reduced(i, j) = a(i, j);
    std::vector<double> rhs(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(m));
    for (double& r : rhs) r = -r;

    std::vector<double> step;
    if (auto sol = solve(reduced, rhs)) {
      step = std::move(*sol);
    } else {
      ++diag.singular_steps;
      step.assign(m, 0.0);  // -J^T f
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) step[j] += reduced(i, j) * rhs[i];
    }

    bool improved = false;
    double t = 1.0;
    for (std::size_t h = 0; h <= options.max_halvings; ++h, t *= 0.5) {
      std::vector<double> trial = x;
      for (std::size_t i = 0; i < m; ++i) trial[i] += t * step[i];
      std::vector<double> ft = residual_at(trial);
      const double tn = norm2(ft);
      if (tn < fnorm) {
        x = std::move(trial);
        f = std::move(ft);
        fnorm = tn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  diag.residual_norm = fnorm;
  return std::nullopt;
}

StabilityReport classify_stability(const KuramotoSystem& sys, const PhaseState& xstar,
                                   const SylvesterOptions& options) {
  require_equilibrium(sys, xstar, "classify_stability");
  const SymmetricMatrix a = jacobian(sys, xstar);
  const SymmetricMatrix l = -a;
  const std::size_t n = sys.size();

  StabilityReport report;
  report.dimension = n;
  report.zero_row_sums = l.has_zero_row_sums();
  certify_zero_row_sum(report, l, options);
  attach_structure_diagnostics(report, coates_graph(a, kComputedZeroTolerance));
  return report;
}

bool spanning_phase_condition(const KuramotoSystem& sys, const PhaseState& xstar) {
  require_equilibrium(sys, xstar, "spanning_phase_condition");
  const WeightedGraph g = sys.coupling_graph();
  detail::DisjointSets all(sys.size());
  detail::DisjointSets locked(sys.size());
  std::size_t needed = 0;
  std::size_t have = 0;
  for (const Edge& e : g.edges()) {
    if (all.unite(e.u, e.v)) ++needed;
    if (std::abs(xstar.difference(e.v, e.u)) < std::numbers::pi / 2 && locked.unite(e.u, e.v))
      ++have;
  }
  return have == needed;
}

}  // namespace mesostab
