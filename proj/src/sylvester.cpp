#include "mesostab/sylvester.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "mesostab/error.hpp"

namespace mesostab {

std::string_view to_string(Definiteness kind) {
  switch (kind) {
    case Definiteness::positive_definite: return "positive-definite";
    case Definiteness::positive_semidefinite: return "positive-semi-definite";
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::negative_semidefinite: return "negative-semi-definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::not_certified: return "not-certified";
  }
  return "unknown";
}

Spectrum symmetric_spectrum(const SymmetricMatrix& l) {
  const std::size_t n = l.size();
  Spectrum out;
  if (n == 0) return out;
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = l(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric_spectrum: no convergence");
  out.tolerance = 1e-8 * l.max_abs() * static_cast<double>(n);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    out.eigenvalues.push_back(lambda);
    if (std::abs(lambda) > out.tolerance) ++out.rank;
  }
  const Eigen::VectorXd v = solver.eigenvectors().col(0);
  out.lowest_eigenvector.assign(v.data(), v.data() + v.size());
  return out;
}

namespace {

// Depth-first over subsets in lexicographic order of their sorted elements:
// {0}, {0,1}, {0,1,2}, ..., {0,2}, ..., {1}, ...  `visit` returns false to stop.
bool for_each_subset_lex(std::size_t n, std::vector<std::size_t>& current, std::size_t from,
                         const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  for (std::size_t v = from; v < n; ++v) {
    current.push_back(v);
    if (!visit(current)) return false;
    if (!for_each_subset_lex(n, current, v + 1, visit)) return false;
    current.pop_back();
  }
  return true;
}

struct MinorSign {
  double value;
  double tolerance;
};

MinorSign signed_minor(const SymmetricMatrix& l, const VertexSet& s, double tol) {
  const DenseMatrix sub = l.principal_submatrix(s);
  return {determinant(sub), tol * hadamard_bound(sub)};
}

bool leading_minors_positive(const SymmetricMatrix& l, std::size_t upto, double tol, double sign,
                             std::optional<MinorWitness>* first_failure = nullptr) {
  for (std::size_t k = 1; k <= upto; ++k) {
    const VertexSet s = VertexSet::range(0, k);
    const MinorSign m = signed_minor(l, s, tol);
    const double value = (k % 2 == 1 ? sign : 1.0) * m.value;
    if (!(value > m.tolerance)) {
      if (first_failure) *first_failure = MinorWitness{s, value};
      return false;
    }
  }
  return true;
}

void require_guard(const char* op, std::size_t n, const SylvesterOptions& options) {
  if (n > options.nmax) throw GuardError(op, n, options.nmax);
  if (n >= 63) throw GuardError(op, n, 62);
}

}  // namespace

DefinitenessVerdict is_psd_full(const SymmetricMatrix& l, const SylvesterOptions& options) {
  const std::size_t n = l.size();
  if (n == 0) throw std::invalid_argument("is_psd_full: empty matrix");
  require_guard("is_psd_full", n, options);

  std::optional<MinorWitness> not_psd;  // first S with [L]_S < 0
  std::optional<MinorWitness> not_nsd;  // first S with [-L]_S < 0
  std::vector<std::size_t> current;
  for_each_subset_lex(n, current, 0, [&](const std::vector<std::size_t>& pick) {
    const VertexSet s(pick);
    const MinorSign m = signed_minor(l, s, options.tol);
    if (!not_psd && m.value < -m.tolerance) not_psd = MinorWitness{s, m.value};
    const double negated = s.size() % 2 == 1 ? -m.value : m.value;
    if (!not_nsd && negated < -m.tolerance) not_nsd = MinorWitness{s, negated};
    return !(not_psd && not_nsd);
  });

  const Spectrum spectrum = symmetric_spectrum(l);
  DefinitenessVerdict verdict;
  verdict.rank_estimate = spectrum.rank;
  if (!not_psd) {
    verdict.kind = leading_minors_positive(l, n, options.tol, 1.0)
                       ? Definiteness::positive_definite
                       : Definiteness::positive_semidefinite;
  } else if (!not_nsd) {
    verdict.kind = leading_minors_positive(l, n, options.tol, -1.0)
                       ? Definiteness::negative_definite
                       : Definiteness::negative_semidefinite;
    verdict.minor = not_psd;
  } else {
    verdict.kind = Definiteness::indefinite;
    verdict.minor = not_psd;
    if (spectrum.min() < 0.0) {
      verdict.vector = VectorWitness{spectrum.lowest_eigenvector,
                                     l.quadratic_form(spectrum.lowest_eigenvector)};
    }
  }
  return verdict;
}

DefinitenessVerdict is_psd_zero_row_sum(const SymmetricMatrix& l, const SylvesterOptions& options) {
  const std::size_t n = l.size();
  if (n == 0) throw std::invalid_argument("is_psd_zero_row_sum: empty matrix");
  if (!l.has_zero_row_sums())
    throw std::invalid_argument("is_psd_zero_row_sum: matrix does not have zero row sums");
  DefinitenessVerdict verdict;
  std::optional<MinorWitness> failure;
  if (leading_minors_positive(l, n - 1, options.tol, 1.0, &failure)) {
    verdict.kind = Definiteness::positive_semidefinite;
    verdict.rank_estimate = n - 1;
  } else {
    verdict.kind = Definiteness::not_certified;
    verdict.rank_estimate = symmetric_spectrum(l).rank;
    verdict.minor = failure;
  }
  return verdict;
}

bool cholesky_positive_definite(DenseMatrix m, double pivot_tol) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = m(k, k);
    for (std::size_t p = 0; p < k; ++p) pivot -= m(k, p) * m(k, p);
    if (!(pivot > pivot_tol)) return false;
    const double root = std::sqrt(pivot);
    m(k, k) = root;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = m(i, k);
      for (std::size_t p = 0; p < k; ++p) s -= m(i, p) * m(k, p);
      m(i, k) = s / root;
    }
  }
  return true;
}

EquivalenceReport check_equivalences(const SymmetricMatrix& l, const SylvesterOptions& options) {
  const std::size_t n = l.size();
  if (n == 0) throw std::invalid_argument("check_equivalences: empty matrix");
  if (!l.has_zero_row_sums())
    throw std::invalid_argument("check_equivalences: matrix does not have zero row sums");
  require_guard("check_equivalences", n, options);

  const auto pivot_tol = [&](const DenseMatrix& sub) {
    double scale = 0.0;
    for (std::size_t i = 0; i < sub.rows(); ++i)
      for (std::size_t j = 0; j < sub.cols(); ++j) scale = std::max(scale, std::abs(sub(i, j)));
    return options.tol * scale;
  };

  EquivalenceReport report;

  const Spectrum spectrum = symmetric_spectrum(l);
  report.conditions[0] = spectrum.min() >= -spectrum.tolerance && spectrum.rank == n - 1;

  bool minors_positive = true;
  bool submatrices_pd = true;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const VertexSet s = VertexSet::from_mask(mask);
    const DenseMatrix sub = l.principal_submatrix(s);
    if (minors_positive) {
      const MinorSign m = signed_minor(l, s, options.tol);
      minors_positive = m.value > m.tolerance;
    }
    if (submatrices_pd) submatrices_pd = cholesky_positive_definite(sub, pivot_tol(sub));
    if (!minors_positive && !submatrices_pd) break;
  }
  report.conditions[1] = minors_positive;
  report.conditions[2] = submatrices_pd;

  report.conditions[3] = leading_minors_positive(l, n - 1, options.tol, 1.0);
  const DenseMatrix head = l.principal_submatrix(VertexSet::range(0, n - 1));
  report.conditions[4] = cholesky_positive_definite(head, pivot_tol(head));

  for (int a = 0; a < 5 && report.agree; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (report.conditions[a] != report.conditions[b]) {
        report.agree = false;
        report.disagreement = std::make_pair(a + 1, b + 1);
        break;
      }
  return report;
}

}  // namespace mesostab
