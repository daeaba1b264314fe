#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mesostab/matrix.hpp"
#include "mesostab/vertex_set.hpp"

namespace mesostab {

enum class Definiteness {
  positive_definite,
  positive_semidefinite,
  negative_definite,
  negative_semidefinite,
  indefinite,
  // The leading-minor test for zero-row-sum matrices failed: the matrix is not
  // PSD of rank n-1, but the test alone cannot say which part fails.
  not_certified,
};

std::string_view to_string(Definiteness kind);

struct MinorWitness {
  VertexSet s;
  double value = 0.0;
};

struct VectorWitness {
  std::vector<double> v;
  double quadratic_form = 0.0;  // v^T L v
};

struct DefinitenessVerdict {
  Definiteness kind = Definiteness::indefinite;
  std::size_t rank_estimate = 0;
  std::optional<MinorWitness> minor;
  std::optional<VectorWitness> vector;
};

inline constexpr std::size_t kDefaultNmax = 20;

struct SylvesterOptions {
  /// Largest n for which 2^n principal minors are swept.
  std::size_t nmax = kDefaultNmax;
  /// Relative threshold: a minor of L_{S,S} counts as zero within
  /// tol * hadamard_bound(L_{S,S}).
  double tol = 1e-9;
};

/// Eigen-decomposition used as the independent spectral oracle.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> lowest_eigenvector;
  double tolerance = 0.0;  // 1e-8 * max|a_ij| * n
  std::size_t rank = 0;    // eigenvalues with |lambda| > tolerance

  double min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

Spectrum symmetric_spectrum(const SymmetricMatrix& l);

/// Sylvester's criterion over all 2^n - 1 nonempty principal minors. A non-PSD
/// verdict cites the first violating S in lexicographic order; an indefinite
/// verdict also carries an eigenvector with negative quadratic form.
/// Throws GuardError when n > options.nmax.
DefinitenessVerdict is_psd_full(const SymmetricMatrix& l, const SylvesterOptions& options = {});

/// Leading-minor test for symmetric zero-row-sum L: positive semi-definite with
/// rank n-1 iff [L]_{1..k} > 0 for k = 1..n-1. Costs n-1 determinants.
/// Throws std::invalid_argument when the row sums are not zero.
DefinitenessVerdict is_psd_zero_row_sum(const SymmetricMatrix& l,
                                        const SylvesterOptions& options = {});

/// The five equivalent characterisations for zero-row-sum matrices, each
/// evaluated by its own route.
struct EquivalenceReport {
  /// (i)   PSD with rank n-1, from the spectrum
  /// (ii)  every proper principal minor > 0
  /// (iii) every proper principal submatrix is PD (Cholesky)
  /// (iv)  leading minors k = 1..n-1 > 0
  /// (v)   L_{1..n-1} is PD (Cholesky)
  std::array<bool, 5> conditions{};
  bool agree = true;
  std::optional<std::pair<int, int>> disagreement;  // 1-based condition numbers

  bool verdict() const { return conditions[0]; }
};

EquivalenceReport check_equivalences(const SymmetricMatrix& l, const SylvesterOptions& options = {});

/// Cholesky succeeds with every pivot above pivot_tol.
bool cholesky_positive_definite(DenseMatrix m, double pivot_tol);

}  // namespace mesostab
