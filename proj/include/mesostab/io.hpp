#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mesostab/graph.hpp"
#include "mesostab/kuramoto.hpp"
#include "mesostab/matrix.hpp"

// Text input formats. Blank lines and '#' comments are ignored everywhere;
// vertex labels in files are 1-based. Malformed input raises ParseError with
// the offending line number.

namespace mesostab::io {

/// "n <count>" header followed by one "i j w" line per edge.
WeightedGraph read_edge_list(std::istream& in);

/// n rows of n comma-separated decimals; must be exactly symmetric.
SymmetricMatrix read_matrix_csv(std::istream& in);

/// "N <count>" (or a bare count), "omega: w_1 ... w_N", then "i j B_ij" lines.
KuramotoSystem read_kuramoto(std::istream& in);

/// Whitespace-separated phases, any number per line.
std::vector<double> read_phases(std::istream& in);

/// Strict decimal parse; rejects trailing text, NaN and infinities.
double parse_real(const std::string& token, std::size_t line);

}  // namespace mesostab::io
