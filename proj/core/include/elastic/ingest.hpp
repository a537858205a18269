#pragma once

#include "elastic/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace elastic {

enum class MatrixKind { similarity, dissimilarity };

enum class MatrixFormat {
  csv_full,       ///< n x n comma-separated, optional header row of labels
  triangle,       ///< n-1 rows, row i holds i strictly-lower entries
  triangle_diag,  ///< n rows, row i holds i entries, the last being the (ignored) diagonal
  automatic,      ///< pick one of the above from the row-length profile
};

enum class Transform { identity, one_minus, max_minus };

/// Square matrix as read from a file, before conversion to pair dissimilarities.
struct RawMatrix {
  std::size_t n = 0;
  Matrix values;
  MatrixKind kind = MatrixKind::dissimilarity;
  std::vector<std::string> labels;
  /// Non-fatal notes raised while reading, e.g. symmetrization of an asymmetric input.
  std::vector<std::string> warnings;

  bool is_symmetric() const;
};

/// Lines starting with '#' and blank lines are skipped. Tokens are separated by commas
/// and/or whitespace. Errors are ParseError with 1-based line/column.
RawMatrix parse_matrix(std::string_view text, MatrixFormat format,
                       MatrixKind kind = MatrixKind::dissimilarity);

/// Replaces a with (a + a^T) / 2. Appends a warning when the input was asymmetric.
/// Idempotent.
void symmetrize(RawMatrix& raw);

/// Converts the off-diagonal entries to pair dissimilarities. max_minus subtracts from the
/// largest entry of the whole matrix, diagonal included. Throws ZeroDissimilarityError
/// naming the first pair whose result is not strictly positive.
DissimilarityData to_dissimilarities(const RawMatrix& raw, Transform transform,
                                     std::optional<RawMatrix> weights = std::nullopt);

std::optional<MatrixFormat> parse_format_name(std::string_view name);
std::optional<Transform> parse_transform_name(std::string_view name);
std::string_view to_string(Transform t);
std::string_view to_string(MatrixFormat f);

/// CSV with header `pair_i,pair_j,delta,weight`, 1-based pair_i < pair_j, values printed
/// in shortest round-trip form.
std::string write_dissimilarities(const DissimilarityData& data);

/// Inverse of write_dissimilarities. Rows must cover every pair exactly once.
DissimilarityData read_dissimilarities(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace elastic
