#pragma once

#include "elastic/ingest.hpp"
#include "elastic/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace elastic {

struct DatasetInfo {
  std::string name;
  std::size_t n;
  std::string citation;
  bool available;  ///< false when the build did not bundle the source table
};

std::vector<DatasetInfo> list_datasets();

/// "ekman": 14 colors, dissimilarity = 1 - similarity.
/// "morse": 36 Morse signals, confusion percentages symmetrized then max-minus.
/// Throws DatasetError for an unknown name (listing valid ones) or an unbundled table.
DissimilarityData builtin_dataset(std::string_view name);

/// The conversion builtin_dataset() applies to the dataset's source table.
Transform builtin_transform(std::string_view name);

/// The bundled source CSV text of a dataset (a full similarity matrix).
std::string_view builtin_dataset_source(std::string_view name);

}  // namespace elastic
