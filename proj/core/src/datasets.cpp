#include "elastic/datasets.hpp"

#include "elastic/errors.hpp"
#include "elastic/ingest.hpp"

#include "embedded_data.hpp"

namespace elastic {
namespace {

constexpr std::string_view kEkmanCitation =
    "Ekman, G. (1954). Dimensions of color vision. Journal of Psychology 38, 467-474.";
constexpr std::string_view kMorseCitation =
    "Rothkopf, E. Z. (1957). A measure of stimulus similarity and errors in some "
    "paired-associate learning tasks. Journal of Experimental Psychology 53, 94-101.";

[[noreturn]] void unknown(std::string_view name) {
  throw DatasetError("unknown dataset '" + std::string(name) + "'; valid names: ekman, morse");
}

std::string_view morse_text() {
  const auto text = detail::embedded_morse_csv();
  if (!text) {
    throw DatasetError(
        "dataset 'morse' is not bundled in this build: place the 36x36 Rothkopf confusion "
        "table at core/data/morse.csv (or set ELASTIC_MORSE_CSV) and reconfigure");
  }
  return *text;
}

}  // namespace

std::vector<DatasetInfo> list_datasets() {
  return {
      {"ekman", 14, std::string(kEkmanCitation), true},
      {"morse", 36, std::string(kMorseCitation), detail::embedded_morse_csv().has_value()},
  };
}

std::string_view builtin_dataset_source(std::string_view name) {
  if (name == "ekman") return detail::embedded_ekman_csv();
  if (name == "morse") return morse_text();
  unknown(name);
}

Transform builtin_transform(std::string_view name) {
  if (name == "ekman") return Transform::one_minus;
  if (name == "morse") return Transform::max_minus;
  unknown(name);
}

DissimilarityData builtin_dataset(std::string_view name) {
  const Transform transform = builtin_transform(name);
  const RawMatrix raw =
      parse_matrix(builtin_dataset_source(name), MatrixFormat::csv_full, MatrixKind::similarity);
  return to_dissimilarities(raw, transform);
}

}  // namespace elastic
