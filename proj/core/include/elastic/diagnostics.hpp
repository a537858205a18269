#pragma once

#include "elastic/solver.hpp"
#include "elastic/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace elastic {

struct ShepardRow {
  Pair pair;
  double delta;
  double dhat;
  double dist;
  double weight;
  double residual_ratio;  ///< 1 - dist / dhat
};

/// One row per pair, sorted by observed delta (then dhat, then pair index).
std::vector<ShepardRow> shepard_table(const DissimilarityData& data, const SolveResult& result);

/// Columns: i,j,delta,dhat,dist,weight,residual_ratio with 1-based i < j.
std::string write_shepard_csv(const std::vector<ShepardRow>& rows);

/// CSV `label,dim1,...,dimp`, 17 significant digits. Empty labels become P1..Pn.
/// Throws ValidationError if labels is non-empty and its size differs from n.
std::string export_configuration(const Configuration& config,
                                 const std::vector<std::string>& labels = {});

/// Reads the export_configuration format back. Labels are returned through labels_out
/// when non-null.
Configuration parse_configuration(std::string_view csv, std::vector<std::string>* labels_out = nullptr);

}  // namespace elastic
