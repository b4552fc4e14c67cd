#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "kjnn/experiment.hpp"

namespace kjnn {

// CSV layout (one row per AggregateResult, \n line endings, UTF-8):
//
//   topology,k,j,n,trials,seed,connectivity_probability,mean_degree,min_degree,max_degree,radius
//
// Floating-point fields use 6 decimal digits.  Parameters a topology does
// not use are left empty: j and radius for sym-knn, radius for kj-nn, and
// k and j for rgg.  min_degree/max_degree are the trial means of the
// per-trial minimum and maximum degree.
std::string results_to_csv(const std::vector<AggregateResult>& results);

// JSON mirror of the CSV rows, plus the degree histogram (which the CSV
// omits).  Array of objects; unused parameters serialize as null.
std::string results_to_json(const std::vector<AggregateResult>& results);

// `degree,proportion` rows in ascending degree order.  The proportions are
// checked to sum to 1 (within 1e-9) before anything is written.
std::string histogram_to_csv(const std::map<std::uint32_t, double>& histogram);

// File-writing wrappers around the serializers above.  Validation happens
// before the file is opened, so a failed precondition never leaves a file
// behind.  I/O failures throw std::runtime_error.
void write_csv(const std::vector<AggregateResult>& results, const std::filesystem::path& path);
void write_json(const std::vector<AggregateResult>& results, const std::filesystem::path& path);
void write_histogram_csv(const std::map<std::uint32_t, double>& histogram,
                         const std::filesystem::path& path);

// Parses a results CSV produced by write_csv back into aggregates.  The
// degree histogram is not part of the CSV and comes back empty; every other
// field round-trips to the serialized 6-decimal precision.
std::vector<AggregateResult> read_results_csv(const std::filesystem::path& path);

}  // namespace kjnn
