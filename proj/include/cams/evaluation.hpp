#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cams/types.hpp"

namespace cams {

/// Edit distance with unit insert/delete/substitute costs.
std::size_t levenshtein(std::string_view a, std::string_view b);

struct ClusterScore {
    std::size_t cluster_id = 0;
    std::size_t size = 0;            ///< n_i
    std::size_t majority_count = 0;  ///< x_i: largest same-peptide subgroup
    double accuracy = 0.0;           ///< a_i = x_i / n_i
    std::string majority_peptide;    ///< ties broken lexicographically
};

struct EvalReport {
    std::vector<ClusterScore> per_cluster;
    double awa = 0.0;
    std::size_t num_clusters = 0;
    std::size_t num_spectra = 0;
    std::size_t num_singletons = 0;
};

/// Scores one cluster against ground truth. Every member id must have a
/// truth entry (DataError naming the id otherwise). cluster_id is left 0
/// for the caller to fill.
ClusterScore cluster_accuracy(const std::vector<std::string>& cluster,
                              const GroundTruth& truth);

/// Size-weighted mean purity over all clusters, singletons included.
/// An empty clustering is an error (the value is undefined).
EvalReport awa(const Clustering& clustering, const GroundTruth& truth);

/// JSON with keys awa, num_clusters, num_spectra, num_singletons,
/// per_cluster (array of {cluster_id, size, majority_count, accuracy,
/// majority_peptide}).
std::string report_to_json(const EvalReport& report);

void print_report_table(const EvalReport& report, std::ostream& out);

}  // namespace cams
