#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cams/fset.hpp"
#include "cams/types.hpp"

namespace cams {

/// One training observation for the edge-elimination threshold: a pair's
/// weight and whether the two spectra map to the same peptide.
struct LabeledPair {
    std::string id_x;
    std::string id_y;
    std::int64_t weight = 0;
    bool label = false;  ///< true when the peptides are identical (edit distance 0)
};

/// One LabeledPair per weighted pair; the label is true iff the
/// Levenshtein distance between the two peptides is 0. A pair id without
/// a truth entry is an error naming the id.
std::vector<LabeledPair> label_pairs(const PairWeightMap& weights, const GroundTruth& truth);

/// Max-margin threshold on pair weights: in one dimension the separator
/// reduces to the midpoint between the largest negative weight and the
/// smallest positive weight when the classes separate. Otherwise the cut
/// minimizing misclassifications over candidate cuts (midpoints of
/// consecutive distinct weights) is chosen, ties broken by larger margin,
/// then by smaller zeta. The decision rule is: weight >= zeta => same
/// cluster. Requires at least one pair of each label.
double svm_threshold(const std::vector<LabeledPair>& pairs);

/// Validated pass-through for a user-chosen threshold (must be > 0).
double fixed_threshold(double zeta);

/// Learns zeta from a deterministic sample of pairs over the ids covered
/// by both `truth` and `ids`: every unordered pair is drawn with
/// probability sample_fraction, its weight looked up in `weights` (0 when
/// absent, so unconnected pairs supply negatives), labeled against truth,
/// and fed to svm_threshold. Large id sets fall back to drawing a capped
/// number of random pairs. Deterministic for a given seed.
double train_threshold(const PairWeightMap& weights,
                       const std::vector<std::string>& ids,
                       const GroundTruth& truth,
                       double sample_fraction,
                       std::uint64_t seed);

}  // namespace cams
