#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cams {

/// One centroided peak: m/z in thomson, abundance in arbitrary units.
struct Peak {
    double mz = 0.0;
    double intensity = 0.0;
};

/// A single MS/MS scan. Peaks are strictly ascending in m/z; duplicate
/// m/z values are merged at construction time by summing intensities.
struct Spectrum {
    std::string id;
    double precursor_mz = 0.0;
    std::optional<int> charge;
    std::vector<Peak> peaks;
};

/// Builds a Spectrum from possibly unsorted peaks: sorts by m/z, merges
/// duplicates, validates mz > 0, intensity >= 0 and a non-empty peak list.
Spectrum make_spectrum(std::string id, double precursor_mz,
                       std::optional<int> charge, std::vector<Peak> peaks);

/// Spectrum id -> peptide string (uppercase letters, modification
/// annotations kept verbatim).
using GroundTruth = std::map<std::string, std::string>;

/// Disjoint clusters of spectrum ids covering the whole input; singletons
/// appear as size-1 clusters. Normalized form: members sorted ascending,
/// clusters ordered by descending size, ties by smallest member id.
using Clustering = std::vector<std::vector<std::string>>;

/// Sorts members and clusters into the normalized order above.
Clustering normalize_clustering(Clustering clusters);

}  // namespace cams
