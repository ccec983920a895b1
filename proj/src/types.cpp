#include "cams/types.hpp"

#include <algorithm>
#include <stdexcept>

#include "cams/errors.hpp"

namespace cams {

Spectrum make_spectrum(std::string id, double precursor_mz,
                       std::optional<int> charge, std::vector<Peak> peaks) {
    if (peaks.empty()) throw DataError("spectrum '" + id + "' has no peaks");
    if (!(precursor_mz > 0.0))
        throw DataError("spectrum '" + id + "' has non-positive precursor m/z");
    for (const Peak& p : peaks) {
        if (!(p.mz > 0.0)) throw DataError("spectrum '" + id + "' has non-positive peak m/z");
        if (p.intensity < 0.0) throw DataError("spectrum '" + id + "' has negative intensity");
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.mz < b.mz; });
    // Merge duplicate m/z values by summing intensities.
    std::vector<Peak> merged;
    merged.reserve(peaks.size());
    for (const Peak& p : peaks) {
        if (!merged.empty() && merged.back().mz == p.mz) {
            merged.back().intensity += p.intensity;
        } else {
            merged.push_back(p);
        }
    }
    return Spectrum{std::move(id), precursor_mz, charge, std::move(merged)};
}

Clustering normalize_clustering(Clustering clusters) {
    for (auto& members : clusters) {
        if (members.empty()) throw std::invalid_argument("empty cluster in partition");
        std::sort(members.begin(), members.end());
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return clusters;
}

}  // namespace cams
