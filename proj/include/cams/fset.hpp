#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cams/types.hpp"

namespace cams {

using Bin = std::int64_t;

/// A window of f consecutive bin indices, strictly ascending.
using Gram = std::vector<Bin>;

struct PreprocessConfig {
    double bin_width = 0.5;  ///< Th per bin; 0.02 suits high-resolution HCD data
    int top_k = 50;          ///< peaks retained per spectrum, by intensity
    double min_mz = 0.0;     ///< peaks below this m/z are dropped
};

/// A spectrum reduced to its retained peak positions: strictly ascending
/// bin indices with duplicates collapsed. May be empty when every peak
/// was filtered out.
struct BinnedSpectrum {
    std::string id;
    std::vector<Bin> bins;
};

/// The ordered list of f-grams (windows of f consecutive bins) of one
/// spectrum. Windows are materialized on demand from `bins`; they are
/// pairwise distinct because the bins are strictly ascending.
struct FsetVector {
    std::string id;
    int f = 0;
    std::vector<Bin> bins;

    std::size_t gram_count() const {
        return bins.size() >= static_cast<std::size_t>(f) ? bins.size() - f + 1 : 0;
    }
    Gram gram(std::size_t i) const;
    std::vector<Gram> grams() const;
};

/// Keeps the top_k highest-intensity peaks at or above min_mz (intensity
/// ties broken toward lower m/z), bins each as floor(mz / bin_width), and
/// collapses duplicate bins. An all-filtered spectrum yields empty bins.
BinnedSpectrum preprocess(const Spectrum& spectrum, const PreprocessConfig& config);

/// Sliding windows of f consecutive bins, in order. Fewer than f bins
/// give an empty gram list. f must be >= 2.
FsetVector enumerate_fsets(const BinnedSpectrum& binned, int f);

/// Number of grams common to both vectors (grams are distinct within
/// each vector, so this is the intersection size). Requires x.f == y.f.
std::int64_t fset_weight(const FsetVector& x, const FsetVector& y);

/// Unordered id pair, normalized so that first < second.
using PairKey = std::pair<std::string, std::string>;

/// Pair -> shared-gram count. Pairs sharing no gram are absent.
using PairWeightMap = std::map<PairKey, std::int64_t>;

struct GramHash {
    std::size_t operator()(const Gram& g) const noexcept;
};

class FsetIndex;

/// Builds the inverted index gram -> vectors containing it. All vectors
/// must share the same f and have distinct ids.
FsetIndex build_index(const std::vector<FsetVector>& vectors);

/// Weights for every unordered pair sharing at least one gram, computed
/// from the posting lists. Equals the all-pairs double loop of
/// fset_weight. Result is independent of the worker count.
PairWeightMap all_pair_weights(const FsetIndex& index, int workers = 1);

/// Inverted index over grams: each posting list holds the vectors
/// containing that gram, in input order. A vector appears at most once
/// per list since its grams are distinct.
class FsetIndex {
public:
    FsetIndex() = default;

    int fset_size() const { return f_; }
    std::size_t num_vectors() const { return ids_.size(); }
    std::size_t num_grams() const { return postings_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }

    /// Ids of the vectors containing `gram`, in input order; empty when
    /// the gram is unknown.
    std::vector<std::string> posting_ids(const Gram& gram) const;

private:
    int f_ = 0;
    std::vector<std::string> ids_;
    std::unordered_map<Gram, std::vector<std::uint32_t>, GramHash> postings_;

    friend FsetIndex build_index(const std::vector<FsetVector>&);
    friend PairWeightMap all_pair_weights(const FsetIndex&, int);
};

}  // namespace cams
