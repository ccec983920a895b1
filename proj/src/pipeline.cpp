#include "cams/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cams/errors.hpp"
#include "cams/parallel.hpp"
#include "cams/threshold.hpp"

namespace cams {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::map<std::string, double> PhaseTimings::as_map() const {
    return {{"parse", parse},         {"gram", gram},
            {"index", index},         {"weights", weights},
            {"threshold", threshold}, {"components", components}};
}

ThresholdChoice ThresholdChoice::fixed_at(double zeta) {
    ThresholdChoice c;
    c.fixed = zeta;
    return c;
}

ThresholdChoice ThresholdChoice::trained(const GroundTruth& truth, std::uint64_t seed,
                                         double sample_fraction) {
    ThresholdChoice c;
    c.labels = &truth;
    c.seed = seed;
    c.sample_fraction = sample_fraction;
    return c;
}

PipelineResult run_pipeline(const std::vector<Spectrum>& spectra,
                            const PipelineOptions& options,
                            const ThresholdChoice& threshold) {
    if (threshold.fixed.has_value() == (threshold.labels != nullptr))
        throw std::invalid_argument("exactly one threshold mode must be set");
    if (options.fset_size < 2) throw std::invalid_argument("f-set size must be >= 2");

    std::unordered_set<std::string> unique_ids;
    unique_ids.reserve(spectra.size());
    std::vector<std::string> ids;
    ids.reserve(spectra.size());
    for (const Spectrum& s : spectra) {
        if (!unique_ids.insert(s.id).second)
            throw DataError("duplicate spectrum id '" + s.id + "'");
        ids.push_back(s.id);
    }

    PipelineResult result;
    result.num_spectra = spectra.size();
    Stopwatch total;
    Stopwatch phase;

    std::vector<BinnedSpectrum> binned(spectra.size());
    parallel_chunks(spectra.size(), options.workers,
                    [&](std::size_t begin, std::size_t end, int) {
                        for (std::size_t i = begin; i < end; ++i)
                            binned[i] = preprocess(spectra[i], options.pre);
                    });
    result.timings.parse = phase.lap();

    std::vector<FsetVector> vectors(binned.size());
    parallel_chunks(binned.size(), options.workers,
                    [&](std::size_t begin, std::size_t end, int) {
                        for (std::size_t i = begin; i < end; ++i)
                            vectors[i] = enumerate_fsets(binned[i], options.fset_size);
                    });
    result.timings.gram = phase.lap();

    const FsetIndex index = build_index(vectors);
    result.timings.index = phase.lap();

    PairWeightMap weights = all_pair_weights(index, options.workers);
    if (options.precursor_tol) {
        std::unordered_map<std::string, double> precursor;
        precursor.reserve(spectra.size());
        for (const Spectrum& s : spectra) precursor.emplace(s.id, s.precursor_mz);
        const double tol = *options.precursor_tol;
        for (auto it = weights.begin(); it != weights.end();) {
            if (std::abs(precursor.at(it->first.first) - precursor.at(it->first.second)) > tol)
                it = weights.erase(it);
            else
                ++it;
        }
    }
    result.timings.weights = phase.lap();

    result.zeta = threshold.fixed
                      ? fixed_threshold(*threshold.fixed)
                      : train_threshold(weights, ids, *threshold.labels,
                                        threshold.sample_fraction, threshold.seed);
    result.timings.threshold = phase.lap();

    const SpectrumGraph graph = build_graph(weights, std::move(ids));
    const SpectrumGraph kept = apply_threshold(graph, result.zeta);
    result.clustering = connected_components(kept);
    result.timings.components = phase.lap();

    for (const auto& cluster : result.clustering)
        if (cluster.size() == 1) ++result.num_singletons;
    result.wall_seconds = total.lap();
    return result;
}

}  // namespace cams
