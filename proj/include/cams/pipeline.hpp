#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cams/fset.hpp"
#include "cams/graph.hpp"
#include "cams/types.hpp"

namespace cams {

/// Seconds spent in each pipeline phase. Phases run sequentially, so the
/// sum tracks the measured wall time.
struct PhaseTimings {
    double parse = 0.0;       ///< binning / peak selection
    double gram = 0.0;        ///< window enumeration
    double index = 0.0;       ///< inverted-index build
    double weights = 0.0;     ///< pair-weight accumulation
    double threshold = 0.0;   ///< zeta selection (0 when fixed)
    double components = 0.0;  ///< graph build, elimination, components

    double sum() const { return parse + gram + index + weights + threshold + components; }
    std::map<std::string, double> as_map() const;
};

struct PipelineOptions {
    PreprocessConfig pre;
    int fset_size = 7;
    /// When set, edges between spectra whose precursor m/z differ by more
    /// than this many Th are dropped before graph construction.
    std::optional<double> precursor_tol;
    int workers = 0;  ///< 0 = machine parallelism
};

/// Exactly one of the two modes: a fixed zeta, or training labels.
struct ThresholdChoice {
    std::optional<double> fixed;
    const GroundTruth* labels = nullptr;
    double sample_fraction = 0.2;
    std::uint64_t seed = 1;

    static ThresholdChoice fixed_at(double zeta);
    static ThresholdChoice trained(const GroundTruth& truth, std::uint64_t seed = 1,
                                   double sample_fraction = 0.2);
};

struct PipelineResult {
    Clustering clustering;
    double zeta = 0.0;
    std::size_t num_spectra = 0;
    std::size_t num_singletons = 0;
    PhaseTimings timings;
    double wall_seconds = 0.0;
};

/// Runs binning -> gram enumeration -> inverted index -> pair weights ->
/// threshold -> edge elimination -> connected components. Deterministic
/// for given inputs, options and seed, independent of the worker count.
PipelineResult run_pipeline(const std::vector<Spectrum>& spectra,
                            const PipelineOptions& options,
                            const ThresholdChoice& threshold);

}  // namespace cams
