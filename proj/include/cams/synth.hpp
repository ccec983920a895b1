#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cams/pipeline.hpp"
#include "cams/types.hpp"

namespace cams {

/// Workload generator settings. Each synthetic peptide is a template of
/// uniform-random peaks; replicates perturb it by peak dropout, m/z
/// jitter, and substitution of random noise peaks.
struct SynthConfig {
    int num_peptides = 100;
    int replicates_per_peptide = 20;
    int peaks_per_spectrum = 50;
    double mz_low = 100.0;
    double mz_high = 2000.0;
    double noise_peak_fraction = 0.2;  ///< fraction of peaks replaced by random m/z
    double dropout_fraction = 0.1;     ///< fraction of template peaks deleted per replicate
    double jitter_sd = 0.05;           ///< Th, additive normal noise on surviving peaks
    std::uint64_t seed = 1;
};

struct SynthDataset {
    std::vector<Spectrum> spectra;  ///< replicates, template-major order
    GroundTruth truth;              ///< replicate id -> synthetic peptide label
};

/// Deterministic for a given seed; replicates of one template share its
/// precursor m/z and ground-truth peptide. Rejects configs whose dropout
/// would leave no peaks.
SynthDataset generate_dataset(const SynthConfig& config);

/// Runs the full pipeline once per f value, learning zeta per f from a
/// deterministic labeled pair sample (sample_fraction of all unordered
/// pairs, absent pairs counting as weight 0). Returns (f, AWA) points.
std::vector<std::pair<int, double>> sweep_fset_size(const std::vector<Spectrum>& spectra,
                                                    const GroundTruth& truth,
                                                    const std::vector<int>& f_values,
                                                    const PipelineOptions& options,
                                                    double sample_fraction = 0.2,
                                                    std::uint64_t seed = 1);

struct TimingRecord {
    std::size_t n_spectra = 0;
    int fset_size = 0;
    double wall_seconds = 0.0;
    /// parse, gram, index, weights, components.
    std::map<std::string, double> phase_breakdown;
};

struct BenchConfig {
    SynthConfig base;                   ///< num_peptides is derived per size
    int replicates_per_peptide = 10;    ///< fixed redundancy ratio
    int fset_size = 7;
    double zeta = 5.0;                  ///< fixed threshold; training is not timed
    int workers = 0;
    int repeats = 3;                    ///< best-of-n to damp scheduler noise
};

/// For each N (ascending): generate N spectra at the fixed redundancy
/// ratio, run the pipeline, and record wall time plus phase breakdown.
/// Generation itself is not timed.
std::vector<TimingRecord> bench_scaling(const std::vector<std::size_t>& sizes,
                                        const BenchConfig& config);

}  // namespace cams
