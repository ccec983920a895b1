#include "cams/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "cams/evaluation.hpp"
#include "cams/graph.hpp"
#include "cams/rng.hpp"
#include "cams/threshold.hpp"

namespace cams {

namespace {

constexpr char kAminoAcids[] = "ACDEFGHIKLMNPQRSTVWY";

// Stream salts so template, replicate and label draws never overlap.
constexpr std::uint64_t kTemplateStream = 0x74;
constexpr std::uint64_t kReplicateStream = 0x72;
constexpr std::uint64_t kLabelStream = 0x6c;

std::string make_id(int template_idx, int replicate_idx) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "p%05d_r%04d", template_idx, replicate_idx);
    return buf;
}

// First n positions of a partial Fisher-Yates shuffle of [0, size).
std::vector<std::size_t> pick_positions(std::size_t n, std::size_t size, Rng& rng) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (std::size_t k = 0; k < n && k < size; ++k)
        std::swap(idx[k], idx[k + rng.below(size - k)]);
    idx.resize(std::min(n, size));
    return idx;
}

void validate(const SynthConfig& c) {
    if (c.num_peptides < 1 || c.replicates_per_peptide < 1 || c.peaks_per_spectrum < 1)
        throw std::invalid_argument("counts must be >= 1");
    if (!(c.mz_low < c.mz_high)) throw std::invalid_argument("mz range must have low < high");
    if (c.noise_peak_fraction < 0.0 || c.noise_peak_fraction >= 1.0 ||
        c.dropout_fraction < 0.0 || c.dropout_fraction >= 1.0)
        throw std::invalid_argument("fractions must be in [0, 1)");
    if (c.jitter_sd < 0.0) throw std::invalid_argument("jitter_sd must be >= 0");
}

}  // namespace

SynthDataset generate_dataset(const SynthConfig& config) {
    validate(config);
    const int peaks = config.peaks_per_spectrum;
    const auto n_drop = static_cast<std::size_t>(
        std::lround(config.dropout_fraction * peaks));
    const std::size_t kept = peaks - n_drop;
    if (kept < 1) throw std::invalid_argument("dropout leaves no peaks per replicate");
    const auto n_noise = static_cast<std::size_t>(
        std::lround(config.noise_peak_fraction * static_cast<double>(kept)));

    // Distinct peptide labels, one per template.
    std::vector<std::string> labels;
    labels.reserve(config.num_peptides);
    std::set<std::string> used;
    for (int t = 0; t < config.num_peptides; ++t) {
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng(config.seed, kLabelStream,
                    static_cast<std::uint64_t>(t) * 997 + attempt);
            const std::size_t len = 8 + rng.below(8);
            std::string peptide;
            for (std::size_t i = 0; i < len; ++i) peptide += kAminoAcids[rng.below(20)];
            if (used.insert(peptide).second) {
                labels.push_back(std::move(peptide));
                break;
            }
        }
    }

    SynthDataset dataset;
    dataset.spectra.reserve(static_cast<std::size_t>(config.num_peptides) *
                            config.replicates_per_peptide);
    for (int t = 0; t < config.num_peptides; ++t) {
        Rng trng(config.seed, kTemplateStream, static_cast<std::uint64_t>(t));
        std::vector<Peak> tmpl(peaks);
        for (Peak& p : tmpl) {
            p.mz = trng.uniform(config.mz_low, config.mz_high);
            p.intensity = trng.uniform(10.0, 1000.0);
        }
        const double precursor = trng.uniform(config.mz_low, config.mz_high);

        for (int r = 0; r < config.replicates_per_peptide; ++r) {
            Rng rng(config.seed, kReplicateStream,
                    static_cast<std::uint64_t>(t) * 131071 + static_cast<std::uint64_t>(r));

            std::vector<char> dropped(peaks, 0);
            for (std::size_t pos : pick_positions(n_drop, peaks, rng)) dropped[pos] = 1;

            std::vector<Peak> peaks_out;
            peaks_out.reserve(kept);
            for (int p = 0; p < peaks; ++p) {
                if (dropped[p]) continue;
                Peak out = tmpl[p];
                if (config.jitter_sd > 0.0)
                    out.mz = std::max(out.mz + rng.normal(config.jitter_sd), 1e-6);
                peaks_out.push_back(out);
            }
            for (std::size_t pos : pick_positions(n_noise, peaks_out.size(), rng)) {
                peaks_out[pos].mz = rng.uniform(config.mz_low, config.mz_high);
                peaks_out[pos].intensity = rng.uniform(10.0, 1000.0);
            }

            std::string id = make_id(t, r);
            dataset.truth.emplace(id, labels[t]);
            dataset.spectra.push_back(
                make_spectrum(std::move(id), precursor, 2, std::move(peaks_out)));
        }
    }
    return dataset;
}

std::vector<std::pair<int, double>> sweep_fset_size(const std::vector<Spectrum>& spectra,
                                                    const GroundTruth& truth,
                                                    const std::vector<int>& f_values,
                                                    const PipelineOptions& options,
                                                    double sample_fraction,
                                                    std::uint64_t seed) {
    if (f_values.empty()) throw std::invalid_argument("no f values to sweep");

    std::vector<std::pair<int, double>> curve;
    curve.reserve(f_values.size());
    for (const int f : f_values) {
        PipelineOptions opts = options;
        opts.fset_size = f;
        const PipelineResult run = run_pipeline(
            spectra, opts, ThresholdChoice::trained(truth, seed, sample_fraction));
        curve.emplace_back(f, awa(run.clustering, truth).awa);
    }
    return curve;
}

std::vector<TimingRecord> bench_scaling(const std::vector<std::size_t>& sizes,
                                        const BenchConfig& config) {
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sizes must be ascending");

    std::vector<TimingRecord> records;
    records.reserve(sizes.size());
    for (const std::size_t n : sizes) {
        SynthConfig synth = config.base;
        synth.replicates_per_peptide = config.replicates_per_peptide;
        synth.num_peptides = static_cast<int>(
            (n + config.replicates_per_peptide - 1) / config.replicates_per_peptide);
        SynthDataset dataset = generate_dataset(synth);
        if (dataset.spectra.size() > n) dataset.spectra.resize(n);

        PipelineOptions opts;
        opts.fset_size = config.fset_size;
        opts.workers = config.workers;

        PipelineResult best;
        for (int rep = 0; rep < std::max(1, config.repeats); ++rep) {
            PipelineResult run = run_pipeline(dataset.spectra, opts,
                                              ThresholdChoice::fixed_at(config.zeta));
            if (rep == 0 || run.wall_seconds < best.wall_seconds) best = std::move(run);
        }

        TimingRecord record;
        record.n_spectra = dataset.spectra.size();
        record.fset_size = config.fset_size;
        record.wall_seconds = best.wall_seconds;
        record.phase_breakdown = {{"parse", best.timings.parse},
                                  {"gram", best.timings.gram},
                                  {"index", best.timings.index},
                                  {"weights", best.timings.weights},
                                  {"components", best.timings.components + best.timings.threshold}};
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace cams
