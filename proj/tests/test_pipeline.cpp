#include <doctest.h>

#include <cmath>

#include "cams/errors.hpp"
#include "cams/evaluation.hpp"
#include "cams/pipeline.hpp"
#include "cams/synth.hpp"

using namespace cams;

namespace {

std::vector<Spectrum> three_spectra() {
    // Two spectra share all peaks; the third is unrelated.
    const std::vector<Peak> shared = {{100.1, 5.0}, {200.2, 6.0}, {300.3, 7.0}, {400.4, 8.0}};
    const std::vector<Peak> other = {{150.0, 5.0}, {250.0, 6.0}, {350.0, 7.0}, {450.0, 8.0}};
    return {make_spectrum("s1", 500.0, 2, shared), make_spectrum("s2", 500.0, 2, shared),
            make_spectrum("s3", 600.0, 2, other)};
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("identical pair clusters together, unrelated spectrum stays alone") {
    PipelineOptions options;
    options.fset_size = 3;
    const PipelineResult result =
        run_pipeline(three_spectra(), options, ThresholdChoice::fixed_at(1.0));
    REQUIRE(result.clustering.size() == 2);
    CHECK(result.clustering[0] == std::vector<std::string>{"s1", "s2"});
    CHECK(result.clustering[1] == std::vector<std::string>{"s3"});
    CHECK(result.num_singletons == 1);
}

TEST_CASE("exactly one threshold mode must be chosen") {
    const GroundTruth truth{{"s1", "A"}};
    ThresholdChoice both = ThresholdChoice::fixed_at(1.0);
    both.labels = &truth;
    CHECK_THROWS_AS(run_pipeline(three_spectra(), PipelineOptions{}, both),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_pipeline(three_spectra(), PipelineOptions{}, ThresholdChoice{}),
                    std::invalid_argument);
}

TEST_CASE("duplicate spectrum ids are rejected") {
    auto spectra = three_spectra();
    spectra[1].id = "s1";
    CHECK_THROWS_AS(run_pipeline(spectra, PipelineOptions{}, ThresholdChoice::fixed_at(1.0)),
                    DataError);
}

TEST_CASE("precursor tolerance gates edges") {
    auto spectra = three_spectra();
    spectra[1].precursor_mz = 520.0;  // same peaks as s1, precursor 20 Th away
    PipelineOptions options;
    options.fset_size = 3;

    const PipelineResult open =
        run_pipeline(spectra, options, ThresholdChoice::fixed_at(1.0));
    CHECK(open.clustering.size() == 2);

    options.precursor_tol = 5.0;
    const PipelineResult gated =
        run_pipeline(spectra, options, ThresholdChoice::fixed_at(1.0));
    CHECK(gated.clustering.size() == 3);
}

TEST_CASE("clustering is reproducible and independent of the worker count") {
    SynthConfig config;
    config.num_peptides = 20;
    config.replicates_per_peptide = 8;
    config.peaks_per_spectrum = 40;
    config.seed = 5;
    const SynthDataset dataset = generate_dataset(config);

    PipelineOptions options;
    options.workers = 1;
    const PipelineResult w1 =
        run_pipeline(dataset.spectra, options, ThresholdChoice::trained(dataset.truth, 3));
    const PipelineResult w1_again =
        run_pipeline(dataset.spectra, options, ThresholdChoice::trained(dataset.truth, 3));
    options.workers = 4;
    const PipelineResult w4 =
        run_pipeline(dataset.spectra, options, ThresholdChoice::trained(dataset.truth, 3));

    CHECK(w1.zeta == w1_again.zeta);
    CHECK(w1.clustering == w1_again.clustering);
    CHECK(w1.zeta == w4.zeta);
    CHECK(w1.clustering == w4.clustering);
}

TEST_CASE("clean data clusters are peptide-pure under edit distance") {
    SynthConfig config;
    config.num_peptides = 8;
    config.replicates_per_peptide = 6;
    config.noise_peak_fraction = 0.0;
    config.dropout_fraction = 0.0;
    config.jitter_sd = 0.0;
    config.seed = 12;
    const SynthDataset dataset = generate_dataset(config);
    const PipelineResult result =
        run_pipeline(dataset.spectra, PipelineOptions{}, ThresholdChoice::trained(dataset.truth));
    for (const auto& cluster : result.clustering)
        for (const auto& a : cluster)
            for (const auto& b : cluster)
                CHECK(levenshtein(dataset.truth.at(a), dataset.truth.at(b)) == 0);
}

TEST_CASE("phase timings account for the measured wall time") {
    SynthConfig config;
    config.num_peptides = 50;
    config.replicates_per_peptide = 10;
    config.seed = 9;
    const SynthDataset dataset = generate_dataset(config);
    const PipelineResult result =
        run_pipeline(dataset.spectra, PipelineOptions{}, ThresholdChoice::fixed_at(3.0));
    CHECK(result.timings.sum() <= result.wall_seconds + 1e-6);
    CHECK(result.wall_seconds - result.timings.sum() <=
          std::max(0.05 * result.wall_seconds, 0.005));
    CHECK(result.num_spectra == 500);
}

}  // TEST_SUITE
