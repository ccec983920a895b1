#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cams/errors.hpp"
#include "cams/evaluation.hpp"
#include "cams/io.hpp"
#include "cams/pipeline.hpp"
#include "cams/synth.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 success, 1 usage, 2 data error, 3 internal.
constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kInternalError = 3;

struct ClusterArgs {
    std::string input;
    std::string format = "mgf";
    std::string output;
    int fset_size = 7;
    double bin_width = 0.5;
    int top_k = 50;
    double min_mz = 0.0;
    std::optional<double> precursor_tol;
    std::optional<double> zeta;
    std::string train_labels;
    int workers = 0;
    std::uint64_t seed = 1;
};

struct SynthArgs {
    int peptides = 100;
    int replicates = 20;
    int peaks = 50;
    double mz_low = 100.0;
    double mz_high = 2000.0;
    double noise = 0.2;
    double dropout = 0.1;
    double jitter = 0.05;
    std::uint64_t seed = 1;

    cams::SynthConfig to_config() const {
        cams::SynthConfig c;
        c.num_peptides = peptides;
        c.replicates_per_peptide = replicates;
        c.peaks_per_spectrum = peaks;
        c.mz_low = mz_low;
        c.mz_high = mz_high;
        c.noise_peak_fraction = noise;
        c.dropout_fraction = dropout;
        c.jitter_sd = jitter;
        c.seed = seed;
        return c;
    }
};

void add_synth_flags(CLI::App* cmd, SynthArgs& args) {
    cmd->add_option("--peptides", args.peptides, "Number of synthetic peptides")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--replicates", args.replicates, "Replicates per peptide")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--peaks", args.peaks, "Peaks per spectrum")->check(CLI::PositiveNumber);
    cmd->add_option("--mz-low", args.mz_low, "Lower m/z bound");
    cmd->add_option("--mz-high", args.mz_high, "Upper m/z bound");
    cmd->add_option("--noise", args.noise, "Fraction of peaks replaced by random m/z")
        ->check(CLI::Range(0.0, 0.999));
    cmd->add_option("--dropout", args.dropout, "Fraction of template peaks dropped")
        ->check(CLI::Range(0.0, 0.999));
    cmd->add_option("--jitter", args.jitter, "Normal m/z jitter (Th)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", args.seed, "Random seed");
}

cams::ParsedSpectra read_spectra(const std::string& input, const std::string& format) {
    cams::ParsedSpectra parsed = format == "dta-dir" ? cams::parse_dta_dir(input)
                                                     : cams::parse_mgf(input);
    if (parsed.skipped > 0)
        std::cerr << "warning: skipped " << parsed.skipped << " unparsable or empty "
                  << (format == "dta-dir" ? "files" : "blocks") << '\n';
    if (parsed.spectra.empty()) throw cams::DataError("no spectra parsed");
    return parsed;
}

void print_phases(const cams::PhaseTimings& t) {
    std::cout << std::fixed << std::setprecision(3) << "phase seconds: parse=" << t.parse
              << " gram=" << t.gram << " index=" << t.index << " weights=" << t.weights
              << " threshold=" << t.threshold << " components=" << t.components << '\n';
}

int run_cluster(const ClusterArgs& args) {
    if (args.zeta.has_value() == !args.train_labels.empty()) {
        std::cerr << "error: exactly one of --zeta or --train-labels is required\n";
        return kUsageError;
    }

    const cams::ParsedSpectra parsed = read_spectra(args.input, args.format);

    cams::PipelineOptions options;
    options.pre.bin_width = args.bin_width;
    options.pre.top_k = args.top_k;
    options.pre.min_mz = args.min_mz;
    options.fset_size = args.fset_size;
    options.precursor_tol = args.precursor_tol;
    options.workers = args.workers;

    cams::GroundTruth labels;
    cams::ThresholdChoice choice = cams::ThresholdChoice::fixed_at(1.0);
    if (args.zeta) {
        choice = cams::ThresholdChoice::fixed_at(*args.zeta);
    } else {
        labels = cams::parse_ground_truth(args.train_labels);
        choice = cams::ThresholdChoice::trained(labels, args.seed);
    }

    const cams::PipelineResult result = cams::run_pipeline(parsed.spectra, options, choice);

    // Write to a temp file and rename so failures leave nothing behind.
    const fs::path output(args.output);
    const fs::path tmp = output.string() + ".tmp";
    try {
        cams::write_clusters(result.clustering, tmp);
        fs::rename(tmp, output);
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }

    std::cout << "spectra:    " << result.num_spectra << '\n'
              << "clusters:   " << result.clustering.size() << '\n'
              << "singletons: " << result.num_singletons << '\n'
              << "zeta:       " << result.zeta << (args.zeta ? " (fixed)" : " (trained)") << '\n';
    print_phases(result.timings);
    std::cout << std::fixed << std::setprecision(3) << "wall: " << result.wall_seconds << "s\n"
              << "wrote " << output.string() << '\n';
    return 0;
}

int run_eval(const std::string& clusters_path, const std::string& truth_path) {
    const cams::Clustering clustering = cams::read_clusters(clusters_path);
    const cams::GroundTruth truth = cams::parse_ground_truth(truth_path);

    std::vector<std::string> missing;
    for (const auto& cluster : clustering)
        for (const auto& id : cluster)
            if (!truth.count(id) && missing.size() < 10) missing.push_back(id);
    if (!missing.empty()) {
        std::string msg = "clustered ids missing from ground truth:";
        for (const auto& id : missing) msg += " " + id;
        throw cams::DataError(msg);
    }

    const cams::EvalReport report = cams::awa(clustering, truth);
    std::cout << cams::report_to_json(report) << '\n';
    cams::print_report_table(report, std::cout);
    return 0;
}

int run_gen(const std::string& out_dir, const SynthArgs& args) {
    const cams::SynthDataset dataset = cams::generate_dataset(args.to_config());
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    cams::write_mgf(dataset.spectra, dir / "dataset.mgf");
    cams::write_ground_truth(dataset.truth, dir / "truth.tsv");
    std::cout << "wrote " << dataset.spectra.size() << " spectra to "
              << (dir / "dataset.mgf").string() << " and " << dataset.truth.size()
              << " labels to " << (dir / "truth.tsv").string() << '\n';
    return 0;
}

struct SweepArgs {
    std::string out_dir;
    std::vector<int> f_values = {2, 3, 4, 5, 6, 7};
    std::string input;
    std::string truth;
    double bin_width = 0.5;
    int top_k = 50;
    double sample_fraction = 0.2;
    int workers = 0;
    SynthArgs synth;
};

int run_sweep(const SweepArgs& args) {
    std::vector<cams::Spectrum> spectra;
    cams::GroundTruth truth;
    if (!args.input.empty()) {
        spectra = read_spectra(args.input, "mgf").spectra;
        truth = cams::parse_ground_truth(args.truth);
    } else {
        cams::SynthDataset dataset = cams::generate_dataset(args.synth.to_config());
        spectra = std::move(dataset.spectra);
        truth = std::move(dataset.truth);
    }

    cams::PipelineOptions options;
    options.pre.bin_width = args.bin_width;
    options.pre.top_k = args.top_k;
    options.workers = args.workers;

    const auto curve = cams::sweep_fset_size(spectra, truth, args.f_values, options,
                                             args.sample_fraction, args.synth.seed);

    fs::create_directories(args.out_dir);
    const fs::path csv = fs::path(args.out_dir) / "sweep.csv";
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write '" + csv.string() + "'");
    out << "f,awa\n";
    for (const auto& [f, awa_value] : curve) {
        out << f << ',' << std::fixed << std::setprecision(6) << awa_value << '\n';
        std::cout << "f=" << f << "  AWA=" << std::fixed << std::setprecision(4) << awa_value
                  << '\n';
    }
    std::cout << "wrote " << csv.string() << '\n';
    return 0;
}

struct BenchArgs {
    std::string out_dir;
    std::vector<std::size_t> sizes;
    int fset_size = 7;
    int replicates = 10;
    double zeta = 5.0;
    int workers = 0;
    int repeats = 3;
    std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& args) {
    cams::BenchConfig config;
    config.base.seed = args.seed;
    config.replicates_per_peptide = args.replicates;
    config.fset_size = args.fset_size;
    config.zeta = args.zeta;
    config.workers = args.workers;
    config.repeats = args.repeats;

    const auto records = cams::bench_scaling(args.sizes, config);

    fs::create_directories(args.out_dir);
    const fs::path csv = fs::path(args.out_dir) / "bench.csv";
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write '" + csv.string() + "'");
    out << "n,f,seconds,parse,gram,index,weights,components\n";
    for (const auto& r : records) {
        out << r.n_spectra << ',' << r.fset_size << ',' << std::fixed << std::setprecision(6)
            << r.wall_seconds;
        for (const char* phase : {"parse", "gram", "index", "weights", "components"})
            out << ',' << r.phase_breakdown.at(phase);
        out << '\n';
        std::cout << "n=" << r.n_spectra << "  wall=" << std::setprecision(3) << r.wall_seconds
                  << "s\n";
    }
    std::cout << "wrote " << csv.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-set spectral clustering: graph clustering of MS/MS spectra by shared "
                 "runs of consecutive peaks"};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    CLI::App* cluster = app.add_subcommand("cluster", "Cluster spectra and write a TSV partition");
    cluster->add_option("--input", cluster_args.input, "Input MGF file or .dta directory")
        ->required();
    cluster->add_option("--format", cluster_args.format, "Input format")
        ->check(CLI::IsMember({"mgf", "dta-dir"}));
    cluster->add_option("--output", cluster_args.output, "Output cluster TSV")->required();
    cluster->add_option("--fset-size", cluster_args.fset_size, "Consecutive-peak window size")
        ->check(CLI::Range(2, 64));
    cluster->add_option("--bin-width", cluster_args.bin_width, "m/z bin width (Th)")
        ->check(CLI::PositiveNumber);
    cluster->add_option("--top-k", cluster_args.top_k, "Peaks retained per spectrum")
        ->check(CLI::PositiveNumber);
    cluster->add_option("--min-mz", cluster_args.min_mz, "Drop peaks below this m/z")
        ->check(CLI::NonNegativeNumber);
    cluster
        ->add_option_function<double>(
            "--precursor-tol",
            [&](double v) { cluster_args.precursor_tol = v; },
            "Drop edges whose precursor m/z differ by more (Th)")
        ->check(CLI::PositiveNumber);
    cluster
        ->add_option_function<double>(
            "--zeta", [&](double v) { cluster_args.zeta = v; },
            "Fixed edge-elimination threshold")
        ->check(CLI::PositiveNumber);
    cluster->add_option("--train-labels", cluster_args.train_labels,
                        "Ground-truth TSV for threshold training");
    cluster->add_option("--workers", cluster_args.workers, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    cluster->add_option("--seed", cluster_args.seed, "Seed for threshold-training sampling");

    CLI::App* eval = app.add_subcommand("eval", "Score a clustering against ground truth");
    std::string eval_clusters, eval_truth;
    eval->add_option("--clusters", eval_clusters, "Cluster TSV")->required();
    eval->add_option("--truth", eval_truth, "Ground-truth TSV")->required();

    std::string gen_out;
    SynthArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic dataset");
    gen->add_option("--out-dir", gen_out, "Output directory")->required();
    add_synth_flags(gen, gen_args);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "AWA versus f-set size");
    sweep->add_option("--out-dir", sweep_args.out_dir, "Output directory")->required();
    sweep->add_option("--f-values", sweep_args.f_values, "Window sizes to sweep")
        ->delimiter(',');
    sweep->add_option("--input", sweep_args.input, "Existing MGF instead of synthetic data");
    sweep->add_option("--truth", sweep_args.truth, "Ground truth for --input");
    sweep->add_option("--bin-width", sweep_args.bin_width, "m/z bin width (Th)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--top-k", sweep_args.top_k, "Peaks retained per spectrum")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--sample-fraction", sweep_args.sample_fraction,
                      "Labeled pair sample fraction")
        ->check(CLI::Range(0.000001, 1.0));
    sweep->add_option("--workers", sweep_args.workers, "Worker threads (0 = all cores)");
    add_synth_flags(sweep, sweep_args.synth);

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Runtime versus dataset size");
    bench->add_option("--out-dir", bench_args.out_dir, "Output directory")->required();
    bench->add_option("--sizes", bench_args.sizes, "Dataset sizes (ascending)")
        ->required()
        ->delimiter(',');
    bench->add_option("--fset-size", bench_args.fset_size, "Consecutive-peak window size")
        ->check(CLI::Range(2, 64));
    bench->add_option("--replicates", bench_args.replicates, "Replicates per peptide")
        ->check(CLI::PositiveNumber);
    bench->add_option("--zeta", bench_args.zeta, "Fixed threshold used for the timed runs")
        ->check(CLI::PositiveNumber);
    bench->add_option("--workers", bench_args.workers, "Worker threads (0 = all cores)");
    bench->add_option("--repeats", bench_args.repeats, "Timing repeats (best kept)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (app.got_subcommand(cluster)) return run_cluster(cluster_args);
        if (app.got_subcommand(eval)) return run_eval(eval_clusters, eval_truth);
        if (app.got_subcommand(gen)) return run_gen(gen_out, gen_args);
        if (app.got_subcommand(sweep)) return run_sweep(sweep_args);
        if (app.got_subcommand(bench)) return run_bench(bench_args);
    } catch (const cams::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}
