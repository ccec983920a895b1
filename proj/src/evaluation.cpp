#include "cams/evaluation.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "cams/errors.hpp"

namespace cams {

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return a.size();

    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            if (a[i - 1] == b[j - 1]) {
                row[j] = diag;
            } else {
                row[j] = 1 + std::min({diag, up, row[j - 1]});
            }
            diag = up;
        }
    }
    return row[b.size()];
}

ClusterScore cluster_accuracy(const std::vector<std::string>& cluster,
                              const GroundTruth& truth) {
    if (cluster.empty()) throw std::invalid_argument("empty cluster");

    // Peptide equality is edit distance 0, i.e. exact string match, so a
    // count per peptide string gives the majority subgroup directly.
    std::map<std::string, std::size_t> counts;
    for (const std::string& id : cluster) {
        const auto it = truth.find(id);
        if (it == truth.end()) throw DataError("no ground-truth entry for '" + id + "'");
        ++counts[it->second];
    }
    ClusterScore score;
    score.size = cluster.size();
    for (const auto& [peptide, count] : counts) {
        if (count > score.majority_count) {  // map order breaks ties lexicographically
            score.majority_count = count;
            score.majority_peptide = peptide;
        }
    }
    score.accuracy = static_cast<double>(score.majority_count) / static_cast<double>(score.size);
    return score;
}

EvalReport awa(const Clustering& clustering, const GroundTruth& truth) {
    if (clustering.empty()) throw DataError("empty clustering: AWA is undefined");

    EvalReport report;
    report.per_cluster.reserve(clustering.size());
    // a_i * n_i == x_i, so the weighted sum stays in integers and the
    // division happens once.
    std::size_t majority_total = 0;
    for (std::size_t c = 0; c < clustering.size(); ++c) {
        ClusterScore score = cluster_accuracy(clustering[c], truth);
        score.cluster_id = c;
        majority_total += score.majority_count;
        report.num_spectra += score.size;
        if (score.size == 1) ++report.num_singletons;
        report.per_cluster.push_back(std::move(score));
    }
    report.num_clusters = clustering.size();
    report.awa =
        static_cast<double>(majority_total) / static_cast<double>(report.num_spectra);
    return report;
}

std::string report_to_json(const EvalReport& report) {
    nlohmann::json per_cluster = nlohmann::json::array();
    for (const ClusterScore& s : report.per_cluster) {
        per_cluster.push_back({{"cluster_id", s.cluster_id},
                               {"size", s.size},
                               {"majority_count", s.majority_count},
                               {"accuracy", s.accuracy},
                               {"majority_peptide", s.majority_peptide}});
    }
    const nlohmann::json j = {{"awa", report.awa},
                              {"num_clusters", report.num_clusters},
                              {"num_spectra", report.num_spectra},
                              {"num_singletons", report.num_singletons},
                              {"per_cluster", per_cluster}};
    return j.dump(2);
}

void print_report_table(const EvalReport& report, std::ostream& out) {
    out << std::left << std::setw(12) << "cluster_id" << std::setw(8) << "size"
        << std::setw(10) << "majority" << std::setw(10) << "accuracy"
        << "peptide\n";
    for (const ClusterScore& s : report.per_cluster) {
        out << std::left << std::setw(12) << s.cluster_id << std::setw(8) << s.size
            << std::setw(10) << s.majority_count << std::setw(10) << std::fixed
            << std::setprecision(4) << s.accuracy << s.majority_peptide << '\n';
    }
    out << "clusters: " << report.num_clusters << "  spectra: " << report.num_spectra
        << "  singletons: " << report.num_singletons << "  AWA: " << std::fixed
        << std::setprecision(4) << report.awa << '\n';
}

}  // namespace cams
