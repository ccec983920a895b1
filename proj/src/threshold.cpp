#include "cams/threshold.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "cams/errors.hpp"
#include "cams/evaluation.hpp"
#include "cams/rng.hpp"

namespace cams {

std::vector<LabeledPair> label_pairs(const PairWeightMap& weights, const GroundTruth& truth) {
    std::vector<LabeledPair> pairs;
    pairs.reserve(weights.size());
    for (const auto& [pair, weight] : weights) {
        const auto x = truth.find(pair.first);
        if (x == truth.end()) throw DataError("no ground-truth entry for '" + pair.first + "'");
        const auto y = truth.find(pair.second);
        if (y == truth.end()) throw DataError("no ground-truth entry for '" + pair.second + "'");
        pairs.push_back(LabeledPair{pair.first, pair.second, weight,
                                    levenshtein(x->second, y->second) == 0});
    }
    return pairs;
}

double svm_threshold(const std::vector<LabeledPair>& pairs) {
    // Distinct weights with per-class counts.
    std::vector<std::pair<std::int64_t, bool>> points;
    points.reserve(pairs.size());
    std::size_t num_pos = 0;
    for (const LabeledPair& p : pairs) {
        points.emplace_back(p.weight, p.label);
        num_pos += p.label ? 1 : 0;
    }
    if (points.empty() || num_pos == 0 || num_pos == points.size())
        throw DataError(
            "threshold training needs both same-peptide and different-peptide pairs; "
            "use a fixed threshold instead");

    std::sort(points.begin(), points.end());
    std::vector<std::int64_t> distinct;
    std::vector<std::size_t> pos_at, neg_at;
    for (const auto& [w, label] : points) {
        if (distinct.empty() || distinct.back() != w) {
            distinct.push_back(w);
            pos_at.push_back(0);
            neg_at.push_back(0);
        }
        ++(label ? pos_at.back() : neg_at.back());
    }

    // pos_below[i]: positives with weight <= distinct[i];
    // neg_from[i]: negatives with weight >= distinct[i].
    const std::size_t m = distinct.size();
    std::vector<std::size_t> pos_below(m), neg_from(m);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < m; ++i) pos_below[i] = (acc += pos_at[i]);
    acc = 0;
    for (std::size_t i = m; i-- > 0;) neg_from[i] = (acc += neg_at[i]);

    struct Candidate {
        double cut;
        std::size_t errors;
        double margin;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double cut = (static_cast<double>(distinct[i]) + distinct[i + 1]) / 2.0;
        const std::size_t errors = pos_below[i] + neg_from[i + 1];
        candidates.push_back({cut, errors, (distinct[i + 1] - distinct[i]) / 2.0});
    }
    if (candidates.empty()) {
        // Both classes share one weight value; either side of it loses a class.
        const double w = static_cast<double>(distinct[0]);
        if (w - 0.5 > 0.0) candidates.push_back({w - 0.5, neg_from[0], 0.5});
        candidates.push_back({w + 0.5, pos_below[0], 0.5});
    }

    const Candidate best = *std::min_element(
        candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            if (a.errors != b.errors) return a.errors < b.errors;
            if (a.margin != b.margin) return a.margin > b.margin;
            return a.cut < b.cut;
        });
    return best.cut;
}

double fixed_threshold(double zeta) {
    if (!(zeta > 0.0)) throw std::invalid_argument("zeta must be > 0");
    return zeta;
}

double train_threshold(const PairWeightMap& weights,
                       const std::vector<std::string>& ids,
                       const GroundTruth& truth,
                       double sample_fraction,
                       std::uint64_t seed) {
    if (!(sample_fraction > 0.0) || sample_fraction > 1.0)
        throw std::invalid_argument("sample_fraction must be in (0, 1]");

    std::vector<std::string> labeled;
    labeled.reserve(ids.size());
    for (const std::string& id : ids)
        if (truth.count(id)) labeled.push_back(id);
    std::sort(labeled.begin(), labeled.end());
    const std::size_t n = labeled.size();
    if (n < 2) throw DataError("threshold training needs at least two labeled spectra");

    const auto add_pair = [&](std::size_t i, std::size_t j, std::vector<LabeledPair>& out) {
        const std::string& a = labeled[i];
        const std::string& b = labeled[j];
        const PairKey key = a < b ? PairKey{a, b} : PairKey{b, a};
        const auto it = weights.find(key);
        const std::int64_t w = it == weights.end() ? 0 : it->second;
        out.push_back(LabeledPair{key.first, key.second, w,
                                  levenshtein(truth.at(a), truth.at(b)) == 0});
    };

    std::vector<LabeledPair> sample;
    Rng rng(seed, 0x7261696eULL);
    const double total_pairs = static_cast<double>(n) * (n - 1) / 2.0;
    if (total_pairs <= 8e6) {
        sample.reserve(static_cast<std::size_t>(total_pairs * sample_fraction * 1.1) + 16);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.uniform() < sample_fraction) add_pair(i, j, sample);
    } else {
        // Too many pairs to enumerate; draw a capped number at random.
        const auto target = static_cast<std::size_t>(
            std::min(1e6, total_pairs * sample_fraction));
        sample.reserve(target);
        while (sample.size() < target) {
            const std::size_t i = rng.below(n);
            const std::size_t j = rng.below(n);
            if (i == j) continue;
            add_pair(std::min(i, j), std::max(i, j), sample);
        }
    }
    if (sample.empty()) throw DataError("threshold training sample is empty");
    return svm_threshold(sample);
}

}  // namespace cams
