#include "cams/fset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "cams/parallel.hpp"

namespace cams {

Gram FsetVector::gram(std::size_t i) const {
    return Gram(bins.begin() + i, bins.begin() + i + f);
}

std::vector<Gram> FsetVector::grams() const {
    std::vector<Gram> out;
    out.reserve(gram_count());
    for (std::size_t i = 0; i < gram_count(); ++i) out.push_back(gram(i));
    return out;
}

BinnedSpectrum preprocess(const Spectrum& spectrum, const PreprocessConfig& config) {
    if (!(config.bin_width > 0.0)) throw std::invalid_argument("bin_width must be > 0");
    if (config.top_k < 1) throw std::invalid_argument("top_k must be >= 1");

    std::vector<Peak> kept;
    kept.reserve(spectrum.peaks.size());
    for (const Peak& p : spectrum.peaks)
        if (p.mz >= config.min_mz) kept.push_back(p);

    // Top-k by intensity, ties toward lower m/z.
    if (kept.size() > static_cast<std::size_t>(config.top_k)) {
        std::nth_element(kept.begin(), kept.begin() + config.top_k, kept.end(),
                         [](const Peak& a, const Peak& b) {
                             if (a.intensity != b.intensity) return a.intensity > b.intensity;
                             return a.mz < b.mz;
                         });
        kept.resize(config.top_k);
    }

    std::vector<Bin> bins;
    bins.reserve(kept.size());
    for (const Peak& p : kept)
        bins.push_back(static_cast<Bin>(std::floor(p.mz / config.bin_width)));
    std::sort(bins.begin(), bins.end());
    bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
    return BinnedSpectrum{spectrum.id, std::move(bins)};
}

FsetVector enumerate_fsets(const BinnedSpectrum& binned, int f) {
    if (f < 2) throw std::invalid_argument("f-set size must be >= 2");
    return FsetVector{binned.id, f, binned.bins};
}

namespace {

// Lexicographic compare of the windows starting at ia and ib.
int compare_windows(const std::vector<Bin>& a, std::size_t ia,
                    const std::vector<Bin>& b, std::size_t ib, int f) {
    for (int d = 0; d < f; ++d) {
        if (a[ia + d] != b[ib + d]) return a[ia + d] < b[ib + d] ? -1 : 1;
    }
    return 0;
}

}  // namespace

std::int64_t fset_weight(const FsetVector& x, const FsetVector& y) {
    if (x.f != y.f) throw std::invalid_argument("f-set sizes differ");
    // Strictly ascending bins make the window sequence lexicographically
    // increasing, so the intersection is a two-pointer merge.
    const std::size_t nx = x.gram_count(), ny = y.gram_count();
    std::size_t i = 0, j = 0;
    std::int64_t w = 0;
    while (i < nx && j < ny) {
        const int c = compare_windows(x.bins, i, y.bins, j, x.f);
        if (c == 0) {
            ++w;
            ++i;
            ++j;
        } else if (c < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return w;
}

std::size_t GramHash::operator()(const Gram& g) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Bin b : g) {
        h ^= static_cast<std::uint64_t>(b);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

std::vector<std::string> FsetIndex::posting_ids(const Gram& gram) const {
    std::vector<std::string> out;
    const auto it = postings_.find(gram);
    if (it == postings_.end()) return out;
    out.reserve(it->second.size());
    for (std::uint32_t v : it->second) out.push_back(ids_[v]);
    return out;
}

FsetIndex build_index(const std::vector<FsetVector>& vectors) {
    FsetIndex index;
    if (vectors.empty()) return index;

    index.f_ = vectors.front().f;
    std::unordered_set<std::string> seen;
    seen.reserve(vectors.size());
    index.ids_.reserve(vectors.size());
    std::size_t total_grams = 0;
    for (const FsetVector& v : vectors) {
        if (v.f != index.f_) throw std::invalid_argument("mixed f-set sizes in index build");
        if (!seen.insert(v.id).second)
            throw std::invalid_argument("duplicate spectrum id '" + v.id + "'");
        index.ids_.push_back(v.id);
        total_grams += v.gram_count();
    }

    index.postings_.reserve(total_grams);
    Gram key;
    for (std::uint32_t vi = 0; vi < vectors.size(); ++vi) {
        const FsetVector& v = vectors[vi];
        const std::size_t n = v.gram_count();
        for (std::size_t g = 0; g < n; ++g) {
            key.assign(v.bins.begin() + g, v.bins.begin() + g + index.f_);
            auto it = index.postings_.find(key);
            if (it == index.postings_.end())
                it = index.postings_.emplace(key, std::vector<std::uint32_t>{}).first;
            it->second.push_back(vi);
        }
    }
    return index;
}

PairWeightMap all_pair_weights(const FsetIndex& index, int workers) {
    // Snapshot the posting lists that can produce pairs.
    std::vector<const std::vector<std::uint32_t>*> lists;
    lists.reserve(index.postings_.size());
    for (const auto& [gram, list] : index.postings_)
        if (list.size() >= 2) lists.push_back(&list);

    const int w = resolve_workers(workers);
    std::vector<std::unordered_map<std::uint64_t, std::int64_t>> partial(
        static_cast<std::size_t>(w));
    parallel_chunks(lists.size(), w, [&](std::size_t begin, std::size_t end, int worker) {
        auto& acc = partial[static_cast<std::size_t>(worker)];
        for (std::size_t t = begin; t < end; ++t) {
            const auto& list = *lists[t];
            for (std::size_t i = 0; i + 1 < list.size(); ++i)
                for (std::size_t j = i + 1; j < list.size(); ++j) {
                    // Posting lists are in input order, so list[i] < list[j].
                    const std::uint64_t key =
                        (static_cast<std::uint64_t>(list[i]) << 32) | list[j];
                    ++acc[key];
                }
        }
    });

    std::unordered_map<std::uint64_t, std::int64_t> merged;
    std::size_t hint = 0;
    for (const auto& p : partial) hint += p.size();
    merged.reserve(hint);
    for (const auto& p : partial)
        for (const auto& [key, count] : p) merged[key] += count;

    PairWeightMap out;
    for (const auto& [key, count] : merged) {
        const std::string& a = index.ids_[key >> 32];
        const std::string& b = index.ids_[key & 0xffffffffULL];
        out.emplace(a < b ? PairKey{a, b} : PairKey{b, a}, count);
    }
    return out;
}

}  // namespace cams
