#include <doctest.h>

#include <algorithm>
#include <set>

#include "cams/fset.hpp"
#include "cams/rng.hpp"
#include "oracles.hpp"

using namespace cams;

namespace {

// Random strictly ascending bins in [0, universe).
std::vector<Bin> random_bins(Rng& rng, std::size_t count, std::int64_t universe) {
    std::set<Bin> bins;
    while (bins.size() < count) bins.insert(static_cast<Bin>(rng.below(universe)));
    return {bins.begin(), bins.end()};
}

std::vector<FsetVector> random_vectors(Rng& rng, std::size_t n, int f,
                                       std::size_t max_bins, std::int64_t universe) {
    std::vector<FsetVector> vectors;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t count = 1 + rng.below(max_bins);
        vectors.push_back(enumerate_fsets(
            BinnedSpectrum{"v" + std::to_string(i), random_bins(rng, count, universe)}, f));
    }
    return vectors;
}

}  // namespace

TEST_SUITE("fset") {

TEST_CASE("preprocess bins by floor of mz over bin width") {
    const Spectrum s = make_spectrum("s", 500.0, std::nullopt, {{500.24, 10.0}});
    const BinnedSpectrum b = preprocess(s, PreprocessConfig{});
    CHECK(b.bins == std::vector<Bin>{1000});
}

TEST_CASE("preprocess collapses peaks that share a bin") {
    const Spectrum s = make_spectrum("s", 500.0, std::nullopt, {{100.1, 1.0}, {100.3, 2.0}});
    const BinnedSpectrum b = preprocess(s, PreprocessConfig{});
    CHECK(b.bins == std::vector<Bin>{200});
}

TEST_CASE("preprocess keeps the top-k peaks by intensity") {
    std::vector<Peak> peaks;
    for (int i = 0; i < 60; ++i)
        peaks.push_back({100.0 + 10.0 * i, static_cast<double>(i + 1)});
    const Spectrum s = make_spectrum("s", 500.0, std::nullopt, std::move(peaks));
    PreprocessConfig config;  // top_k = 50
    const BinnedSpectrum b = preprocess(s, config);
    REQUIRE(b.bins.size() == 50);
    // The 10 weakest peaks sit at the lowest m/z values and must be gone.
    CHECK(b.bins.front() == static_cast<Bin>(std::floor((100.0 + 10.0 * 10) / 0.5)));
}

TEST_CASE("preprocess intensity ties prefer the lower m/z peak") {
    const Spectrum s = make_spectrum("s", 500.0, std::nullopt, {{100.0, 5.0}, {200.0, 5.0}});
    PreprocessConfig config;
    config.top_k = 1;
    CHECK(preprocess(s, config).bins == std::vector<Bin>{200});
}

TEST_CASE("preprocess drops peaks below min_mz, possibly all of them") {
    const Spectrum s = make_spectrum("s", 500.0, std::nullopt, {{100.0, 5.0}, {200.0, 5.0}});
    PreprocessConfig config;
    config.min_mz = 150.0;
    CHECK(preprocess(s, config).bins == std::vector<Bin>{400});
    config.min_mz = 500.0;
    CHECK(preprocess(s, config).bins.empty());
}

TEST_CASE("preprocess validates its config") {
    const Spectrum s = make_spectrum("s", 500.0, std::nullopt, {{100.0, 5.0}});
    PreprocessConfig config;
    config.bin_width = 0.0;
    CHECK_THROWS_AS(preprocess(s, config), std::invalid_argument);
    config = PreprocessConfig{};
    config.top_k = 0;
    CHECK_THROWS_AS(preprocess(s, config), std::invalid_argument);
}

TEST_CASE("enumerate_fsets unrolls sliding windows") {
    const FsetVector v = enumerate_fsets(BinnedSpectrum{"s", {1, 2, 3, 4}}, 2);
    CHECK(v.grams() == std::vector<Gram>{{1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("enumerate_fsets with too few bins gives no grams") {
    const FsetVector v = enumerate_fsets(BinnedSpectrum{"s", {1, 2, 3}}, 4);
    CHECK(v.gram_count() == 0);
    CHECK(v.grams().empty());
}

TEST_CASE("enumerate_fsets window count and first window") {
    const FsetVector v = enumerate_fsets(BinnedSpectrum{"s", {10, 20, 30, 40, 50}}, 3);
    REQUIRE(v.gram_count() == 3);
    CHECK(v.gram(0) == Gram{10, 20, 30});
}

TEST_CASE("enumerate_fsets rejects f below 2") {
    CHECK_THROWS_AS(enumerate_fsets(BinnedSpectrum{"s", {1, 2}}, 1), std::invalid_argument);
}

TEST_CASE("fset_weight counts shared grams") {
    const FsetVector x = enumerate_fsets(BinnedSpectrum{"x", {100, 150, 200, 250}}, 2);
    const FsetVector y = enumerate_fsets(BinnedSpectrum{"y", {100, 150, 200, 300}}, 2);
    CHECK(fset_weight(x, y) == 2);  // (100,150) and (150,200)
    CHECK(oracles::pair_weight(x, y) == 2);
}

TEST_CASE("fset_weight of a vector with itself is its gram count") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = random_vectors(rng, 1, 3, 30, 200)[0];
        CHECK(fset_weight(v, v) == static_cast<std::int64_t>(v.gram_count()));
    }
}

TEST_CASE("fset_weight of disjoint bin sets is zero") {
    const FsetVector x = enumerate_fsets(BinnedSpectrum{"x", {1, 2, 3}}, 2);
    const FsetVector y = enumerate_fsets(BinnedSpectrum{"y", {10, 20, 30}}, 2);
    CHECK(fset_weight(x, y) == 0);
}

TEST_CASE("fset_weight rejects mismatched f") {
    const FsetVector x = enumerate_fsets(BinnedSpectrum{"x", {1, 2, 3}}, 2);
    const FsetVector y = enumerate_fsets(BinnedSpectrum{"y", {1, 2, 3}}, 3);
    CHECK_THROWS_AS(fset_weight(x, y), std::invalid_argument);
}

TEST_CASE("fset_weight is symmetric, bounded, and matches the double sum") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int f = 2 + static_cast<int>(rng.below(4));
        const auto v = random_vectors(rng, 2, f, 25, 60);  // small universe forces overlap
        const std::int64_t w = fset_weight(v[0], v[1]);
        CHECK(w == fset_weight(v[1], v[0]));
        CHECK(w <= static_cast<std::int64_t>(std::min(v[0].gram_count(), v[1].gram_count())));
        CHECK(w == oracles::pair_weight(v[0], v[1]));
    }
}

TEST_CASE("increasing f never increases the weight") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto bins_a = random_bins(rng, 20, 80);
        const auto bins_b = random_bins(rng, 20, 80);
        for (int f = 2; f < 6; ++f) {
            const std::int64_t w_f =
                fset_weight(enumerate_fsets(BinnedSpectrum{"a", bins_a}, f),
                            enumerate_fsets(BinnedSpectrum{"b", bins_b}, f));
            const std::int64_t w_next =
                fset_weight(enumerate_fsets(BinnedSpectrum{"a", bins_a}, f + 1),
                            enumerate_fsets(BinnedSpectrum{"b", bins_b}, f + 1));
            CHECK(w_next <= w_f);
        }
    }
}

TEST_CASE("build_index posting lists hold the containing ids in order") {
    const std::vector<FsetVector> vectors = {
        enumerate_fsets(BinnedSpectrum{"a", {1, 2, 9}}, 2),
        enumerate_fsets(BinnedSpectrum{"b", {1, 2, 7}}, 2),
    };
    const FsetIndex index = build_index(vectors);
    CHECK(index.posting_ids({1, 2}) == std::vector<std::string>{"a", "b"});
    CHECK(index.posting_ids({2, 9}) == std::vector<std::string>{"a"});
    CHECK(index.posting_ids({5, 6}).empty());
}

TEST_CASE("build_index ignores vectors with zero grams") {
    const std::vector<FsetVector> vectors = {
        enumerate_fsets(BinnedSpectrum{"a", {1}}, 2),
        enumerate_fsets(BinnedSpectrum{"b", {1, 2}}, 2),
    };
    const FsetIndex index = build_index(vectors);
    CHECK(index.num_grams() == 1);
    CHECK(index.posting_ids({1, 2}) == std::vector<std::string>{"b"});
}

TEST_CASE("build_index with disjoint grams gives singleton postings") {
    Rng rng(5);
    std::vector<FsetVector> vectors;
    for (int i = 0; i < 8; ++i) {
        const Bin base = 1000 * i;
        vectors.push_back(enumerate_fsets(
            BinnedSpectrum{"v" + std::to_string(i), {base, base + 1, base + 2}}, 2));
    }
    const FsetIndex index = build_index(vectors);
    for (const auto& v : vectors)
        for (const auto& g : v.grams()) CHECK(index.posting_ids(g).size() == 1);
    CHECK(all_pair_weights(index).empty());
}

TEST_CASE("build_index rejects mixed f and duplicate ids") {
    CHECK_THROWS_AS(build_index({enumerate_fsets(BinnedSpectrum{"a", {1, 2}}, 2),
                                 enumerate_fsets(BinnedSpectrum{"b", {1, 2, 3}}, 3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_index({enumerate_fsets(BinnedSpectrum{"a", {1, 2}}, 2),
                                 enumerate_fsets(BinnedSpectrum{"a", {2, 3}}, 2)}),
                    std::invalid_argument);
}

TEST_CASE("all_pair_weights finds exactly the sharing pairs") {
    const std::vector<FsetVector> vectors = {
        enumerate_fsets(BinnedSpectrum{"a", {1, 2, 3}}, 2),
        enumerate_fsets(BinnedSpectrum{"b", {1, 2, 3, 10}}, 2),
        enumerate_fsets(BinnedSpectrum{"c", {20, 21, 22}}, 2),
    };
    const PairWeightMap weights = all_pair_weights(build_index(vectors));
    const PairWeightMap expected = {{{"a", "b"}, 2}};
    CHECK(weights == expected);
    CHECK(weights == oracles::all_weights(vectors));
}

TEST_CASE("all identical vectors pair up with full weight") {
    std::vector<FsetVector> vectors;
    for (int i = 0; i < 5; ++i)
        vectors.push_back(enumerate_fsets(
            BinnedSpectrum{"v" + std::to_string(i), {1, 2, 3, 4, 5}}, 2));
    const PairWeightMap weights = all_pair_weights(build_index(vectors));
    CHECK(weights.size() == 10);  // C(5,2)
    for (const auto& [pair, w] : weights) CHECK(w == 4);
}

TEST_CASE("all_pair_weights of an empty index is empty") {
    CHECK(all_pair_weights(build_index({})).empty());
}

TEST_CASE("all_pair_weights equals the brute-force double loop") {
    Rng rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        const int f = trial % 2 == 0 ? 2 : 3;
        const std::size_t n = 2 + rng.below(60);
        const auto vectors = random_vectors(rng, n, f, 20, 50);
        const auto indexed = all_pair_weights(build_index(vectors));
        CHECK(indexed == oracles::all_weights(vectors));
    }
}

TEST_CASE("all_pair_weights is independent of the worker count") {
    Rng rng(77);
    const auto vectors = random_vectors(rng, 80, 2, 20, 40);
    const FsetIndex index = build_index(vectors);
    const auto w1 = all_pair_weights(index, 1);
    const auto w4 = all_pair_weights(index, 4);
    CHECK(w1 == w4);
}

}  // TEST_SUITE
