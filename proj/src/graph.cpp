#include "cams/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cams {

SpectrumGraph build_graph(const PairWeightMap& weights, std::vector<std::string> ids) {
    std::unordered_map<std::string, std::uint32_t> known;
    known.reserve(ids.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) known.emplace(ids[i], i);
    if (known.size() != ids.size()) throw std::invalid_argument("duplicate vertex id");

    SpectrumGraph graph;
    graph.vertices = std::move(ids);
    for (const auto& [pair, weight] : weights) {
        if (pair.first == pair.second)
            throw std::invalid_argument("self-edge on '" + pair.first + "'");
        if (!known.count(pair.first) || !known.count(pair.second))
            throw std::invalid_argument("edge references unknown id '" +
                                        (known.count(pair.first) ? pair.second : pair.first) + "'");
        if (weight < 1) continue;  // weight-0 pairs are stored as absences
        graph.edges.emplace(pair.first < pair.second ? pair : PairKey{pair.second, pair.first},
                            weight);
    }
    return graph;
}

SpectrumGraph apply_threshold(const SpectrumGraph& graph, double zeta) {
    if (zeta < 0.0) throw std::invalid_argument("zeta must be >= 0");
    SpectrumGraph out;
    out.vertices = graph.vertices;
    for (const auto& [pair, weight] : graph.edges)
        if (static_cast<double>(weight) >= zeta) out.edges.emplace(pair, weight);
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];  // path halving
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace

Clustering connected_components(const SpectrumGraph& graph) {
    std::unordered_map<std::string, std::size_t> indices;
    indices.reserve(graph.vertices.size());
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        indices.emplace(graph.vertices[i], i);

    UnionFind uf(graph.vertices.size());
    for (const auto& [pair, weight] : graph.edges)
        uf.unite(indices.at(pair.first), indices.at(pair.second));

    std::unordered_map<std::size_t, std::vector<std::string>> by_root;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        by_root[uf.find(i)].push_back(graph.vertices[i]);

    Clustering clusters;
    clusters.reserve(by_root.size());
    for (auto& [root, members] : by_root) clusters.push_back(std::move(members));
    return normalize_clustering(std::move(clusters));
}

}  // namespace cams
