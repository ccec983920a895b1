#pragma once

#include <string>
#include <vector>

#include "cams/fset.hpp"
#include "cams/types.hpp"

namespace cams {

/// Sparse weighted undirected graph over spectra. An absent pair means
/// weight 0; stored edges always carry weight >= 1 and no self-loops.
struct SpectrumGraph {
    std::vector<std::string> vertices;
    PairWeightMap edges;
};

/// vertices = ids; edges = every pair with weight >= 1. An edge naming
/// an id outside `ids`, or a self-pair, is an argument error.
SpectrumGraph build_graph(const PairWeightMap& weights, std::vector<std::string> ids);

/// New graph keeping exactly the edges with weight >= zeta ("below the
/// threshold" is strict, so an edge at exactly zeta survives).
SpectrumGraph apply_threshold(const SpectrumGraph& graph, double zeta);

/// Maximal connected vertex sets, isolated vertices as singletons.
/// Union-find, O(V + E); output in normalized cluster order.
Clustering connected_components(const SpectrumGraph& graph);

}  // namespace cams
