#ifndef PROBEMR_OUTERPLANAR_HPP
#define PROBEMR_OUTERPLANAR_HPP

#include <optional>
#include <vector>

#include "probemr/graph.hpp"

namespace probemr {

struct OuterplanarResult {
    bool outerplanar = false;
    // Hamiltonian outer-cycle of g[core], present when outerplanar, the core
    // is non-empty and g[core] is 2-connected. Normalized: lowest label
    // first, lexicographically smaller direction second.
    std::optional<std::vector<int>> outer_cycle;
};

// Structural test: every biconnected component must have a Hamiltonian cycle
// whose chords are pairwise non-crossing. Independent of the minor search
// below; the two are cross-checked exhaustively in the test suite.
OuterplanarResult is_outerplanar(const Graph& g);

// Exhaustive branch-vertex and disjoint-path search for a subdivision of K4
// or K_{2,3} as a subgraph. Desk scale (n <= 12).
bool has_k4_or_k23_topological_minor(const Graph& g);

// Backtracking Hamiltonian cycle search; returns a normalized cycle order.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);

// Biconnected components as vertex masks (components with >= 2 vertices).
std::vector<VertexMask> biconnected_components(const Graph& g);

} // namespace probemr

#endif
