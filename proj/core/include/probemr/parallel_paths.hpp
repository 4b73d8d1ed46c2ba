#ifndef PROBEMR_PARALLEL_PATHS_HPP
#define PROBEMR_PARALLEL_PATHS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "probemr/graph.hpp"

namespace probemr {

// Ordered vertex sequences of the two induced paths. Either list may be
// empty (single-vertex and empty graphs).
struct TwoPathsCertificate {
    std::vector<int> path_p;
    std::vector<int> path_q;
};

// Checks the partition, induced-path, and non-crossing conditions directly.
bool certificate_valid(const Graph& g, const TwoPathsCertificate& cert);

// Ground-truth oracle: searches all bipartitions and path orders. n <= 14.
std::optional<TwoPathsCertificate> find_certificate_bruteforce(const Graph& g);

// All unordered partitions {S, V \ S} admitting some valid certificate,
// reported as the side containing vertex 0.
std::vector<VertexMask> bruteforce_partitions(const Graph& g);

// If the vertices induce a path, its order from one endpoint.
std::optional<std::vector<int>> induced_path_order(const Graph& g, VertexMask vertices);

// Forests with at most two components; degree conditions for trees.
bool recognize_tree(const Graph& g);

struct PendantPath {
    std::vector<int> vertices; // ordered from the attachment leaf outward
    int insertion = -1;        // y_i, the core endpoint of the attachment edge
};

struct AlphaInfo {
    int c0 = -1;                     // shared insertion point of two pendants
    std::array<int, 2> at_c0{-1, -1}; // pendant indices attached at c0
    std::optional<int> at_prev;       // pendant index at one cycle-neighbor of c0
    std::optional<int> at_next;       // pendant index at the other neighbor
};

struct CoreStructure {
    std::vector<int> outer_cycle; // c_0 .. c_{r-1}
    std::vector<std::pair<int, int>> interior_edges;
    std::vector<PendantPath> pendants;
    std::vector<VertexMask> induced_cycles;      // all induced cycles of g
    std::vector<VertexMask> one_interior_cycles; // exactly one interior edge
    std::optional<AlphaInfo> alpha;

    VertexMask core_mask() const;
    int cycle_position(int v) const; // -1 when v is not on the outer cycle
    bool cycle_adjacent(int u, int v) const;
    // which pendant contains v, or -1
    int pendant_index(int v) const;
    bool insertion_points_distinct() const;
};

struct CoreOutcome {
    std::optional<CoreStructure> structure;
    std::string rejection; // names the violated condition when empty
};

// Requires g connected with non-empty core; checks outerplanarity itself.
CoreOutcome core_structure(const Graph& g);

// phi maps pendant index -> 0/1 picking one of the two one-interior-edge
// cycles; empty map in the cycle-core cases.
struct PhiAssignment {
    std::map<int, int> phi;
};

std::optional<PhiAssignment> spokes_assignment(const Graph& g, const CoreStructure& cs);

struct RecognitionResult {
    bool is_two_parallel_paths = false;
    std::optional<TwoPathsCertificate> certificate;
    std::optional<CoreStructure> core;
};

RecognitionResult recognize(const Graph& g);

// The recognition conditions without certificate assembly: trees by the
// degree conditions, cyclic graphs by the core structure conditions.
bool meets_structure_conditions(const Graph& g);

// Number of outer-cycle edges on a shortest x-y path avoiding interior
// edges; pendant-path edges traverse freely.
int dstar(const Graph& g, const CoreStructure& cs, int x, int y);

// Decides membership of G + xy (N = {x, y}) in the two-parallel-paths class
// by the structural case analysis, never by brute force on G + xy.
bool gplus_is_two_parallel_paths(const ProbeGraph& pg);

} // namespace probemr

#endif
