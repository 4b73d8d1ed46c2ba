#ifndef PROBEMR_MR_CLASSIFY_HPP
#define PROBEMR_MR_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "probemr/graph.hpp"
#include "probemr/rank_witness.hpp"

namespace probemr {

// Catalog of the exceptional extreme-minimum-rank graph types. Data, not
// code: entries are loaded from JSON and may describe a fixed graph or a
// subdivision-closed family (base graph plus subdividable edges). Labeled
// vertices carry the names the transition table below uses ("b", "d", "e").
struct SpecialGraphEntry {
    std::string name;
    Graph base;
    std::map<std::string, int> labels;
    std::vector<std::pair<int, int>> subdividable;
};

struct SpecialGraphCatalog {
    std::string version;
    std::vector<SpecialGraphEntry> entries;

    bool transcribed() const { return !entries.empty(); }

    // Compiled-in default: versioned and empty until exceptional types are
    // transcribed into data/special_graphs.json.
    static const SpecialGraphCatalog& builtin();
    static SpecialGraphCatalog from_json(const std::string& text);
    static SpecialGraphCatalog from_file(const std::string& path);
};

struct SpecialMatch {
    int entry_index = -1;
    std::string name;
    std::map<std::string, int> label_to_vertex;
};

// Isomorphism (respecting subdivision families) of g against each catalog
// entry; `required` constrains a set of labels to land on a given vertex set.
std::optional<SpecialMatch> special_graph_match(
    const Graph& g, const SpecialGraphCatalog& catalog,
    const std::optional<std::pair<std::vector<std::string>, VertexMask>>& required =
        std::nullopt);

enum class MrVerdict { Zero, One, AtMostTwo, ExactlyNMinus2, ExactlyNMinus1, Unresolved };

std::string to_string(MrVerdict v);

struct Mr1Certificate {
    int a = 0, b = 0, c = 0;
    std::vector<int> clique_side, independent_side, isolated;
};

struct ComplementFormDecomposition {
    std::vector<int> joined_clique; // the K_r part of the complement
    std::vector<std::vector<int>> clique_components;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> bipartite_components;
};

struct MrClassification {
    MrVerdict verdict = MrVerdict::Unresolved;
    std::optional<int> value; // pinned exact value when the verdict is exact
    RankInterval interval;
    std::optional<Mr1Certificate> one_certificate;
    std::optional<std::vector<std::pair<int, int>>> le2_added_edges;
    std::optional<ComplementFormDecomposition> le2_decomposition;
    std::optional<int> nminus2_case;
    std::optional<SpecialMatch> special;
};

bool is_mr0(const ProbeGraph& pg);

std::optional<Mr1Certificate> is_mr1(const ProbeGraph& pg);

std::optional<ComplementFormDecomposition> complement_form_recognizer(const Graph& g);

struct Le2Result {
    std::vector<std::pair<int, int>> added_edges;
    ComplementFormDecomposition decomposition;
};
std::optional<Le2Result> is_mr_le2(const ProbeGraph& pg);

bool is_mr_nminus1(const ProbeGraph& pg);

struct NMinus2Result {
    int case_tag = 0; // 1..4 following the characterization's case split
    std::optional<SpecialMatch> special;
};
std::optional<NMinus2Result> is_mr_nminus2(
    const ProbeGraph& pg, const SpecialGraphCatalog& catalog = SpecialGraphCatalog::builtin());

MrClassification classify(const ProbeGraph& pg,
                          const SpecialGraphCatalog& catalog = SpecialGraphCatalog::builtin());

// Combinatorial validation of a transcribed catalog: for every entry and
// every nonadjacent vertex pair, adding that edge must land back in the
// catalog or in the two-parallel-paths class exactly for the built-in
// transitions (S2+{b,e} to S1, S3+{b,d} to S2, S5+{b,e} to S4). Returns
// human-readable violation lines; empty means consistent. Vacuous on an
// empty catalog.
std::vector<std::string> validate_catalog_transitions(const SpecialGraphCatalog& catalog);

// {graph6, N, verdict, certificate, interval, provenance} for the CLI.
std::string classification_to_json(const ProbeGraph& pg, const MrClassification& c);

} // namespace probemr

#endif
