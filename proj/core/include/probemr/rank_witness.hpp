#ifndef PROBEMR_RANK_WITNESS_HPP
#define PROBEMR_RANK_WITNESS_HPP

#include <optional>
#include <random>
#include <string>

#include "probemr/graph.hpp"
#include "probemr/matrix.hpp"

namespace probemr {

enum class BoundSource { Forcing, Pattern, Witness, Characterization, QConstruction, Trivial };

std::string to_string(BoundSource s);

struct RankInterval {
    int lower = 0;
    int upper = 0;
    BoundSource lower_source = BoundSource::Trivial;
    BoundSource upper_source = BoundSource::Trivial;
};

// Probe-rows realization [A | B] in the reindexed order (non-probes last).
// A is the symmetric probe-probe block, B the probe-nonprobe block.
struct Realization {
    RationalMatrix topblock;
    int probe_count = 0;

    Realization(RationalMatrix top, const ProbeGraph& pg);

    RationalMatrix probe_block() const;    // A, (n-k) x (n-k)
    RationalMatrix nonprobe_block() const; // B, (n-k) x k
};

// A full-rank matrix in S(G[P]) by diagonal translation: adjacency with unit
// off-diagonal entries plus the smallest positive integer multiple of the
// identity that is nonsingular.
RationalMatrix full_rank_probe_block(const ProbeGraph& pg);

// Matrix in S(G^N) with nullity exactly |N|, indexed by original vertex
// labels.
RationalMatrix nullity_witness(const ProbeGraph& pg);

// Symmetric completion of the realization with
// rank(Q) <= rank(A) + 2 rank(B_perp); the probe rows of Q equal [A | B].
// Returned in the reindexed order (non-probes last).
RationalMatrix construct_Q(const ProbeGraph& pg, const Realization& real);

// [rank(A) + rank(B_perp), rank(A) + 2 rank(B_perp)]; the lower end is a
// bound on mr(G^N) only when the realization attains the pattern minimum,
// which is the caller's claim - sources record this.
RankInterval sandwich_bounds(const ProbeGraph& pg, const Realization& real);

// Random realization of probe_pattern(pg): small odd off-diagonal entries,
// small diagonal entries.
Realization random_realization(const ProbeGraph& pg, std::mt19937& rng);

struct PatternRankResult {
    Realization realization;
    int rank = 0;
    bool certified = false; // matches a structural lower bound for the pattern
};

// Best-effort minimizer of rank over realizations of probe_pattern(pg):
// factorization search with small integer entries, ranks ascending, capped.
std::optional<PatternRankResult> minimize_pattern_rank(const ProbeGraph& pg,
                                                       int max_candidates = 20000);

struct SpecialGraphCatalog;

// Combined interval on mr(G^N) from the forcing bound, the nullity witness,
// characterization hits, and optionally a realization's sandwich bounds.
RankInterval mr_interval(const ProbeGraph& pg);
RankInterval mr_interval(const ProbeGraph& pg, const std::optional<Realization>& real);
RankInterval mr_interval(const ProbeGraph& pg, const std::optional<Realization>& real,
                         const SpecialGraphCatalog& catalog);

} // namespace probemr

#endif
