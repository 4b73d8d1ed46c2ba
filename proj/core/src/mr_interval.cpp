#include "probemr/forcing.hpp"
#include "probemr/matrix.hpp"
#include "probemr/mr_classify.hpp"
#include "probemr/rank_witness.hpp"

namespace probemr {

namespace {

void apply_exact(RankInterval& iv, int value) {
    if (value > iv.lower) {
        iv.lower = value;
        iv.lower_source = BoundSource::Characterization;
    }
    if (value < iv.upper) {
        iv.upper = value;
        iv.upper_source = BoundSource::Characterization;
    }
}

} // namespace

RankInterval mr_interval(const ProbeGraph& pg) { return mr_interval(pg, std::nullopt); }

RankInterval mr_interval(const ProbeGraph& pg, const std::optional<Realization>& real) {
    return mr_interval(pg, real, SpecialGraphCatalog::builtin());
}

RankInterval mr_interval(const ProbeGraph& pg, const std::optional<Realization>& real,
                         const SpecialGraphCatalog& catalog) {
    const int n = pg.order();
    RankInterval iv;
    if (n == 0) return iv;
    iv.lower = 0;
    iv.upper = n - 1; // a path realizes rank n-1; nothing needs more
    iv.lower_source = BoundSource::Trivial;
    iv.upper_source = BoundSource::Trivial;

    if (n <= 12) {
        int z = probe_zero_forcing_number(pg).z;
        if (n - z > iv.lower) {
            iv.lower = n - z;
            iv.lower_source = BoundSource::Forcing;
        }
    }
    {
        RationalMatrix witness = nullity_witness(pg);
        int witness_rank = rank(witness);
        if (witness_rank < iv.upper) {
            iv.upper = witness_rank;
            iv.upper_source = BoundSource::Witness;
        }
    }
    if (is_mr0(pg)) apply_exact(iv, 0);
    if (is_mr1(pg)) apply_exact(iv, 1);
    if (pg.nonprobes.size() <= 6 && is_mr_le2(pg) && 2 < iv.upper) {
        iv.upper = 2;
        iv.upper_source = BoundSource::Characterization;
    }
    if (is_mr_nminus1(pg)) apply_exact(iv, n - 1);
    if (n <= 12 && is_mr_nminus2(pg, catalog)) apply_exact(iv, n - 2);

    if (real) {
        RankInterval sandwich = sandwich_bounds(pg, *real);
        if (sandwich.lower > iv.lower) {
            iv.lower = sandwich.lower;
            iv.lower_source = BoundSource::Pattern;
        }
        if (sandwich.upper < iv.upper) {
            iv.upper = sandwich.upper;
            iv.upper_source = BoundSource::QConstruction;
        }
    }
    if (iv.lower > iv.upper) throw std::logic_error("rank interval bounds crossed");
    return iv;
}

} // namespace probemr
