#include "probemr/rank_witness.hpp"

#include <stdexcept>

namespace probemr {

std::string to_string(BoundSource s) {
    switch (s) {
        case BoundSource::Forcing: return "forcing";
        case BoundSource::Pattern: return "pattern";
        case BoundSource::Witness: return "witness";
        case BoundSource::Characterization: return "characterization";
        case BoundSource::QConstruction: return "q-construction";
        case BoundSource::Trivial: return "trivial";
    }
    return "?";
}

Realization::Realization(RationalMatrix top, const ProbeGraph& pg) : topblock(std::move(top)) {
    probe_count = pg.order() - static_cast<int>(pg.nonprobes.size());
    if (topblock.rows() != probe_count || topblock.cols() != pg.order())
        throw std::invalid_argument("realization top block has wrong dimensions");
    if (!matches_pattern(topblock, probe_pattern(pg)))
        throw std::invalid_argument("realization does not match the probe pattern");
    if (!probe_block().is_symmetric())
        throw std::invalid_argument("probe-probe block must be symmetric");
}

RationalMatrix Realization::probe_block() const {
    std::vector<int> rows(probe_count), cols(probe_count);
    for (int i = 0; i < probe_count; ++i) rows[i] = cols[i] = i;
    return topblock.submatrix(rows, cols);
}

RationalMatrix Realization::nonprobe_block() const {
    std::vector<int> rows(probe_count);
    for (int i = 0; i < probe_count; ++i) rows[i] = i;
    std::vector<int> cols;
    for (int j = probe_count; j < topblock.cols(); ++j) cols.push_back(j);
    return topblock.submatrix(rows, cols);
}

RationalMatrix full_rank_probe_block(const ProbeGraph& pg) {
    std::vector<int> probes = pg.probes();
    const int p = static_cast<int>(probes.size());
    RationalMatrix a0(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j && pg.graph.has_edge(probes[i], probes[j])) a0(i, j) = 1;
    // det(a0 + tI) has at most p roots; the smallest positive integer works
    for (long t = 1; t <= p + 1; ++t) {
        RationalMatrix a = a0;
        for (int i = 0; i < p; ++i) a(i, i) = t;
        if (rank(a) == p) return a;
    }
    throw std::logic_error("no nonsingular translation found");
}

RationalMatrix nullity_witness(const ProbeGraph& pg) {
    const int n = pg.order();
    const int k = static_cast<int>(pg.nonprobes.size());
    const int p = n - k;
    std::vector<int> order = pg.reindex_nonprobes_last();

    RationalMatrix a = full_rank_probe_block(pg);
    RationalMatrix b(p, k);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < k; ++j)
            if (pg.graph.has_edge(order[i], order[p + j])) b(i, j) = 1;
    auto d = solve(a, b);
    if (!d) throw std::logic_error("full-rank block must be solvable");
    RationalMatrix ad = a * *d;
    RationalMatrix c = d->transpose() * ad;
    RationalMatrix m = RationalMatrix::block2x2(a, ad, ad.transpose(), c);

    // back to original vertex labels
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) inverse[order[i]] = i;
    return m.permuted_symmetric(inverse);
}

RationalMatrix construct_Q(const ProbeGraph& pg, const Realization& real) {
    if (!matches_pattern(real.topblock, probe_pattern(pg)))
        throw std::invalid_argument("realization does not match this probe graph");
    RationalMatrix a = real.probe_block();
    RationalMatrix b = real.nonprobe_block();
    auto [b_para, b_perp] = projection_split(a, b);
    auto c = solve(a, b_para);
    if (!c) throw std::logic_error("projected block must lie in the column space");
    RationalMatrix rtr = symmetric_same_rowspace(b_perp);
    auto dt = solve(rtr, b_perp.transpose());
    if (!dt) throw std::logic_error("rows of the orthogonal part must lie in the row space");
    RationalMatrix d = dt->transpose();
    // bottom-right block making Q symmetric with the given top rows and
    // rank(Q) = rank(diag(A - D R^T R D^T, R^T R))
    RationalMatrix q22 = rtr + c->transpose() * a * *c + rtr * dt->operator*(*c) +
                         c->transpose() * (d * rtr);
    return RationalMatrix::block2x2(a, b, b.transpose(), q22);
}

RankInterval sandwich_bounds(const ProbeGraph& pg, const Realization& real) {
    if (!matches_pattern(real.topblock, probe_pattern(pg)))
        throw std::invalid_argument("realization does not match this probe graph");
    RationalMatrix a = real.probe_block();
    RationalMatrix b = real.nonprobe_block();
    auto split = projection_split(a, b);
    int ra = rank(a);
    int rperp = rank(split.second);
    return RankInterval{ra + rperp, ra + 2 * rperp, BoundSource::Pattern,
                        BoundSource::QConstruction};
}

Realization random_realization(const ProbeGraph& pg, std::mt19937& rng) {
    const int n = pg.order();
    const int k = static_cast<int>(pg.nonprobes.size());
    const int p = n - k;
    std::vector<int> order = pg.reindex_nonprobes_last();
    std::uniform_int_distribution<int> odd(0, 4);
    std::uniform_int_distribution<int> diag(-2, 2);
    RationalMatrix top(p, n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            if (order[i] == order[j]) {
                top(i, j) = diag(rng);
            } else if (pg.graph.has_edge(order[i], order[j])) {
                int v = 2 * odd(rng) + 1;
                top(i, j) = (diag(rng) < 0) ? -v : v;
            }
        }
    // symmetrize the probe-probe block
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) top(j, i) = top(i, j);
    return Realization(std::move(top), pg);
}

namespace {

// rank >= 2 is certified by a 2x2 subpattern whose determinant cannot vanish:
// two Stars in one diagonal against Zeros in the other.
int pattern_rank_lower_bound(const PatternMatrix& p) {
    bool any_star = false;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (p(i, j) == PatternEntry::Star) any_star = true;
    if (!any_star) return 0;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = i + 1; j < p.rows(); ++j)
            for (int a = 0; a < p.cols(); ++a)
                for (int b = 0; b < p.cols(); ++b) {
                    if (a == b) continue;
                    if (p(i, a) == PatternEntry::Star && p(j, b) == PatternEntry::Star &&
                        p(i, b) == PatternEntry::Zero && p(j, a) == PatternEntry::Zero)
                        return 2;
                }
    return 1;
}

} // namespace

std::optional<PatternRankResult> minimize_pattern_rank(const ProbeGraph& pg, int max_candidates) {
    const int n = pg.order();
    const int k = static_cast<int>(pg.nonprobes.size());
    const int p = n - k;
    PatternMatrix pattern = probe_pattern(pg);
    int lower = pattern_rank_lower_bound(pattern);

    if (lower == 0) {
        RationalMatrix zero(p, n);
        if (matches_pattern(zero, pattern))
            return PatternRankResult{Realization(zero, pg), 0, true};
    }
    std::mt19937 rng(20240229);
    std::uniform_int_distribution<int> small(-2, 2);
    int budget = max_candidates;
    for (int r = std::max(lower, 1); r <= p && budget > 0; ++r) {
        // top = F^T W [F | G] with F (r x p), G (r x k), W symmetric (r x r):
        // the probe block F^T W F is symmetric with rank <= r
        for (int tries = 0; tries < max_candidates / 4 && budget > 0; ++tries, --budget) {
            RationalMatrix f(r, p), g(r, k), w(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < p; ++j) f(i, j) = small(rng);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < k; ++j) g(i, j) = small(rng);
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j) w(i, j) = w(j, i) = small(rng);
            RationalMatrix fw = f.transpose() * w;
            RationalMatrix top(p, n);
            RationalMatrix left = fw * f, right = fw * g;
            for (int i = 0; i < p; ++i) {
                for (int j = 0; j < p; ++j) top(i, j) = left(i, j);
                for (int j = 0; j < k; ++j) top(i, p + j) = right(i, j);
            }
            if (!matches_pattern(top, pattern)) continue;
            int got = rank(top);
            if (got > r) continue;
            return PatternRankResult{Realization(std::move(top), pg), got, got <= lower};
        }
    }
    return std::nullopt;
}

} // namespace probemr
