#ifndef PROBEMR_MATRIX_HPP
#define PROBEMR_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "probemr/rational.hpp"

namespace probemr {

class Graph;
struct ProbeGraph;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static RationalMatrix identity(int n);
    static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

    bool is_symmetric() const;
    bool is_zero() const;

    // Rows and columns picked by index lists, in the given order.
    RationalMatrix submatrix(const std::vector<int>& row_ids,
                             const std::vector<int>& col_ids) const;

    // [[a, b], [c, d]] with consistent block dimensions.
    static RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b,
                                   const RationalMatrix& c, const RationalMatrix& d);

    // Applies the same permutation to rows and columns: result(i,j) = (*this)(perm[i], perm[j]).
    RationalMatrix permuted_symmetric(const std::vector<int>& perm) const;

    // Text format: first line "rows cols", then row-major "p/q" tokens.
    std::string to_text() const;
    static RationalMatrix from_text(const std::string& text);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

enum class PatternEntry { Zero, Star, Any };

class PatternMatrix {
public:
    PatternMatrix() = default;
    PatternMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * cols, PatternEntry::Zero) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    PatternEntry& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    PatternEntry operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    bool operator==(const PatternMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<PatternEntry> data_;
};

// Exact rank over the rationals, fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank(const RationalMatrix& m);

// cols - rank, square matrices only.
int nullity(const RationalMatrix& m);

// Least X with a*X = b column-space-wise: some X with a*X = b when every
// column of b lies in the column space of a, std::nullopt otherwise.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

// Reduced row echelon form; returns pivot column indices.
std::vector<int> rref_inplace(RationalMatrix& m);

// Rows form a rational basis of the row space of m.
RationalMatrix row_space_basis(const RationalMatrix& m);

// Splits b into (b_para, b_perp): b_para columns lie in col-space(a),
// a^T * b_perp = 0, b_para + b_perp = b. Exact orthogonal projection via
// the normal equations.
std::pair<RationalMatrix, RationalMatrix> projection_split(const RationalMatrix& a,
                                                           const RationalMatrix& b);

// Symmetric m x m matrix R^T R with the same row space (and rank) as b,
// where R is a rational basis of b's row space.
RationalMatrix symmetric_same_rowspace(const RationalMatrix& b);

// n x n pattern of S(G): diagonal Any, Star on edges, Zero elsewhere.
PatternMatrix graph_pattern(const Graph& g);

// (n-k) x n probe-rows pattern, vertices reindexed so the k non-probes come
// last (columns and the probe rows follow that order).
PatternMatrix probe_pattern(const ProbeGraph& pg);

// Zero positions exactly zero, Star positions nonzero, Any unconstrained.
bool matches_pattern(const RationalMatrix& m, const PatternMatrix& p);

// Membership in S(G^N): symmetric, off-diagonal entries follow the edge
// pattern except inside N x N, which is free. m is indexed by vertex label.
bool in_S_probe(const RationalMatrix& m, const ProbeGraph& pg);

} // namespace probemr

#endif
