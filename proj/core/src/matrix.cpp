#include "probemr/matrix.hpp"

#include <sstream>

#include "probemr/graph.hpp"

namespace probemr {

Rational parse_token(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        return Rational(BigInt(tok));
    }
    BigInt num(tok.substr(0, slash));
    BigInt den(tok.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational token");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j) == 0) continue;
                out(i, j) += a * rhs(k, j);
            }
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j) + rhs(i, j);
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
    return out;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& row_ids,
                                         const std::vector<int>& col_ids) const {
    RationalMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (size_t i = 0; i < row_ids.size(); ++i)
        for (size_t j = 0; j < col_ids.size(); ++j)
            out(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_ids[i], col_ids[j]);
    return out;
}

RationalMatrix RationalMatrix::block2x2(const RationalMatrix& a, const RationalMatrix& b,
                                        const RationalMatrix& c, const RationalMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw std::invalid_argument("inconsistent block dimensions");
    RationalMatrix out(a.rows() + c.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) out(a.rows() + i, j) = c(i, j);
        for (int j = 0; j < d.cols(); ++j) out(a.rows() + i, a.cols() + j) = d(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::permuted_symmetric(const std::vector<int>& perm) const {
    if (rows_ != cols_ || static_cast<int>(perm.size()) != rows_)
        throw std::invalid_argument("permutation size mismatch");
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
    return out;
}

std::string RationalMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << " " << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << to_token((*this)(i, j));
        }
        os << "\n";
    }
    return os.str();
}

RationalMatrix RationalMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    int rows = -1, cols = -1;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix text: bad dimension line");
    RationalMatrix m(rows, cols);
    std::string tok;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!(is >> tok)) throw std::invalid_argument("matrix text: missing entries");
            m(i, j) = parse_token(tok);
        }
    if (is >> tok) throw std::invalid_argument("matrix text: trailing data");
    return m;
}

namespace {

// Clears denominators row by row; row scaling preserves rank.
std::vector<std::vector<BigInt>> integerized(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            BigInt den = m(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            rows[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

} // namespace

int rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = integerized(m);
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                BigInt t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

int nullity(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nullity requires a square matrix");
    return m.cols() - rank(m);
}

std::vector<int> rref_inplace(RationalMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        Rational inv = m(r, col);
        for (int j = col; j < m.cols(); ++j) m(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    RationalMatrix aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    std::vector<int> pivots = rref_inplace(aug);
    for (int p : pivots)
        if (p >= a.cols()) return std::nullopt; // inconsistent row 0..0 | nonzero
    RationalMatrix x(a.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
    return x;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
    RationalMatrix r = m;
    std::vector<int> pivots = rref_inplace(r);
    RationalMatrix basis(static_cast<int>(pivots.size()), m.cols());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) basis(i, j) = r(i, j);
    return basis;
}

std::pair<RationalMatrix, RationalMatrix> projection_split(const RationalMatrix& a,
                                                           const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("projection_split: row count mismatch");
    RationalMatrix at = a.transpose();
    // (a^T a) x = a^T b is always consistent; a*x is the orthogonal projection.
    auto x = solve(at * a, at * b);
    if (!x) throw std::logic_error("normal equations inconsistent");
    RationalMatrix b_para = a * *x;
    RationalMatrix b_perp = b - b_para;
    return {std::move(b_para), std::move(b_perp)};
}

RationalMatrix symmetric_same_rowspace(const RationalMatrix& b) {
    RationalMatrix r = row_space_basis(b);
    return r.transpose() * r;
}

PatternMatrix graph_pattern(const Graph& g) {
    const int n = g.order();
    PatternMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                p(i, j) = PatternEntry::Any;
            else
                p(i, j) = g.has_edge(i, j) ? PatternEntry::Star : PatternEntry::Zero;
        }
    return p;
}

PatternMatrix probe_pattern(const ProbeGraph& pg) {
    const int n = pg.order();
    const int k = static_cast<int>(pg.nonprobes.size());
    std::vector<int> order = pg.reindex_nonprobes_last();
    PatternMatrix p(n - k, n);
    for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < n; ++j) {
            int u = order[i], v = order[j];
            if (u == v)
                p(i, j) = PatternEntry::Any;
            else
                p(i, j) = pg.graph.has_edge(u, v) ? PatternEntry::Star : PatternEntry::Zero;
        }
    return p;
}

bool matches_pattern(const RationalMatrix& m, const PatternMatrix& p) {
    if (m.rows() != p.rows() || m.cols() != p.cols())
        throw std::invalid_argument("pattern dimension mismatch");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            switch (p(i, j)) {
                case PatternEntry::Zero:
                    if (m(i, j) != 0) return false;
                    break;
                case PatternEntry::Star:
                    if (m(i, j) == 0) return false;
                    break;
                case PatternEntry::Any:
                    break;
            }
        }
    return true;
}

bool in_S_probe(const RationalMatrix& m, const ProbeGraph& pg) {
    const int n = pg.order();
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("in_S_probe: wrong size");
    if (!m.is_symmetric()) return false;
    VertexMask nmask = pg.nonprobe_mask();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if ((nmask >> u & 1) && (nmask >> v & 1)) continue; // N x N block is free
            bool edge = pg.graph.has_edge(u, v);
            if (edge != (m(u, v) != 0)) return false;
        }
    return true;
}

} // namespace probemr
