#include "toricsym/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toricsym {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ValidationError("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValidationError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticePoint>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValidationError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
    }
    return m;
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix index");
    return (*this)(r, c);
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix index");
    return (*this)(r, c);
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
    if (x.size() != cols_) throw ValidationError("dimension mismatch in matrix-vector product");
    IntVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

RatVector IntMatrix::apply(const RatVector& x) const {
    if (x.size() != cols_) throw ValidationError("dimension mismatch in matrix-vector product");
    RatVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

LatticePoint IntMatrix::apply(const LatticePoint& x) const {
    if (x.size() != cols_) throw ValidationError("dimension mismatch in matrix-vector product");
    LatticePoint y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c).get_si() * x[c];
        y[r] = s;
    }
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("dimension mismatch in matrix product");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << to_string(m.row(r));
    }
    os << ']';
    return os.str();
}

std::size_t SmithDecomposition::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_i += q * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) += q * m(j, c);
}

void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) += q * m(r, j);
}

// Floor-free quotient so that the remainder a - q*b has |.| < |b|.
Integer trunc_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
    if (input.rows() == 0 || input.cols() == 0) throw ValidationError("smith_normal_form: empty matrix");
    IntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    Integer mag = abs(a(i, j));
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) goto finished;
            swap_rows(a, t, pr);
            swap_rows(u, t, pr);
            swap_cols(a, t, pc);
            swap_cols(v, t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = trunc_quotient(a(i, t), a(t, t));
                add_row(a, i, t, -q);
                add_row(u, i, t, -q);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = trunc_quotient(a(t, j), a(t, t));
                add_col(a, j, t, -q);
                add_col(v, j, t, -q);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(a, t, i, Integer(1));
                        add_row(u, t, i, Integer(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
        }
    }
finished:
    SmithDecomposition out{std::move(u), std::move(v), {}};
    out.diagonal.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a(t, t);
    return out;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < n && pivot_row < m; ++c) {
        // Euclid on column c among rows >= pivot_row.
        for (;;) {
            std::size_t best = m;
            for (std::size_t r = pivot_row; r < m; ++r)
                if (a(r, c) != 0 && (best == m || abs(a(r, c)) < abs(a(best, c)))) best = r;
            if (best == m) break;
            swap_rows(a, pivot_row, best);
            bool clean = true;
            for (std::size_t r = pivot_row + 1; r < m; ++r) {
                if (a(r, c) == 0) continue;
                Integer q = trunc_quotient(a(r, c), a(pivot_row, c));
                add_row(a, r, pivot_row, -q);
                if (a(r, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(pivot_row, c) == 0) continue;
        if (a(pivot_row, c) < 0)
            for (std::size_t j = 0; j < n; ++j) a(pivot_row, j) = -a(pivot_row, j);
        const Integer& p = a(pivot_row, c);
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), p.get_mpz_t());
            if (q != 0) add_row(a, r, pivot_row, -q);
        }
        ++pivot_row;
    }
    return a;
}

Integer determinant(const IntMatrix& input) {
    if (!input.square()) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = input;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            swap_rows(a, k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
    if (!a.square()) throw ValidationError("is_unimodular: matrix is not square");
    Integer d = determinant(a);
    return d == 1 || d == -1;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        // pivots come from the first `cols` columns; any augmented columns ride along
        const std::size_t width = m[r].size();
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < width; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < width; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational determinant(const std::vector<RatVector>& rows) {
    const std::size_t n = rows.size();
    std::vector<RatVector> m = rows;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) throw ValidationError("determinant of a non-square matrix");
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::size_t rank(const std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    std::vector<RatVector> m = rows;
    return rref(m, rows.front().size()).size();
}

std::size_t rank(const std::vector<IntVector>& rows) {
    std::vector<RatVector> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_rational(r));
    return rank(m);
}

std::vector<RatVector> kernel(const std::vector<RatVector>& rows, std::size_t dim) {
    std::vector<RatVector> m = rows;
    for (auto& r : m)
        if (r.size() != dim) throw ValidationError("kernel: row length mismatch");
    auto pivots = rref(m, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVector x(dim);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVector> solve_rational(const std::vector<RatVector>& a_rows, const RatVector& b) {
    const std::size_t n = a_rows.size();
    if (b.size() != n) throw ValidationError("solve_rational: shape mismatch");
    for (const auto& r : a_rows)
        if (r.size() != n) return std::nullopt;
    std::vector<RatVector> m(n, RatVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a_rows[i][j];
        m[i][n] = b[i];
    }
    auto pivots = rref(m, n);
    if (pivots.size() != n) return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw ValidationError("solve_rational: shape mismatch");
    if (!a.square()) return std::nullopt;
    std::vector<RatVector> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(to_rational(a.row(r)));
    return solve_rational(rows, b);
}

std::optional<std::vector<RatVector>> inverse(const std::vector<RatVector>& rows) {
    const std::size_t n = rows.size();
    std::vector<RatVector> m(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ValidationError("inverse: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
        m[i][n + i] = 1;
    }
    auto pivots = rref(m, n);
    if (pivots.size() != n) return std::nullopt;
    std::vector<RatVector> inv(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitive_direction(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        out[i] = s.get_num();
    }
    Integer g = gcd_of(out);
    if (g == 0) throw ValidationError("primitive_direction of the zero vector");
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace toricsym
