#pragma once

#include "toricsym/types.hpp"

#include <initializer_list>
#include <optional>

namespace toricsym {

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_rows(const std::vector<LatticePoint>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Integer& at(std::size_t r, std::size_t c);
    const Integer& at(std::size_t r, std::size_t c) const;

    IntVector row(std::size_t r) const;
    IntVector col(std::size_t c) const;
    IntMatrix transpose() const;

    IntVector apply(const IntVector& x) const;
    RatVector apply(const RatVector& x) const;
    LatticePoint apply(const LatticePoint& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
    friend bool operator<(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> diagonal;  // min(rows, cols) entries, nonnegative

    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form H = W * A, W unimodular.  Pivots are positive and
/// entries above each pivot reduced into [0, pivot).  Zero rows are kept at the bottom.
IntMatrix hermite_normal_form(const IntMatrix& a);

Integer determinant(const IntMatrix& a);
Rational determinant(const std::vector<RatVector>& rows);
bool is_unimodular(const IntMatrix& a);

/// Exact rank of a rational matrix given by rows.
std::size_t rank(const std::vector<RatVector>& rows);
std::size_t rank(const std::vector<IntVector>& rows);

/// Basis of {x : row . x = 0 for all rows}; `dim` is the ambient dimension.
std::vector<RatVector> kernel(const std::vector<RatVector>& rows, std::size_t dim);

/// Unique solution of A x = b for square nonsingular A; nullopt otherwise.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);
std::optional<RatVector> solve_rational(const std::vector<RatVector>& a_rows, const RatVector& b);

/// Inverse of a square rational matrix given by rows; nullopt when singular.
std::optional<std::vector<RatVector>> inverse(const std::vector<RatVector>& rows);

/// Primitive integer vector parallel to v (v != 0), preserving direction.
IntVector primitive_direction(const RatVector& v);

Integer gcd_of(const IntVector& v);

}  // namespace toricsym
