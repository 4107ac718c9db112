#pragma once

#include <optional>
#include <vector>

#include "jointkit/fp.hpp"

namespace jointkit {

/// Dense matrix over F_p. Entries are reduced raw values sharing one modulus.
class Matrix {
public:
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const PrimeField& field, std::size_t n);
    static Matrix from_rows(const PrimeField& field, const std::vector<Vec>& rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u64& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    u64 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec apply(const Vec& x) const; // matrix * column vector

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<u64> a_;

    friend struct Elimination;
};

/// Result of forward elimination: pivot columns in order plus the reduced matrix.
struct Elimination {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }

    /// Forward elimination with lowest-index pivot preference; pivots normalized to 1.
    static Elimination run(Matrix m);
};

std::size_t rank(const Matrix& m);

/// A nonzero v with M v = 0. Deterministic: the lowest-index free variable is
/// set to 1, every other free variable to 0. Throws TrivialNullspace at full
/// column rank.
Vec nullspace_vector(const Matrix& m);

/// Reduced row echelon form with zero rows dropped; the canonical basis of a row space.
Matrix row_space_rref(const Matrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solve M x = b when a unique solution may not exist: returns one solution or
/// nullopt if inconsistent. Free variables are set to 0.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Matrix matmul(const Matrix& a, const Matrix& b);

} // namespace jointkit
