// SPDX-License-Identifier: MIT
//
// linalg.hpp
//
// Dense exact matrices with leftmost-pivot Gaussian elimination.

#ifndef HTT_LINALG_HPP
#define HTT_LINALG_HPP

#include "htt/scalar.hpp"

#include <optional>
#include <vector>

namespace htt
{

using Column = std::vector<Scalar>;

class Matrix
{
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    static Matrix from_columns(int rows, const std::vector<Column>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    Column column(int c) const;
    Column apply(const Column& x) const;

private:
    int rows_;
    int cols_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form; pivot columns chosen leftmost first.
struct Echelon
{
    Matrix reduced;
    std::vector<int> pivots;
};

Echelon row_reduce(Matrix m);
int rank(const Matrix& m);

// Basis of the null space, one vector per free column (free entry 1).
std::vector<Column> kernel_basis(const Matrix& m);

// Some x with m x = b, if any.
std::optional<Column> solve(const Matrix& m, const Column& b);

// Throws std::domain_error for a singular matrix.
Matrix inverse(const Matrix& m);

// Appends candidates to `basis` in order whenever they raise the rank.
// Returns the indices of the accepted candidates.
std::vector<int> extend_basis(std::vector<Column>& basis, const std::vector<Column>& candidates, int dim);

}  // namespace htt

#endif
