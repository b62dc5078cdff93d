// SPDX-License-Identifier: MIT

#include "htt/linalg.hpp"

#include <stdexcept>

namespace htt
{

Matrix Matrix::from_columns(int rows, const std::vector<Column>& cols)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    return m;
}

Column Matrix::column(int c) const
{
    Column out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
    return out;
}

Column Matrix::apply(const Column& x) const
{
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Column out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[static_cast<std::size_t>(c)].is_zero())
                out[static_cast<std::size_t>(r)] += at(r, c) * x[static_cast<std::size_t>(c)];
    return out;
}

Echelon row_reduce(Matrix m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m.cols() && row < m.rows(); ++c)
    {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero())
            {
                p = r;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
        const Scalar inv = m.at(row, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int r = 0; r < m.rows(); ++r)
        {
            if (r == row || m.at(r, c).is_zero()) continue;
            const Scalar factor = m.at(r, c);
            for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<Column> kernel_basis(const Matrix& m)
{
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Column> out;
    for (int f = 0; f < m.cols(); ++f)
    {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Column x(static_cast<std::size_t>(m.cols()));
        x[static_cast<std::size_t>(f)] = Scalar(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            x[static_cast<std::size_t>(e.pivots[i])] = -e.reduced.at(static_cast<int>(i), f);
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Column> solve(const Matrix& m, const Column& b)
{
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r)
    {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[static_cast<std::size_t>(r)];
    }
    const Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Column x(static_cast<std::size_t>(m.cols()));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[static_cast<std::size_t>(e.pivots[i])] = e.reduced.at(static_cast<int>(i), m.cols());
    return x;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r)
    {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Scalar(1);
    }
    const Echelon e = row_reduce(aug);
    if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
        throw std::domain_error("singular matrix");
    Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = e.reduced.at(r, n + c);
    return out;
}

std::vector<int> extend_basis(std::vector<Column>& basis, const std::vector<Column>& candidates, int dim)
{
    std::vector<int> accepted;
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        std::vector<Column> trial = basis;
        trial.push_back(candidates[i]);
        if (rank(Matrix::from_columns(dim, trial)) == static_cast<int>(trial.size()))
        {
            basis = std::move(trial);
            accepted.push_back(static_cast<int>(i));
        }
    }
    return accepted;
}

}  // namespace htt
