#ifndef NOVIKOV_LINALG_HPP
#define NOVIKOV_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "novikov/numbers.hpp"

namespace novikov {

// one matrix row: (column, value) pairs sorted by column, no zeros
using SparseRow = std::vector<std::pair<int, Int>>;

class SparseIntMatrix {
public:
    explicit SparseIntMatrix(int cols) : cols_(cols) {}

    void add_row(SparseRow row);

    int cols() const { return cols_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const SparseRow& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

private:
    int cols_;
    std::vector<SparseRow> rows_;
};

/*
 * Incremental exact rank over the rationals. Rows are combined by integer
 * cross-multiplication and divided by the gcd of their entries, so every
 * intermediate value is an exact integer. Feeding rows can stop as soon as
 * the rank hits the column count.
 */
class RankAccumulator {
public:
    explicit RankAccumulator(int cols) : cols_(cols) {}

    // true iff the row was independent of everything absorbed so far
    bool absorb(SparseRow row);

    long rank() const { return static_cast<long>(pivots_.size()); }
    int cols() const { return cols_; }

private:
    int cols_;
    std::map<int, SparseRow> pivots_; // leading column -> reduced row
};

// rank over the rationals, all intermediates exact integers
long rank_exact(const SparseIntMatrix& m);

// dense Bareiss elimination (row and column pivoting); second route for rank
long rank_bareiss_dense(std::vector<std::vector<Int>> m);

// determinant of a square matrix by Bareiss elimination
Int determinant_bareiss(std::vector<std::vector<Int>> m);

/*
 * Row-space coordinate solver over the rationals: given rows r_1..r_d,
 * expresses a right-hand side as sum x_i r_i. Construction performs exact
 * Gaussian elimination with bookkeeping of the combination; it throws
 * RankDeficient if the rows are dependent. coordinates() throws
 * InconsistentSystem when the input lies outside the row space.
 */
class CoordinateSolver {
public:
    CoordinateSolver(const std::vector<SparseRow>& rows, int cols);

    std::vector<Rat> coordinates(const std::vector<std::pair<int, Rat>>& rhs) const;

    int cols() const { return cols_; }
    std::size_t row_count() const { return transform_.size(); }

private:
    int cols_;
    std::map<int, std::size_t> pivot_of_col_;
    std::vector<std::map<int, Rat>> echelon_;   // pivot coefficient 1
    std::vector<std::map<int, Rat>> transform_; // echelon_[i] = sum transform_[i][j] * row_j
};

} // namespace novikov

#endif // NOVIKOV_LINALG_HPP
